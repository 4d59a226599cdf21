#pragma once

#include <json.hpp>

#include <string>

#include "tropkit/algebra.hpp"
#include "tropkit/fan.hpp"
#include "tropkit/polytope.hpp"
#include "tropkit/tropical.hpp"

namespace tropkit {

using Json = nlohmann::ordered_json;

// Exact rationals travel as canonical "p" / "p/q" strings; plain JSON
// integers are also accepted on input.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

// {"dim": n, "vertices": [[int, ...], ...]}
Json polytope_to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const Json& j);

// {"dim": n, "cones": [{"generators": [[int, ...], ...], "weight": "p/q"}]}.
// Plain fans list their maximal cones and omit the weights; weighted fans
// list exactly the weighted cones. On input a missing weight defaults
// to 1, so plain fan files feed the weighted operations directly.
Json fan_to_json(const Fan& f);
Json weighted_fan_to_json(const WeightedFan& w);
Fan fan_from_json(const Json& j);
WeightedFan weighted_fan_from_json(const Json& j);

// {"n": int, "terms": [{"exp": [int, ...], "coef": "p/q" | "generic"}]}
Json polynomial_to_json(const LaurentPolynomial& f);
LaurentPolynomial polynomial_from_json(const Json& j);

// Monomial in m variables as text: letters x, y, z while m <= 3, the
// indexed family x1..xm beyond; "1" for the constant monomial.
std::string monomial_string(const VecZ& e);

// {"hilbert": [h0, ...], "poincare": bool, "volume_polynomial": {...}}
Json hilbert_report(const HomogeneousPolynomial& p);

// Deterministic 2D diagrams; DomainError unless the ambient dimension
// is 2. Fixed input produces byte-identical output.
std::string render_svg(const LatticePolytope& p);
std::string render_svg(const Fan& f);
std::string render_svg(const WeightedFan& w);

}  // namespace tropkit
