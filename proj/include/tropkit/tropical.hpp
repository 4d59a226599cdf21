#pragma once

#include <string>
#include <vector>

#include "tropkit/fan.hpp"
#include "tropkit/polytope.hpp"

namespace tropkit {

// One monomial c * x^alpha. The coefficient may be the symbolic marker
// "generic" (a nonzero rational left unspecified); generic terms never
// cancel and absorb numeric contributions to the same exponent.
struct LaurentTerm {
  VecZ exponent;
  Rat coefficient;
  bool generic = false;
};

// Finite exponent-to-coefficient map over Z^n: no zero coefficients, at
// least one term, terms sorted by exponent.
struct LaurentPolynomial {
  std::size_t n = 0;
  std::vector<LaurentTerm> terms;

  bool operator==(const LaurentPolynomial& o) const;
};

// Canonicalizes: combines like terms, drops zero terms, sorts. Throws
// ParseError when everything cancels (the empty polynomial is invalid).
LaurentPolynomial make_laurent(std::size_t n, const std::vector<LaurentTerm>& terms);

// Grammar: terms joined by + or -; term = [coefficient][*] followed by
// variable^exponent factors; variables are x, y, z or the indexed family
// x1..xn; exponents are integers, negative allowed; the coefficient "g"
// marks a symbolic-generic value. Throws ParseError carrying the offset
// of the offending character.
LaurentPolynomial parse_laurent(const std::string& text);

// Convex hull of the support.
LatticePolytope newton_polytope(const LaurentPolynomial& f);

struct TropicalHypersurface {
  WeightedFan weighted;  // (n-1)-dimensional, balanced
  LatticePolytope source_polytope;
};

// Weighted (n-1)-skeleton of the normal fan of the Newton polytope, each
// cone weighted by the lattice length of its dual edge. A single monomial
// gives the empty hypersurface (zero cycle); any other polynomial whose
// Newton polytope is not full-dimensional is rejected.
TropicalHypersurface tropical_hypersurface(const LaurentPolynomial& f);

// n! times the mixed volume of the n Newton polytopes: the generic
// solution count in the torus.
Rat bkk_count(const std::vector<LaurentPolynomial>& fs);

// The same count through the stable intersection of the two tropical
// hypersurface fans. Two polynomials in two variables only (hypersurface
// fans are complementary exactly when (n-1) + (n-1) = n).
Rat bkk_via_fans(const std::vector<LaurentPolynomial>& fs, const ShiftPolicy& policy = {});

// The tropicalization is the support of a pure fan: every maximal cone
// has dimension n-1 and the structure validates as a fan.
bool verify_bergman_shape(const TropicalHypersurface& t);

}  // namespace tropkit
