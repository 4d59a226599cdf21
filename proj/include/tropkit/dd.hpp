#pragma once

#include <vector>

#include "tropkit/lattice.hpp"
#include "tropkit/vec.hpp"

namespace tropkit {

// Double description: exact conversion between the two descriptions of a
// rational polyhedral cone. This is the geometry workhorse behind cones,
// hulls, facet enumeration and feasibility tests.

struct DDResult {
  // Primitive extreme rays of C ∩ lineality^⊥, lex-sorted. Together with
  // the lineality space they generate C.
  std::vector<VecZ> rays;
  // Saturated basis of the lineality space { x in C : -x in C }.
  Sublattice lineality;
};

// Extreme rays of { x : eq·x = 0 for all equations, b·x >= 0 for all
// inequality normals b }.
DDResult extreme_rays(std::size_t n, const std::vector<VecZ>& equations,
                      const std::vector<VecZ>& inequalities);

struct HRep {
  std::vector<VecZ> equations;     // affine-span cutting equalities
  std::vector<VecZ> inequalities;  // irredundant facet normals, b·x >= 0
};

// Canonical halfspace description of the cone generated by `rays` (not
// required to be extreme or primitive; lineality in the generated cone is
// handled). Inequalities are irredundant facet normals within the span.
HRep halfspaces_from_rays(std::size_t n, const std::vector<VecZ>& rays);

}  // namespace tropkit
