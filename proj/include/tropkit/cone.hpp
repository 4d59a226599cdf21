#pragma once

#include <cstddef>
#include <vector>

#include "tropkit/dd.hpp"
#include "tropkit/vec.hpp"

namespace tropkit {

// Strictly convex rational polyhedral cone carrying both descriptions,
// synchronized at construction. Rays are primitive extreme rays in
// lexicographic order, so equal cones compare equal structurally.
struct Cone {
  std::size_t ambient = 0;
  std::size_t dim = 0;
  std::vector<VecZ> rays;          // canonical V-rep; empty for the origin
  std::vector<VecZ> equations;     // span-cutting equalities (HNF rows)
  std::vector<VecZ> inequalities;  // irredundant facet normals within span

  bool contains(const VecQ& x) const;
  bool contains(const VecZ& x) const;
  // Relative interior within the linear span.
  bool in_relint(const VecQ& x) const;
  bool in_relint(const VecZ& x) const;

  bool operator==(const Cone& other) const {
    return ambient == other.ambient && rays == other.rays;
  }
};

// Total order on equal-ambient cones (by dimension, then ray lists); used
// wherever fans need canonical cone ordering.
bool cone_less(const Cone& a, const Cone& b);

// Builds from any generating set; throws DomainError when the generated
// cone contains a line. The origin cone is the empty generating set.
Cone cone_from_rays(std::size_t n, const std::vector<VecZ>& generators);

// Builds from { x : eq·x = 0, b·x >= 0 }; throws DomainError on lineality.
Cone cone_from_halfspaces(std::size_t n, const std::vector<VecZ>& equations,
                          const std::vector<VecZ>& inequalities);

// Intersection of strictly convex cones (always strictly convex).
Cone intersect(const Cone& a, const Cone& b);

// All faces, including the cone itself and the origin.
std::vector<Cone> faces(const Cone& c);

// Facets (codimension-1 faces); empty for the origin cone.
std::vector<Cone> cone_facets(const Cone& c);

bool is_face_of(const Cone& f, const Cone& c);

}  // namespace tropkit
