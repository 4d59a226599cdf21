#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tropkit/numeric.hpp"
#include "tropkit/vec.hpp"

namespace tropkit {

struct Facet {
  VecZ normal;  // primitive inward; polytope satisfies normal·x >= offset
  Int offset;   // facet lies on { x : normal·x = offset }
  std::vector<std::size_t> vertex_indices;  // vertices on the facet
};

// Convex hull of integer points, vertex-based. Vertices are lex-ordered so
// equal polytopes compare equal. Facets are computed at construction for
// full-dimensional polytopes (values are immutable afterwards, so the type
// is freely shareable across threads).
class LatticePolytope {
 public:
  LatticePolytope() = default;

  static LatticePolytope hull(std::size_t n, const std::vector<VecZ>& points);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return dim_; }
  const std::vector<VecZ>& vertices() const { return vertices_; }

  // Full-dimensional polytopes only; DomainError otherwise.
  const std::vector<Facet>& facets() const;

  bool operator==(const LatticePolytope& o) const {
    return n_ == o.n_ && vertices_ == o.vertices_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<VecZ> vertices_;
  std::vector<Facet> facets_;
};

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

// c > 0; the scaled vertices must stay integral.
LatticePolytope scale(const LatticePolytope& p, const Rat& c);

// Exact Euclidean n-volume by pyramid decomposition over facets.
Rat volume(const LatticePolytope& p);

// Independent volume oracle: lattice-point counts of kP for k = 0..n give
// the Ehrhart polynomial, whose leading coefficient is the volume.
// Requires dim(P) = n; enumeration capped by `budget` candidate points.
Rat volume_ehrhart_oracle(const LatticePolytope& p, const Int& budget = Int(10000000));

// Mixed volume of n polytopes in R^n via inclusion-exclusion over
// Minkowski subset sums.
Rat mixed_volume(const std::vector<LatticePolytope>& polytopes);

// (dim-1)-volume of a facet normalized so a fundamental domain of the
// facet-plane lattice has volume 1 (lattice length of an edge when n = 2).
Rat facet_integral_volume(const LatticePolytope& p, const Facet& f);

// Sum of integral facet volumes times primitive inward normals; zero for
// every lattice polytope.
VecQ pascal_residual(const LatticePolytope& p);

struct VirtualPolytope {
  LatticePolytope plus;
  LatticePolytope minus;
};

// Equality in the Minkowski-difference quotient: a+ + b- == b+ + a-.
bool virtual_equal(const VirtualPolytope& a, const VirtualPolytope& b);

// ---- rational-vertex helpers (shared with the fan module) ----

// Exact Euclidean volume of conv(points) in R^n (0 when the hull is not
// full-dimensional). Points need not be extreme.
Rat volume_of_rational_points(std::size_t n, const std::vector<VecQ>& points);

// Whether { x : a·x >= c for all (a, c) } is nonempty (boundedness not
// required).
bool halfspaces_feasible(std::size_t n, const std::vector<std::pair<VecZ, Rat>>& ineqs);

// Vertices of { x : a·x >= c for all (a, c) }, which must be bounded;
// DomainError on an unbounded feasible set. An empty result means the
// system is infeasible (bounded nonempty sets always have a vertex).
std::vector<VecQ> vertices_of_halfspaces(std::size_t n,
                                         const std::vector<std::pair<VecZ, Rat>>& ineqs);

}  // namespace tropkit
