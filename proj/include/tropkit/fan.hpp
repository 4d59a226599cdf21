#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tropkit/cone.hpp"
#include "tropkit/polytope.hpp"

namespace tropkit {

// Face-closed collection of strictly convex cones with pairwise
// intersections that are common faces. Construct through validate_fan (or
// the owning operations); cones are kept in canonical order.
struct Fan {
  std::size_t ambient = 0;
  std::vector<Cone> cones;
  std::vector<std::size_t> maximal;  // indices of non-face cones

  std::size_t dim() const;
  std::vector<Cone> cones_of_dim(std::size_t k) const;
};

// Face-closes the given cones (auto-completion), then checks that every
// pairwise intersection is a common face; DomainError otherwise.
Fan validate_fan(std::size_t n, const std::vector<Cone>& cones);

// Support is all of R^n, decided by exact volume accounting of the maximal
// cones against the cube [-1,1]^n.
bool is_complete(const Fan& f);

// Lattice vector in sigma whose class generates N_sigma / N_tau (= Z);
// tau must be a facet of sigma.
VecZ quotient_generator(const Cone& sigma, const Cone& tau);

// Fan whose cones are the pairwise intersections of cones of a and b.
Fan common_refinement(const Fan& a, const Fan& b);

// Weighted d-fan: every maximal cone has dimension d and carries a
// rational weight. Zero weights are legal and mean "absent" for support
// and equivalence purposes.
struct WeightedFan {
  Fan fan;
  std::size_t d = 0;
  std::map<std::vector<VecZ>, Rat> weights;  // keyed by canonical ray lists

  std::vector<Cone> weighted_cones() const { return fan.cones_of_dim(d); }
  Rat weight_of(const Cone& c) const;
};

// Builds the face closure of the given d-cones and validates it; all cones
// must share dimension d (pass d explicitly so empty fans stay typed).
WeightedFan make_weighted_fan(std::size_t n, std::size_t d,
                              const std::vector<std::pair<Cone, Rat>>& weighted_cones);

// Balancing: for every (d-1)-cone tau, sum of weight(sigma) * xi_{sigma,tau}
// over the d-cones sigma containing tau lies in span(tau).
bool is_balanced(const WeightedFan& w);

// Same support (ignoring zero-weight cones) and same induced weights on
// every common overlap.
bool weighted_equivalent(const WeightedFan& a, const WeightedFan& b);

// Refines both supports into one arrangement fan and adds weights; cones
// outside a support contribute 0.
WeightedFan weighted_sum(const WeightedFan& a, const WeightedFan& b);

struct ShiftedComplex {
  WeightedFan base;
  VecQ shift;
};

// True iff supp(a) and shift + supp(b) meet in finitely many points, each
// in the relative interior of a maximal cone on both sides. Requires
// complementary dimensions d_a + d_b = ambient.
bool is_transverse(const WeightedFan& a, const ShiftedComplex& shifted);

// Intersection count of supp(a) against shift + supp(b) for one explicit
// shift: sum of w(sigma) w'(sigma') [Z^n : L_sigma + L_sigma'] over
// transverse intersection points; nullopt when the shift is
// non-transverse. No balancing requirement — this is the raw per-shift
// number that balancing makes shift-independent.
std::optional<Rat> intersection_number_at_shift(const WeightedFan& a, const WeightedFan& b,
                                                const VecQ& shift);

struct ShiftPolicy {
  std::uint64_t seed = 0;
  unsigned verifications = 1;  // distinct generic shifts that must agree
  unsigned max_retries = 32;   // non-transverse samples tolerated in total
};

// Stable intersection number of two balanced fans of complementary
// dimension. DomainError if either fan is unbalanced; ResourceError when
// shift sampling exhausts its retries.
Rat stable_intersection_number(const WeightedFan& a, const WeightedFan& b,
                               const ShiftPolicy& policy);

// Deterministic generic-shift stream: rational coordinates with odd
// denominators derived from a seeded mt19937_64.
VecQ sample_shift(std::size_t n, std::uint64_t seed, unsigned index);

// Normal fan of a full-dimensional lattice polytope: maximal cones are the
// duals of the vertex cones; rays are the primitive inward facet normals.
Fan normal_fan(const LatticePolytope& p);

}  // namespace tropkit
