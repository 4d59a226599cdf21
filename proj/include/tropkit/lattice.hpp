#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tropkit/vec.hpp"

namespace tropkit {

// Exact integer linear algebra: normal forms, saturation, indices,
// primitive vectors and the integral volume normalization. Everything here
// is pure and rounding-free.

struct PrimitiveDecomposition {
  VecZ primitive;  // coprime entries, same direction as the input
  Int length;      // integral length: input = primitive * length
};

// Requires v != 0; throws DomainError otherwise.
PrimitiveDecomposition primitive(const VecZ& v);

struct HermiteResult {
  MatZ h;  // row-style Hermite normal form
  MatZ u;  // unimodular, u * m == h
};

// Row-style HNF with deterministic leftmost-lowest pivoting: pivots are
// positive, entries above a pivot are reduced into [0, pivot).
HermiteResult hermite_normal_form(const MatZ& m);

// Elementary divisors d1 | d2 | ... (positive, one per rank).
std::vector<Int> smith_invariants(const MatZ& m);

// Basis of the integer kernel { x : m x = 0 }; the kernel lattice is
// saturated by construction. Rows of the result are the basis vectors.
MatZ integer_kernel(const MatZ& m);

// Rank over the rationals.
std::size_t rank(const MatZ& m);

struct Sublattice {
  MatZ basis;  // rows generate the sublattice; linearly independent
  std::size_t rank() const { return basis.rows(); }
  std::size_t ambient_dim() const { return basis.cols(); }
};

// Basis of span_Q(generators) intersected with Z^n. Idempotent; the
// returned basis is in HNF so equal sublattices compare equal.
Sublattice saturate(const MatZ& span_generators);

// Index of A + B (lattice sum) inside Z^n; nullopt means infinite
// (rank(A + B) < n).
std::optional<Int> lattice_index(const Sublattice& a, const Sublattice& b);

// Squared scaling factor relating integral volume to Euclidean volume on
// the span: integral = sqrt(result) * ... i.e. result = 1 / det Gram(basis).
// Kept squared so the kernel stays rational; for codimension-1 sublattices
// it equals 1/|xi|^2 for the primitive normal xi.
Rat integral_volume_form_sq(const Sublattice& e_basis);

// Solves a x = b over the rationals (a given row-wise, x unknown column);
// nullopt when inconsistent. When the solution space is positive
// dimensional an arbitrary solution is returned.
std::optional<VecQ> solve_rational(const std::vector<VecQ>& a, const VecQ& b);

std::size_t rank_rational(const std::vector<VecQ>& rows);

// True iff v lies in the rational row span of `rows`.
bool in_span(const std::vector<VecQ>& rows, const VecQ& v);

}  // namespace tropkit
