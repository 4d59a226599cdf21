#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "tropkit/polytope.hpp"

namespace tropkit {

// Exact homogeneous polynomial of fixed degree: exponent vectors over m
// variables, all of total degree `degree`, mapped to nonzero rationals.
struct HomogeneousPolynomial {
  std::size_t num_vars = 0;
  std::size_t degree = 0;
  std::map<VecZ, Rat> coefficients;

  bool operator==(const HomogeneousPolynomial& o) const = default;
  bool is_zero() const { return coefficients.empty(); }
  Rat evaluate(const VecQ& point) const;
};

// Validates degrees and drops zero coefficients.
HomogeneousPolynomial make_homogeneous(std::size_t num_vars, std::size_t degree,
                                       const std::map<VecZ, Rat>& coefficients);

// Spanning set for a finite-dimensional subspace of the polytope algebra:
// same ambient dimension throughout, at least one member full-dimensional.
struct PolytopeBasis {
  std::vector<LatticePolytope> polytopes;
};

// All exponent vectors over m variables of total degree k, in lexicographic
// order (the canonical monomial indexing used by the catalecticant).
std::vector<VecZ> exponents_of_degree(std::size_t m, std::size_t k);

// P(x) = vol(x1 P1 + ... + xm Pm): the coefficient of x^k is the
// multinomial (n choose k) times the mixed volume of the multiset with ki
// copies of Pi.
HomogeneousPolynomial volume_polynomial(const PolytopeBasis& basis);

// Iterated partial derivative by the operator monomial (exponent vector
// over the same m variables). Over-differentiation yields the zero
// polynomial, not an error.
HomogeneousPolynomial apply_operator(const VecZ& op_monomial, const HomogeneousPolynomial& p);

struct HilbertFunction {
  std::vector<std::size_t> values;  // h_0 .. h_n

  bool operator==(const HilbertFunction& o) const = default;
};

// h_k = rank of the catalecticant map sending degree-k operator monomials
// to degree-(n-k) polynomials D -> D.P, computed exactly over the
// rationals. DomainError on the zero polynomial.
HilbertFunction hilbert_function(const HomogeneousPolynomial& p);

// h_0 = h_n = 1 and h_k = h_{n-k} throughout.
bool poincare_check(const HilbertFunction& h);

// Operators are polynomials in the partials, given as exponent -> rational
// (not necessarily homogeneous). True iff the operator kills p exactly.
bool annihilator_membership(const std::map<VecZ, Rat>& op, const HomogeneousPolynomial& p);

}  // namespace tropkit
