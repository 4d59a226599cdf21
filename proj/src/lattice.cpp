#include "tropkit/lattice.hpp"

#include <algorithm>
#include <cassert>

#include "tropkit/errors.hpp"

namespace tropkit {

namespace {

// Floor division; q > 0.
Int fdiv(const Int& a, const Int& q) {
  Int m = a % q;
  if (m < 0) m += q;
  return (a - m) / q;
}

void negate_row(VecZ& row) {
  for (auto& x : row) x = -x;
}

void submul_row(VecZ& target, const VecZ& src, const Int& q) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] -= q * src[i];
}

}  // namespace

PrimitiveDecomposition primitive(const VecZ& v) {
  if (is_zero(v)) throw DomainError("primitive: zero vector");
  Int g = content(v);
  VecZ p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
  return {std::move(p), g};
}

HermiteResult hermite_normal_form(const MatZ& m) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  MatZ h = m;
  MatZ u = MatZ::identity(nrows);

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < ncols && pivot_row < nrows; ++c) {
    // Gcd elimination in column c among rows >= pivot_row. The row with the
    // smallest nonzero |entry| (lowest index on ties) is the working pivot.
    while (true) {
      std::size_t best = nrows;
      for (std::size_t i = pivot_row; i < nrows; ++i) {
        if (h[i][c] == 0) continue;
        if (best == nrows || abs(h[i][c]) < abs(h[best][c])) best = i;
      }
      if (best == nrows) break;  // column is zero below pivot_row
      if (best != pivot_row) {
        std::swap(h[best], h[pivot_row]);
        std::swap(u[best], u[pivot_row]);
      }
      bool others = false;
      for (std::size_t i = pivot_row + 1; i < nrows; ++i) {
        if (h[i][c] == 0) continue;
        Int q = h[i][c] / h[pivot_row][c];
        submul_row(h[i], h[pivot_row], q);
        submul_row(u[i], u[pivot_row], q);
        if (h[i][c] != 0) others = true;
      }
      if (!others) break;
    }
    if (h[pivot_row][c] == 0) continue;
    if (h[pivot_row][c] < 0) {
      negate_row(h[pivot_row]);
      negate_row(u[pivot_row]);
    }
    // Entries above the pivot land in [0, pivot).
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q = fdiv(h[i][c], h[pivot_row][c]);
      if (q != 0) {
        submul_row(h[i], h[pivot_row], q);
        submul_row(u[i], u[pivot_row], q);
      }
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

std::vector<Int> smith_invariants(const MatZ& m) {
  MatZ a = m;
  const std::size_t nrows = a.rows();
  const std::size_t ncols = a.cols();
  std::vector<Int> divisors;

  std::size_t t = 0;
  while (t < nrows && t < ncols) {
    // Smallest |entry| in the trailing submatrix, ties by row then column.
    std::size_t pi = nrows, pj = ncols;
    for (std::size_t i = t; i < nrows; ++i)
      for (std::size_t j = t; j < ncols; ++j) {
        if (a[i][j] == 0) continue;
        if (pi == nrows || abs(a[i][j]) < abs(a[pi][pj])) {
          pi = i;
          pj = j;
        }
      }
    if (pi == nrows) break;  // trailing submatrix is zero
    std::swap(a[pi], a[t]);
    for (std::size_t i = t; i < nrows; ++i) std::swap(a[i][pj], a[i][t]);

    bool clean = true;
    for (std::size_t i = t + 1; i < nrows; ++i) {
      if (a[i][t] == 0) continue;
      Int q = a[i][t] / a[t][t];
      submul_row(a[i], a[t], q);
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < ncols; ++j) {
      if (a[t][j] == 0) continue;
      Int q = a[t][j] / a[t][t];
      for (std::size_t i = t; i < nrows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller pivot appeared, redo this step

    // Pivot must divide the rest of the submatrix.
    bool divides = true;
    for (std::size_t i = t + 1; i < nrows && divides; ++i)
      for (std::size_t j = t + 1; j < ncols && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t k = 0; k < ncols; ++k) a[t][k] += a[i][k];
          divides = false;
        }
    if (!divides) continue;

    divisors.push_back(abs(a[t][t]));
    ++t;
  }
  return divisors;
}

MatZ integer_kernel(const MatZ& m) {
  // Kernel of x -> m x. Row-reduce the transpose with a unimodular
  // transform; transform rows matching zero rows of the HNF are a basis of
  // the (saturated) kernel lattice.
  const std::size_t n = m.cols();
  MatZ at(n, m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) at[j][i] = m[i][j];
  HermiteResult hr = hermite_normal_form(at);
  MatZ kernel(0, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(hr.h[i])) kernel.append_row(hr.u[i]);
  }
  return kernel;
}

std::size_t rank(const MatZ& m) {
  HermiteResult hr = hermite_normal_form(m);
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!is_zero(hr.h[i])) ++r;
  return r;
}

Sublattice saturate(const MatZ& span_generators) {
  const std::size_t n = span_generators.cols();
  MatZ kernel = integer_kernel(span_generators);
  MatZ basis(0, n);
  if (kernel.rows() == 0) {
    basis = MatZ::identity(n);
  } else {
    basis = integer_kernel(kernel);
  }
  // HNF-canonical so equal sublattices have equal bases.
  HermiteResult hr = hermite_normal_form(basis);
  MatZ canon(0, n);
  for (std::size_t i = 0; i < hr.h.rows(); ++i)
    if (!is_zero(hr.h[i])) canon.append_row(hr.h[i]);
  return Sublattice{std::move(canon)};
}

std::optional<Int> lattice_index(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DomainError("lattice_index: ambient dimensions differ");
  const std::size_t n = a.ambient_dim();
  MatZ stacked(0, n);
  for (const auto& r : a.basis.row_list()) stacked.append_row(r);
  for (const auto& r : b.basis.row_list()) stacked.append_row(r);
  std::vector<Int> inv = smith_invariants(stacked);
  if (inv.size() < n) return std::nullopt;
  Int idx = 1;
  for (const auto& d : inv) idx *= d;
  return idx;
}

namespace {

// Bareiss fraction-free determinant.
Int determinant(MatZ a) {
  const std::size_t n = a.rows();
  assert(n == a.cols());
  if (n == 0) return 1;
  Int denom = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / denom;
      }
      a[i][k] = 0;
    }
    denom = a[k][k];
  }
  return sgn > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace

Rat integral_volume_form_sq(const Sublattice& e_basis) {
  const std::size_t r = e_basis.rank();
  MatZ gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      gram[i][j] = dot(e_basis.basis[i], e_basis.basis[j]);
  Int d = determinant(gram);
  if (d <= 0) throw DomainError("integral_volume_form: basis is not independent");
  return Rat(1, d);
}

std::optional<VecQ> solve_rational(const std::vector<VecQ>& a, const VecQ& b) {
  if (a.size() != b.size()) throw DomainError("solve: shape mismatch");
  if (a.empty()) return VecQ{};
  const std::size_t nrows = a.size();
  const std::size_t ncols = a.front().size();
  std::vector<VecQ> aug(nrows, VecQ(ncols + 1));
  for (std::size_t i = 0; i < nrows; ++i) {
    std::copy(a[i].begin(), a[i].end(), aug[i].begin());
    aug[i][ncols] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < nrows; ++c) {
    std::size_t p = nrows;
    for (std::size_t i = row; i < nrows; ++i)
      if (aug[i][c] != 0) {
        p = i;
        break;
      }
    if (p == nrows) continue;
    std::swap(aug[p], aug[row]);
    Rat inv = Rat(1) / aug[row][c];
    for (auto& x : aug[row]) x *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == row || aug[i][c] == 0) continue;
      Rat f = aug[i][c];
      for (std::size_t j = c; j <= ncols; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < nrows; ++i)
    if (aug[i][ncols] != 0) return std::nullopt;
  VecQ x(ncols, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug[i][ncols];
  return x;
}

std::size_t rank_rational(const std::vector<VecQ>& rows) {
  if (rows.empty()) return 0;
  std::vector<VecQ> a = rows;
  const std::size_t nrows = a.size();
  const std::size_t ncols = a.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < nrows; ++c) {
    std::size_t p = nrows;
    for (std::size_t i = row; i < nrows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p == nrows) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < nrows; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[row][c];
      for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  return row;
}

bool in_span(const std::vector<VecQ>& rows, const VecQ& v) {
  if (is_zero(v)) return true;
  std::vector<VecQ> with = rows;
  with.push_back(v);
  return rank_rational(rows) == rank_rational(with);
}

}  // namespace tropkit
