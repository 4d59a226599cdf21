#include "tropkit/vec.hpp"

#include <algorithm>
#include <cassert>

#include "tropkit/errors.hpp"

namespace tropkit {

MatZ::MatZ(std::size_t rows, std::size_t cols)
    : data_(rows, VecZ(cols)), cols_(cols) {}

MatZ::MatZ(std::vector<VecZ> rows) : data_(std::move(rows)) {
  if (!data_.empty()) {
    cols_ = data_.front().size();
    for (const auto& r : data_) {
      if (r.size() != cols_) throw DomainError("matrix rows have mixed lengths");
    }
  }
}

MatZ MatZ::identity(std::size_t n) {
  MatZ m(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void MatZ::append_row(VecZ row) {
  if (data_.empty()) {
    cols_ = row.size();
  } else if (row.size() != cols_) {
    throw DomainError("appending row of wrong length");
  }
  data_.push_back(std::move(row));
}

Int dot(const VecZ& a, const VecZ& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const VecZ& a, const VecQ& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Rat dot(const VecQ& a, const VecQ& b) {
  assert(a.size() == b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

VecZ add(const VecZ& a, const VecZ& b) {
  assert(a.size() == b.size());
  VecZ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

VecZ sub(const VecZ& a, const VecZ& b) {
  assert(a.size() == b.size());
  VecZ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

VecZ negate(const VecZ& a) {
  VecZ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

VecZ scale(const VecZ& a, const Int& c) {
  VecZ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

VecQ add(const VecQ& a, const VecQ& b) {
  assert(a.size() == b.size());
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

VecQ sub(const VecQ& a, const VecQ& b) {
  assert(a.size() == b.size());
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

VecQ scale(const VecQ& a, const Rat& c) {
  VecQ r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

bool is_zero(const VecZ& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const VecQ& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

VecQ to_rational(const VecZ& v) {
  VecQ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

VecZ to_integer(const VecQ& v) {
  VecZ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) throw DomainError("vector is not integral");
    r[i] = num(v[i]);
  }
  return r;
}

bool all_integral(const VecQ& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rat& x) { return is_integer(x); });
}

VecZ primitive_direction(const VecQ& v) {
  if (is_zero(v)) throw DomainError("primitive direction of zero vector");
  Int common_den = 1;
  for (const auto& x : v) common_den = lcm(common_den, den(x));
  VecZ scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    scaled[i] = num(v[i]) * (common_den / den(v[i]));
  Int g = content(scaled);
  for (auto& x : scaled) x /= g;
  return scaled;
}

Int content(const VecZ& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return abs(g);
}

bool lex_less(const VecZ& a, const VecZ& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const VecQ& a, const VecQ& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const VecZ& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string to_string(const VecQ& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace tropkit
