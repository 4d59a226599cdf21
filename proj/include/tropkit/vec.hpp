#pragma once

#include <cstddef>
#include <vector>

#include "tropkit/numeric.hpp"

namespace tropkit {

using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

// Dense integer matrix, row major. Rectangularity is enforced on
// construction; entries are arbitrary precision.
class MatZ {
 public:
  MatZ() = default;
  MatZ(std::size_t rows, std::size_t cols);
  explicit MatZ(std::vector<VecZ> rows);

  static MatZ identity(std::size_t n);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  VecZ& operator[](std::size_t i) { return data_[i]; }
  const VecZ& operator[](std::size_t i) const { return data_[i]; }

  const std::vector<VecZ>& row_list() const { return data_; }

  void append_row(VecZ row);

  bool operator==(const MatZ& other) const = default;

 private:
  std::vector<VecZ> data_;
  std::size_t cols_ = 0;
};

Int dot(const VecZ& a, const VecZ& b);
Rat dot(const VecZ& a, const VecQ& b);
Rat dot(const VecQ& a, const VecQ& b);

VecZ add(const VecZ& a, const VecZ& b);
VecZ sub(const VecZ& a, const VecZ& b);
VecZ negate(const VecZ& a);
VecZ scale(const VecZ& a, const Int& c);
VecQ add(const VecQ& a, const VecQ& b);
VecQ sub(const VecQ& a, const VecQ& b);
VecQ scale(const VecQ& a, const Rat& c);

bool is_zero(const VecZ& v);
bool is_zero(const VecQ& v);

VecQ to_rational(const VecZ& v);
// Requires every coordinate integral.
VecZ to_integer(const VecQ& v);
bool all_integral(const VecQ& v);

// Clears denominators and divides by the content: the unique primitive
// integer vector pointing the same way. Requires v != 0.
VecZ primitive_direction(const VecQ& v);

// gcd of |entries|; zero vector gives 0.
Int content(const VecZ& v);

// Lexicographic order, used everywhere a canonical order is needed.
bool lex_less(const VecZ& a, const VecZ& b);
bool lex_less(const VecQ& a, const VecQ& b);

std::string to_string(const VecZ& v);
std::string to_string(const VecQ& v);

}  // namespace tropkit
