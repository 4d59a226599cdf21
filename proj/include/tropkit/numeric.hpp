#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tropkit {

// All kernel arithmetic is exact: arbitrary-precision integers and
// rationals, never floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline int sign(const Int& x) { return x.sign(); }
inline int sign(const Rat& x) { return x.sign(); }

// Canonical text form: "p" when integral, "p/q" otherwise.
std::string to_string(const Int& x);
std::string to_string(const Rat& x);

// Parses "p" or "p/q" with optional leading sign. Throws ParseError.
Rat parse_rat(const std::string& text);

// Exact factorial, n >= 0.
Int factorial(unsigned n);

// Binomial coefficient C(n, k), exact.
Int binomial(unsigned n, unsigned k);

}  // namespace tropkit
