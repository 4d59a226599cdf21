#include "tropkit/numeric.hpp"

#include <cctype>

#include "tropkit/errors.hpp"

namespace tropkit {

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rat& x) {
  if (is_integer(x)) return num(x).str();
  return num(x).str() + "/" + den(x).str();
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t slash = text.find('/');
  Int p, q = 1;
  try {
    if (slash == std::string::npos) {
      p = Int(text);
    } else {
      p = Int(text.substr(0, slash));
      q = Int(text.substr(slash + 1));
    }
  } catch (const std::runtime_error&) {
    throw ParseError("bad rational literal '" + text + "'");
  }
  if (q == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rat(p, q);
}

Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= Int(n - i);
    r /= Int(i + 1);
  }
  return r;
}

}  // namespace tropkit
