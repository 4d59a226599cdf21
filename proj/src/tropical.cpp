#include "tropkit/tropical.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "tropkit/errors.hpp"
#include "tropkit/lattice.hpp"

namespace tropkit {

namespace {

// Recursive-descent parser over the raw text; p_ always points at the
// next unconsumed character, so ParseError positions are exact offsets.
class LaurentParser {
 public:
  explicit LaurentParser(const std::string& text) : s_(text) {}

  LaurentPolynomial run() {
    skip_ws();
    bool negative = take_sign(false);
    parse_term(negative);
    for (skip_ws(); !eof(); skip_ws()) {
      char c = s_[p_];
      if (c != '+' && c != '-') fail("expected '+' or '-' between terms");
      ++p_;
      skip_ws();
      parse_term(c == '-');
    }
    if (raw_.empty()) fail("expected a term");
    return assemble();
  }

 private:
  struct RawTerm {
    std::map<std::string, Int> powers;
    Rat coefficient{1};
    bool generic = false;
  };

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, p_); }
  bool eof() const { return p_ >= s_.size(); }
  void skip_ws() {
    while (!eof() && (s_[p_] == ' ' || s_[p_] == '\t')) ++p_;
  }
  bool take_sign(bool require) {
    if (!eof() && (s_[p_] == '+' || s_[p_] == '-')) return s_[p_++] == '-';
    if (require) fail("expected a sign");
    return false;
  }
  bool at_digit() const { return !eof() && s_[p_] >= '0' && s_[p_] <= '9'; }
  bool at_variable() const {
    return !eof() && (s_[p_] == 'x' || s_[p_] == 'y' || s_[p_] == 'z');
  }

  Int parse_digits() {
    if (!at_digit()) fail("expected digits");
    std::size_t start = p_;
    while (at_digit()) ++p_;
    return Int(s_.substr(start, p_ - start));
  }

  Rat parse_coefficient() {
    Int numerator = parse_digits();
    skip_ws();
    if (!eof() && s_[p_] == '/') {
      ++p_;
      skip_ws();
      std::size_t at = p_;
      Int denominator = parse_digits();
      if (denominator == 0) throw ParseError("zero denominator", at);
      return Rat(numerator, denominator);
    }
    return Rat(numerator);
  }

  void parse_factor(RawTerm& term) {
    std::string name(1, s_[p_]);
    ++p_;
    if (name == "x" && at_digit()) {
      std::size_t at = p_;
      Int index = parse_digits();
      if (index < 1) throw ParseError("variable indices start at 1", at);
      if (index > 1024) throw ParseError("variable index too large", at);
      name += index.str();
      indexed_ = true;
    } else {
      lettered_ = true;
    }
    Int exponent(1);
    skip_ws();
    if (!eof() && s_[p_] == '^') {
      ++p_;
      skip_ws();
      bool negative = false;
      if (!eof() && s_[p_] == '-') {
        negative = true;
        ++p_;
      }
      exponent = parse_digits();
      if (negative) exponent = -exponent;
    }
    term.powers[name] += exponent;
  }

  void parse_term(bool negative) {
    RawTerm term;
    bool any = false;
    if (at_digit()) {
      term.coefficient = parse_coefficient();
      any = true;
    } else if (!eof() && s_[p_] == 'g' &&
               (p_ + 1 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[p_ + 1])))) {
      term.generic = true;
      ++p_;
      any = true;
    }
    while (true) {
      skip_ws();
      if (!eof() && s_[p_] == '*') {
        ++p_;
        skip_ws();
        if (!at_variable()) fail("expected a variable");
        parse_factor(term);
        any = true;
        continue;
      }
      if (at_variable()) {
        parse_factor(term);
        any = true;
        continue;
      }
      break;
    }
    if (!any) fail("expected a term");
    if (negative) term.coefficient = -term.coefficient;
    raw_.push_back(std::move(term));
  }

  LaurentPolynomial assemble() const {
    if (indexed_ && lettered_)
      throw ParseError("cannot mix x,y,z with indexed variables");
    std::size_t n = 1;
    auto slot = [&](const std::string& name) -> std::size_t {
      if (name.size() > 1) return static_cast<std::size_t>(std::stoull(name.substr(1))) - 1;
      return static_cast<std::size_t>(name[0] - 'x');
    };
    for (const auto& t : raw_)
      for (const auto& [name, e] : t.powers) n = std::max(n, slot(name) + 1);
    std::vector<LaurentTerm> terms;
    for (const auto& t : raw_) {
      VecZ exponent(n, Int(0));
      for (const auto& [name, e] : t.powers) exponent[slot(name)] = e;
      terms.push_back({std::move(exponent), t.coefficient, t.generic});
    }
    return make_laurent(n, terms);
  }

  const std::string& s_;
  std::size_t p_ = 0;
  std::vector<RawTerm> raw_;
  bool indexed_ = false;
  bool lettered_ = false;
};

// The two-ray weighted fan of a segment Newton polytope in the plane:
// the perpendicular line, weighted by the segment's lattice length. This
// is the hypersurface fan of a polynomial in one effective variable and
// feeds the planar stable-intersection count.
WeightedFan segment_fan_2d(const LatticePolytope& delta) {
  const auto& v = delta.vertices();
  PrimitiveDecomposition p = primitive(sub(v[1], v[0]));
  VecZ perp = {-p.primitive[1], p.primitive[0]};
  return make_weighted_fan(2, 1,
                           {{cone_from_rays(2, {perp}), Rat(p.length)},
                            {cone_from_rays(2, {negate(perp)}), Rat(p.length)}});
}

WeightedFan hypersurface_fan_2d(const LaurentPolynomial& f) {
  LatticePolytope delta = newton_polytope(f);
  switch (delta.dim()) {
    case 0:
      return make_weighted_fan(2, 1, {});
    case 1:
      return segment_fan_2d(delta);
    default:
      return tropical_hypersurface(f).weighted;
  }
}

}  // namespace

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
  if (n != o.n || terms.size() != o.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& a = terms[i];
    const auto& b = o.terms[i];
    if (a.exponent != b.exponent || a.generic != b.generic) return false;
    if (!a.generic && a.coefficient != b.coefficient) return false;
  }
  return true;
}

LaurentPolynomial make_laurent(std::size_t n, const std::vector<LaurentTerm>& terms) {
  std::map<VecZ, std::pair<Rat, bool>> combined;
  for (const auto& t : terms) {
    if (t.exponent.size() != n) throw DomainError("laurent: exponent dimension mismatch");
    auto& slot = combined[t.exponent];
    slot.first += t.generic ? Rat(0) : t.coefficient;
    slot.second = slot.second || t.generic;
  }
  LaurentPolynomial f;
  f.n = n;
  for (const auto& [e, cg] : combined) {
    if (cg.second) {
      f.terms.push_back({e, Rat(1), true});
    } else if (cg.first != 0) {
      f.terms.push_back({e, cg.first, false});
    }
  }
  if (f.terms.empty()) throw ParseError("all terms cancel: empty polynomial");
  return f;
}

LaurentPolynomial parse_laurent(const std::string& text) { return LaurentParser(text).run(); }

LatticePolytope newton_polytope(const LaurentPolynomial& f) {
  std::vector<VecZ> support;
  for (const auto& t : f.terms) support.push_back(t.exponent);
  return LatticePolytope::hull(f.n, support);
}

TropicalHypersurface tropical_hypersurface(const LaurentPolynomial& f) {
  std::size_t n = f.n;
  if (n == 0) throw DomainError("tropical hypersurface: ambient dimension must be positive");
  LatticePolytope delta = newton_polytope(f);
  if (delta.dim() == 0) return {make_weighted_fan(n, n - 1, {}), delta};
  if (delta.dim() != n)
    throw DomainError("tropical hypersurface: Newton polytope is not full-dimensional");

  Fan nf = normal_fan(delta);
  std::vector<std::pair<Cone, Rat>> weighted;
  for (const auto& tau : nf.cones_of_dim(n - 1)) {
    // The dual edge: vertices minimizing any relative-interior functional.
    VecZ w(n, Int(0));
    for (const auto& r : tau.rays) w = add(w, r);
    std::vector<VecZ> argmin;
    Rat best;
    bool first = true;
    for (const auto& v : delta.vertices()) {
      Rat value(dot(w, v));
      if (first || value < best) {
        best = value;
        argmin.clear();
        first = false;
      }
      if (value == best) argmin.push_back(v);
    }
    if (argmin.size() != 2)
      throw DomainError("tropical hypersurface: dual face of a wall is not an edge");
    weighted.push_back({tau, Rat(primitive(sub(argmin[1], argmin[0])).length)});
  }
  return {make_weighted_fan(n, n - 1, weighted), delta};
}

Rat bkk_count(const std::vector<LaurentPolynomial>& fs) {
  if (fs.empty()) throw DomainError("bkk: no polynomials given");
  std::size_t n = fs[0].n;
  if (fs.size() != n) throw DomainError("bkk: need exactly n polynomials in n variables");
  std::vector<LatticePolytope> deltas;
  for (const auto& f : fs) {
    if (f.n != n) throw DomainError("bkk: polynomials live in different dimensions");
    deltas.push_back(newton_polytope(f));
  }
  return Rat(factorial(static_cast<unsigned>(n))) * mixed_volume(deltas);
}

Rat bkk_via_fans(const std::vector<LaurentPolynomial>& fs, const ShiftPolicy& policy) {
  if (fs.size() != 2 || fs[0].n != 2 || fs[1].n != 2)
    throw DomainError("bkk via fans: unsupported dimension (two polynomials in two variables only)");
  return stable_intersection_number(hypersurface_fan_2d(fs[0]), hypersurface_fan_2d(fs[1]),
                                    policy);
}

bool verify_bergman_shape(const TropicalHypersurface& t) {
  const Fan& f = t.weighted.fan;
  if (f.ambient == 0) return false;
  try {
    validate_fan(f.ambient, f.cones);
  } catch (const DomainError&) {
    return false;
  }
  for (std::size_t idx : f.maximal)
    if (f.cones[idx].dim != f.ambient - 1) return false;
  return true;
}

}  // namespace tropkit
