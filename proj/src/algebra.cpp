#include "tropkit/algebra.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "tropkit/errors.hpp"
#include "tropkit/lattice.hpp"

namespace tropkit {

namespace {

Rat pow_rat(const Rat& base, const Int& e) {
  Rat out(1);
  for (Int i = 0; i < e; ++i) out *= base;
  return out;
}

// a (a-1) ... (a-k+1); empty product for k = 0.
Int falling(const Int& a, const Int& k) {
  Int out(1);
  for (Int i = 0; i < k; ++i) out *= a - i;
  return out;
}

Int multinomial(std::size_t n, const VecZ& parts) {
  Int out = factorial(static_cast<unsigned>(n));
  for (const Int& p : parts) out /= factorial(p.convert_to<unsigned>());
  return out;
}

void check_exponent(std::size_t num_vars, const VecZ& e) {
  if (e.size() != num_vars) throw DomainError("exponent arity does not match the variable count");
  for (const Int& c : e)
    if (c < 0) throw DomainError("exponents must be nonnegative");
}

void enumerate_rec(std::size_t m, const Int& total, VecZ& cur, std::vector<VecZ>& out) {
  if (cur.size() + 1 == m) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (Int a = 0; a <= total; ++a) {
    cur.push_back(a);
    enumerate_rec(m, total - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Rat HomogeneousPolynomial::evaluate(const VecQ& point) const {
  if (point.size() != num_vars) throw DomainError("evaluation point arity does not match the variable count");
  Rat out(0);
  for (const auto& [e, c] : coefficients) {
    Rat term = c;
    for (std::size_t i = 0; i < num_vars; ++i) term *= pow_rat(point[i], e[i]);
    out += term;
  }
  return out;
}

HomogeneousPolynomial make_homogeneous(std::size_t num_vars, std::size_t degree,
                                       const std::map<VecZ, Rat>& coefficients) {
  HomogeneousPolynomial p;
  p.num_vars = num_vars;
  p.degree = degree;
  for (const auto& [e, c] : coefficients) {
    check_exponent(num_vars, e);
    Int total(0);
    for (const Int& x : e) total += x;
    if (total != Int(degree)) throw DomainError("monomial degree does not match the declared degree");
    if (c != 0) p.coefficients.emplace(e, c);
  }
  return p;
}

std::vector<VecZ> exponents_of_degree(std::size_t m, std::size_t k) {
  if (m == 0) return k == 0 ? std::vector<VecZ>{VecZ{}} : std::vector<VecZ>{};
  std::vector<VecZ> out;
  VecZ cur;
  enumerate_rec(m, Int(k), cur, out);
  return out;
}

HomogeneousPolynomial volume_polynomial(const PolytopeBasis& basis) {
  const auto& ps = basis.polytopes;
  if (ps.empty()) throw DomainError("volume polynomial of an empty basis");
  std::size_t n = ps[0].ambient();
  bool full = false;
  for (const auto& p : ps) {
    if (p.ambient() != n) throw DomainError("basis members live in different ambient dimensions");
    full = full || p.dim() == n;
  }
  if (!full) throw DomainError("basis has no full-dimensional member");

  HomogeneousPolynomial out;
  out.num_vars = ps.size();
  out.degree = n;
  for (const VecZ& k : exponents_of_degree(ps.size(), n)) {
    std::vector<LatticePolytope> multiset;
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (Int j = 0; j < k[i]; ++j) multiset.push_back(ps[i]);
    Rat c = Rat(multinomial(n, k)) * mixed_volume(multiset);
    if (c != 0) out.coefficients.emplace(k, c);
  }
  return out;
}

HomogeneousPolynomial apply_operator(const VecZ& op_monomial, const HomogeneousPolynomial& p) {
  check_exponent(p.num_vars, op_monomial);
  Int total(0);
  for (const Int& x : op_monomial) total += x;

  HomogeneousPolynomial out;
  out.num_vars = p.num_vars;
  out.degree = total <= Int(p.degree) ? p.degree - total.convert_to<std::size_t>() : 0;
  if (total > Int(p.degree)) return out;

  for (const auto& [e, c] : p.coefficients) {
    Int mult(1);
    VecZ shifted(p.num_vars);
    bool alive = true;
    for (std::size_t i = 0; i < p.num_vars; ++i) {
      if (e[i] < op_monomial[i]) {
        alive = false;
        break;
      }
      mult *= falling(e[i], op_monomial[i]);
      shifted[i] = e[i] - op_monomial[i];
    }
    if (alive) out.coefficients.emplace(std::move(shifted), c * Rat(mult));
  }
  return out;
}

HilbertFunction hilbert_function(const HomogeneousPolynomial& p) {
  if (p.is_zero()) throw DomainError("hilbert function of the zero polynomial");
  HilbertFunction h;
  for (std::size_t k = 0; k <= p.degree; ++k) {
    auto mons = exponents_of_degree(p.num_vars, p.degree - k);
    std::vector<VecQ> rows;
    for (const VecZ& op : exponents_of_degree(p.num_vars, k)) {
      HomogeneousPolynomial q = apply_operator(op, p);
      VecQ row(mons.size(), Rat(0));
      for (std::size_t j = 0; j < mons.size(); ++j) {
        auto it = q.coefficients.find(mons[j]);
        if (it != q.coefficients.end()) row[j] = it->second;
      }
      rows.push_back(std::move(row));
    }
    h.values.push_back(rank_rational(rows));
  }
  return h;
}

bool poincare_check(const HilbertFunction& h) {
  const auto& v = h.values;
  if (v.empty() || v.front() != 1 || v.back() != 1) return false;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != v[v.size() - 1 - k]) return false;
  return true;
}

bool annihilator_membership(const std::map<VecZ, Rat>& op, const HomogeneousPolynomial& p) {
  // Distinct result degrees never share an exponent vector, so one
  // accumulator map covers non-homogeneous operators too.
  std::map<VecZ, Rat> acc;
  for (const auto& [mono, c] : op) {
    HomogeneousPolynomial q = apply_operator(mono, p);
    for (const auto& [e, qc] : q.coefficients) acc[e] += c * qc;
  }
  for (const auto& [e, c] : acc)
    if (c != 0) return false;
  return true;
}

}  // namespace tropkit
