#include "tropkit/dd.hpp"

#include <algorithm>
#include <set>

#include "tropkit/errors.hpp"

namespace tropkit {

namespace {

// Extreme rays of the pointed, full-dimensional-span cone
// { t in R^k : c·t >= 0 for all c in constraints } by incremental double
// description. Requires the constraint normals to have rank k (which is
// exactly pointedness). Deterministic: the initial independent subset is
// chosen greedily by index and the rest are inserted in index order.
std::vector<VecZ> pointed_dd(std::size_t k, const std::vector<VecZ>& constraints) {
  if (k == 0) return {};

  // Greedy maximal independent subset.
  std::vector<std::size_t> chosen;
  std::vector<VecQ> picked;
  for (std::size_t i = 0; i < constraints.size() && chosen.size() < k; ++i) {
    std::vector<VecQ> trial = picked;
    trial.push_back(to_rational(constraints[i]));
    if (rank_rational(trial) > picked.size()) {
      picked = std::move(trial);
      chosen.push_back(i);
    }
  }
  if (chosen.size() < k) throw DomainError("dd: constraints do not pin a pointed cone");

  // Rays of the initial simplicial cone: r_j spans the kernel of the other
  // chosen constraints, signed into the cone.
  std::vector<VecZ> rays;
  for (std::size_t j = 0; j < k; ++j) {
    MatZ others(0, k);
    for (std::size_t i = 0; i < k; ++i)
      if (i != j) others.append_row(constraints[chosen[i]]);
    MatZ ker = integer_kernel(others);
    if (ker.rows() != 1) throw DomainError("dd: degenerate initial cone");
    VecZ g = primitive(ker[0]).primitive;
    Int s = dot(constraints[chosen[j]], g);
    if (s == 0) throw DomainError("dd: degenerate initial cone");
    rays.push_back(s > 0 ? g : negate(g));
  }

  std::vector<VecZ> processed;
  for (std::size_t i : chosen) processed.push_back(constraints[i]);

  auto active_set = [&](const VecZ& r) {
    std::vector<bool> a(processed.size());
    for (std::size_t i = 0; i < processed.size(); ++i) a[i] = dot(processed[i], r) == 0;
    return a;
  };

  for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
    if (std::find(chosen.begin(), chosen.end(), ci) != chosen.end()) continue;
    const VecZ& c = constraints[ci];
    std::vector<Int> ev(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      ev[i] = dot(c, rays[i]);
      if (ev[i] < 0) any_neg = true;
    }
    processed.push_back(c);
    if (!any_neg) continue;

    std::vector<std::vector<bool>> act(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) act[i] = active_set(rays[i]);

    std::vector<VecZ> next;
    std::set<VecZ> seen;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (ev[i] >= 0 && seen.insert(rays[i]).second) next.push_back(rays[i]);

    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (ev[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (ev[q] >= 0) continue;
        // Combinatorial adjacency: no third extreme ray is active on
        // everything both p and q are active on.
        std::vector<bool> both(processed.size() - 1);
        for (std::size_t t = 0; t + 1 < processed.size(); ++t) both[t] = act[p][t] && act[q][t];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          bool covers = true;
          for (std::size_t t = 0; t + 1 < processed.size() && covers; ++t)
            if (both[t] && !act[r][t]) covers = false;
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        VecZ w = sub(scale(rays[q], ev[p]), scale(rays[p], ev[q]));
        w = primitive(w).primitive;
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    rays = std::move(next);
    if (rays.empty()) break;  // cone collapsed to the origin
  }
  std::sort(rays.begin(), rays.end(), [](const VecZ& a, const VecZ& b) { return lex_less(a, b); });
  return rays;
}

}  // namespace

DDResult extreme_rays(std::size_t n, const std::vector<VecZ>& equations,
                      const std::vector<VecZ>& inequalities) {
  for (const auto& v : equations)
    if (v.size() != n) throw DomainError("dd: equation dimension mismatch");
  for (const auto& v : inequalities)
    if (v.size() != n) throw DomainError("dd: inequality dimension mismatch");

  // Lineality = common kernel of every constraint normal.
  MatZ all(0, n);
  for (const auto& v : equations) all.append_row(v);
  for (const auto& v : inequalities) all.append_row(v);
  Sublattice lin = saturate(integer_kernel(all));

  // Work inside V = {equations hold} ∩ lineality^⊥; there the cone is
  // pointed and the inequality normals have full rank.
  MatZ cut(0, n);
  for (const auto& v : equations) cut.append_row(v);
  for (const auto& r : lin.basis.row_list()) cut.append_row(r);
  Sublattice v_space = saturate(integer_kernel(cut));
  const std::size_t k = v_space.rank();

  DDResult out;
  out.lineality = std::move(lin);
  if (k == 0) return out;

  std::vector<VecZ> reduced;
  for (const auto& b : inequalities) {
    VecZ c(k);
    for (std::size_t j = 0; j < k; ++j) c[j] = dot(v_space.basis[j], b);
    if (!is_zero(c)) reduced.push_back(std::move(c));
  }
  if (reduced.empty()) {
    // No inequality touches V, so V lies in the lineality space; since we
    // already cut lineality out, V must be trivial.
    throw DomainError("dd: internal inconsistency, unconstrained subspace");
  }

  std::vector<VecZ> t_rays = pointed_dd(k, reduced);
  for (const auto& t : t_rays) {
    VecZ x(n, Int(0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < n; ++i) x[i] += t[j] * v_space.basis[j][i];
    // Saturated charts preserve primitivity.
    out.rays.push_back(std::move(x));
  }
  std::sort(out.rays.begin(), out.rays.end(),
            [](const VecZ& a, const VecZ& b) { return lex_less(a, b); });
  return out;
}

HRep halfspaces_from_rays(std::size_t n, const std::vector<VecZ>& rays) {
  for (const auto& v : rays)
    if (v.size() != n) throw DomainError("dd: ray dimension mismatch");

  MatZ gen(0, n);
  for (const auto& r : rays)
    if (!is_zero(r)) gen.append_row(r);

  HRep out;
  // Span-cutting equations.
  MatZ ortho = integer_kernel(gen);
  HermiteResult hr = hermite_normal_form(ortho);
  for (std::size_t i = 0; i < hr.h.rows(); ++i)
    if (!is_zero(hr.h[i])) out.equations.push_back(hr.h[i]);

  if (gen.rows() == 0) return out;  // the origin: equations alone cut it

  Sublattice span = saturate(gen);
  const std::size_t k = span.rank();

  // Generators in span coordinates (integral because the chart basis is
  // saturated).
  std::vector<VecQ> chart_rows(n, VecQ(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) chart_rows[i][j] = Rat(span.basis[j][i]);
  std::vector<VecZ> reduced;
  for (const auto& r : gen.row_list()) {
    auto t = solve_rational(chart_rows, to_rational(r));
    if (!t || !all_integral(*t)) throw DomainError("dd: chart solve failed");
    reduced.push_back(to_integer(*t));
  }

  // Facet normals of cone(reduced) = extreme rays of its dual cone.
  DDResult dual = extreme_rays(k, {}, reduced);
  for (const auto& c : dual.rays) {
    // Lift the reduced normal c to b with span_basis · b = c.
    std::vector<VecQ> sys;
    VecQ rhs;
    for (std::size_t j = 0; j < k; ++j) {
      sys.push_back(to_rational(span.basis[j]));
      rhs.push_back(Rat(c[j]));
    }
    auto b = solve_rational(sys, rhs);
    if (!b) throw DomainError("dd: normal lift failed");
    out.inequalities.push_back(primitive_direction(*b));
  }
  std::sort(out.inequalities.begin(), out.inequalities.end(),
            [](const VecZ& a, const VecZ& b) { return lex_less(a, b); });
  return out;
}

}  // namespace tropkit
