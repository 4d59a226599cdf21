// Acceptance gate: one pass/fail line per criterion, exit 0 only when all
// pass. The suite runs twice with the same seed; the JSON reports of both
// runs must agree byte for byte (criterion 10) and the first is written to
// acceptance_report.json.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "tropkit/errors.hpp"
#include "tropkit/io.hpp"

using namespace tropkit;

namespace {

struct Crit {
  std::string name;
  bool ok = false;
  std::string detail;
  long long ms = 0;
};

VecZ v2(int a, int b) { return {Int(a), Int(b)}; }

LatticePolytope rand_polytope(std::mt19937& rng, std::size_t n, int lo, int hi,
                              std::size_t extra_pts, bool full_dim) {
  const unsigned span = static_cast<unsigned>(hi - lo + 1);
  for (;;) {
    std::vector<VecZ> pts;
    std::size_t count = n + 1 + rng() % (extra_pts + 1);
    for (std::size_t i = 0; i < count; ++i) {
      VecZ p(n);
      for (auto& c : p) c = Int(lo + static_cast<int>(rng() % span));
      pts.push_back(p);
    }
    auto hull = LatticePolytope::hull(n, pts);
    if (!full_dim || hull.dim() == n) return hull;
  }
}

// Generic-coefficient polynomial with <= 6 support points in [-4,4]^2.
LaurentPolynomial rand_laurent(std::mt19937& rng) {
  std::vector<LaurentTerm> terms;
  std::size_t k = 1 + rng() % 6;
  for (std::size_t i = 0; i < k; ++i)
    terms.push_back({v2(static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 9) - 4),
                     Rat(1), true});
  return make_laurent(2, terms);
}

LaurentPolynomial dense_generic(int d) {
  std::vector<LaurentTerm> terms;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) terms.push_back({v2(i, j), Rat(1), true});
  return make_laurent(2, terms);
}

long long as_int(const Rat& r) { return num(r).convert_to<long long>(); }

WeightedFan line_fan(const Rat& w0, const Rat& w1, const Rat& w2) {
  return make_weighted_fan(2, 1,
                           {{cone_from_rays(2, {v2(1, 0)}), w0},
                            {cone_from_rays(2, {v2(0, 1)}), w1},
                            {cone_from_rays(2, {v2(-1, -1)}), w2}});
}

bool crit_bezout(std::uint64_t seed, Json& rep, std::string& detail) {
  Json table = Json::array();
  for (int d = 1; d <= 4; ++d) {
    Json row = Json::array();
    for (int e = 1; e <= 4; ++e) {
      auto f = dense_generic(d), g = dense_generic(e);
      Rat mv = bkk_count({f, g});
      Rat st = bkk_via_fans({f, g}, {seed ^ 0xb2c3u, 3, 64});
      if (mv != Rat(d * e) || st != Rat(d * e)) {
        detail = "degrees (" + std::to_string(d) + "," + std::to_string(e) + "): mixed-volume " +
                 to_string(mv) + ", stable " + to_string(st) + ", expected " +
                 std::to_string(d * e);
        return false;
      }
      row.push_back(d * e);
    }
    table.push_back(row);
  }
  rep["bezout_table"] = table;
  return true;
}

bool crit_cross_oracle(std::uint64_t seed, Json& rep, std::string& detail) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed ^ 0xa5a5a5a5u));
  Json counts = Json::array();
  for (unsigned trial = 0; trial < 200; ++trial) {
    auto f = rand_laurent(rng), g = rand_laurent(rng);
    Rat mv = bkk_count({f, g});
    Rat st;
    try {
      st = bkk_via_fans({f, g}, {seed + 1000 + trial, 5, 64});
    } catch (const std::exception& e) {
      detail = "trial " + std::to_string(trial) + ": " + e.what();
      return false;
    }
    if (mv != st || !is_integer(mv)) {
      detail = "trial " + std::to_string(trial) + ": mixed-volume " + to_string(mv) +
               " vs stable " + to_string(st);
      return false;
    }
    counts.push_back(as_int(mv));
  }
  rep["cross_oracle_counts"] = counts;
  return true;
}

bool crit_volume_oracle(std::uint64_t seed, Json& rep, std::string& detail) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed ^ 0x517e1u));
  Json vols = Json::array();
  for (unsigned trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto p = rand_polytope(rng, n, 0, 6, 3, true);
    Rat v = volume(p);
    Rat o = volume_ehrhart_oracle(p);
    if (v != o) {
      detail = "trial " + std::to_string(trial) + ": pyramid " + to_string(v) + " vs ehrhart " +
               to_string(o);
      return false;
    }
    vols.push_back(to_string(v));
  }
  rep["volumes"] = vols;
  return true;
}

bool crit_mixed_volume_axioms(std::uint64_t seed, Json& rep, std::string& detail) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed ^ 0xa71u));
  unsigned instances = 0;
  for (std::size_t n : {std::size_t(2), std::size_t(3)}) {
    for (unsigned trial = 0; trial < 50; ++trial, ++instances) {
      std::vector<LatticePolytope> body;
      for (std::size_t i = 0; i < n; ++i) body.push_back(rand_polytope(rng, n, 0, 4, 2, false));
      auto fail = [&](const std::string& what) {
        detail = "n=" + std::to_string(n) + " trial " + std::to_string(trial) + ": " + what;
        return false;
      };

      // Symmetry: reverse the argument list.
      std::vector<LatticePolytope> rev(body.rbegin(), body.rend());
      if (mixed_volume(body) != mixed_volume(rev)) return fail("symmetry");

      // Multilinearity in the first slot: Minkowski additivity and scaling.
      auto extra = rand_polytope(rng, n, 0, 4, 2, false);
      auto sum_first = body;
      sum_first[0] = minkowski_sum(body[0], extra);
      auto alt = body;
      alt[0] = extra;
      if (mixed_volume(sum_first) != mixed_volume(body) + mixed_volume(alt))
        return fail("additivity");
      auto scaled = body;
      scaled[0] = scale(body[0], Rat(2));
      if (mixed_volume(scaled) != Rat(2) * mixed_volume(body)) return fail("scaling");

      // Diagonal: V(A, ..., A) = vol(A).
      std::vector<LatticePolytope> diag(n, body[0]);
      if (mixed_volume(diag) != volume(body[0])) return fail("diagonal");
    }
  }
  rep["mixed_volume_axioms"] = Json{{"instances", instances}, {"ok", true}};
  return true;
}

bool crit_pascal(std::uint64_t seed, Json& rep, std::string& detail) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed ^ 0x9a5ca1u));
  for (unsigned trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto p = rand_polytope(rng, n, 0, 5, 3, true);
    if (!is_zero(pascal_residual(p))) {
      detail = "trial " + std::to_string(trial) + ": nonzero residual";
      return false;
    }
  }
  rep["pascal"] = Json{{"instances", 100}, {"all_zero", true}};
  return true;
}

bool crit_balancing(std::uint64_t seed, Json& rep, std::string& detail) {
  for (int d = 1; d <= 4; ++d)
    if (!is_balanced(tropical_hypersurface(dense_generic(d)).weighted)) {
      detail = "dense degree " + std::to_string(d) + " hypersurface unbalanced";
      return false;
    }
  std::mt19937 rng(static_cast<std::uint32_t>(seed ^ 0xba1a2ceu));
  for (unsigned trial = 0; trial < 16;) {
    auto f = rand_laurent(rng);
    try {
      if (!is_balanced(tropical_hypersurface(f).weighted)) {
        detail = "random hypersurface unbalanced";
        return false;
      }
      ++trial;
    } catch (const DomainError&) {
      // lower-dimensional Newton polytope; draw again
    }
  }

  auto bad = line_fan(1, 1, 2);
  if (is_balanced(bad)) {
    detail = "perturbed line (1,1,2) reported balanced";
    return false;
  }
  auto vertical = make_weighted_fan(
      2, 1, {{cone_from_rays(2, {v2(0, 1)}), Rat(1)}, {cone_from_rays(2, {v2(0, -1)}), Rat(1)}});
  auto c1 = intersection_number_at_shift(bad, vertical, {Rat(1), Rat(2)});
  auto c2 = intersection_number_at_shift(bad, vertical, {Rat(-1), Rat(-2)});
  if (!c1 || !c2 || *c1 == *c2) {
    detail = "unbalanced fan failed to show shift-dependent counts";
    return false;
  }
  rep["balancing"] = Json{{"hypersurfaces_balanced", true},
                          {"perturbed_line_fails", true},
                          {"shift_counts", Json::array({as_int(*c1), as_int(*c2)})}};
  return true;
}

bool crit_transversality(std::uint64_t, Json& rep, std::string& detail) {
  auto line = tropical_hypersurface(parse_laurent("x + y + 1")).weighted;
  bool at11 = is_transverse(line, {line, {Rat(1), Rat(1)}});
  bool at12 = is_transverse(line, {line, {Rat(1), Rat(2)}});
  if (at11 || !at12) {
    detail = std::string("shift (1,1) transverse=") + (at11 ? "true" : "false") +
             ", shift (1,2) transverse=" + (at12 ? "true" : "false");
    return false;
  }
  rep["transversality"] = Json{{"shift_11", false}, {"shift_12", true}};
  return true;
}

bool crit_algebra(std::uint64_t seed, Json& rep, std::string& detail) {
  auto square = LatticePolytope::hull(2, {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
  auto triangle = LatticePolytope::hull(2, {v2(0, 0), v2(1, 0), v2(0, 1)});
  auto h1 = hilbert_function(volume_polynomial({{square, triangle}}));
  auto h2 = hilbert_function(volume_polynomial({{triangle, scale(triangle, Rat(2))}}));
  if (!(h1 == HilbertFunction{{1, 2, 1}})) {
    detail = "square-triangle hilbert function wrong";
    return false;
  }
  if (!(h2 == HilbertFunction{{1, 1, 1}})) {
    detail = "dilate-pair hilbert function wrong";
    return false;
  }

  std::mt19937 rng(static_cast<std::uint32_t>(seed ^ 0xa19e8au));
  for (unsigned trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + trial % 2;
    std::size_t m = 1 + rng() % 3;
    std::vector<LatticePolytope> ps;
    for (std::size_t i = 0; i < m; ++i) ps.push_back(rand_polytope(rng, n, 0, 4, 1, true));
    if (!poincare_check(hilbert_function(volume_polynomial({ps})))) {
      detail = "random basis failed poincare duality, trial " + std::to_string(trial);
      return false;
    }
  }

  for (unsigned trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto a = rand_polytope(rng, n, 0, 4, 1, true);
    auto b = rand_polytope(rng, n, 0, 4, 1, true);
    auto p = volume_polynomial({{a, b}});
    VecZ key{Int(n - 1), Int(1)};
    std::vector<LatticePolytope> mixed(n - 1, a);
    mixed.push_back(b);
    Rat expect = Rat(Int(n)) * mixed_volume(mixed);
    Rat got = p.coefficients.count(key) ? p.coefficients.at(key) : Rat(0);
    if (got != expect) {
      detail = "top-degree coefficient mismatch, trial " + std::to_string(trial);
      return false;
    }
  }
  rep["algebra"] = Json{{"square_triangle", h1.values},
                        {"dilate_pair", h2.values},
                        {"random_poincare", true},
                        {"top_degree_consistency", true}};
  return true;
}

bool crit_ring_laws(std::uint64_t seed, Json& rep, std::string& detail) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed ^ 0x4177u));
  auto rand_balanced = [&]() {
    for (;;) {
      auto f = rand_laurent(rng);
      try {
        auto w = tropical_hypersurface(f).weighted;
        if (w.weighted_cones().empty()) continue;
        static const Rat scales[] = {Rat(1), Rat(2), Rat(3), Rat(1, 2)};
        Rat c = scales[rng() % 4];
        std::vector<std::pair<Cone, Rat>> scaled;
        for (const Cone& cn : w.weighted_cones()) scaled.emplace_back(cn, c * w.weight_of(cn));
        return make_weighted_fan(2, 1, scaled);
      } catch (const DomainError&) {
        // degenerate support; draw again
      }
    }
  };
  for (unsigned trial = 0; trial < 50; ++trial) {
    auto a = rand_balanced(), b = rand_balanced(), c = rand_balanced();
    if (!weighted_equivalent(weighted_sum(a, b), weighted_sum(b, a))) {
      detail = "commutativity failed, trial " + std::to_string(trial);
      return false;
    }
    if (!weighted_equivalent(weighted_sum(weighted_sum(a, b), c),
                             weighted_sum(a, weighted_sum(b, c)))) {
      detail = "associativity failed, trial " + std::to_string(trial);
      return false;
    }
  }
  rep["ring_laws"] = Json{{"instances", 50}, {"ok", true}};
  return true;
}

std::string run_suite(std::uint64_t seed, std::vector<Crit>& out) {
  Json rep;
  rep["seed"] = seed;
  struct Entry {
    const char* name;
    bool (*fn)(std::uint64_t, Json&, std::string&);
    long long budget_ms;  // 0 = no budget
  };
  const Entry entries[] = {
      {"bezout-bkk-table", crit_bezout, 10000},
      {"cross-oracle-bkk", crit_cross_oracle, 60000},
      {"volume-cross-oracle", crit_volume_oracle, 60000},
      {"mixed-volume-axioms", crit_mixed_volume_axioms, 0},
      {"pascal-identity", crit_pascal, 0},
      {"balancing", crit_balancing, 0},
      {"transversality-fixture", crit_transversality, 0},
      {"polytope-algebra", crit_algebra, 0},
      {"ring-laws", crit_ring_laws, 0},
  };
  out.clear();
  for (const Entry& e : entries) {
    Crit c;
    c.name = e.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.ok = e.fn(seed, rep, c.detail);
    } catch (const std::exception& ex) {
      c.ok = false;
      c.detail = std::string("exception: ") + ex.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    c.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    if (c.ok && e.budget_ms > 0 && c.ms > e.budget_ms) {
      c.ok = false;
      c.detail = "runtime " + std::to_string(c.ms) + "ms exceeds " +
                 std::to_string(e.budget_ms) + "ms";
    }
    out.push_back(c);
  }
  return rep.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 20260817;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

  std::vector<Crit> crits, scratch;
  std::string report = run_suite(seed, crits);
  std::string again = run_suite(seed, scratch);

  Crit det;
  det.name = "determinism";
  det.ok = report == again;
  if (!det.ok) det.detail = "reports of the two runs differ";
  crits.push_back(det);

  std::ofstream f("acceptance_report.json", std::ios::binary);
  f << report;

  bool all = true;
  for (std::size_t i = 0; i < crits.size(); ++i) {
    const Crit& c = crits[i];
    all = all && c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << (i + 1) << "  "
              << c.name;
    if (!c.detail.empty()) std::cout << "  -- " << c.detail;
    if (c.ms > 0) std::cout << "  (" << c.ms << "ms)";
    std::cout << "\n";
  }
  std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES present") << "\n";
  return all ? 0 : 1;
}
