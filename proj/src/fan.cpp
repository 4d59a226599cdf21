#include "tropkit/fan.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tropkit/errors.hpp"
#include "tropkit/lattice.hpp"

namespace tropkit {

namespace {

// Chart coordinates t with x = basis^T t; integral for lattice points when
// the sublattice is saturated.
VecQ chart_coords(const Sublattice& s, const VecQ& x) {
  std::vector<VecQ> system(s.ambient_dim(), VecQ(s.rank()));
  for (std::size_t j = 0; j < s.rank(); ++j)
    for (std::size_t i = 0; i < s.ambient_dim(); ++i) system[i][j] = Rat(s.basis[j][i]);
  auto t = solve_rational(system, x);
  if (!t) throw DomainError("chart: point outside the sublattice span");
  return *t;
}

VecZ from_chart(const Sublattice& s, const VecZ& t) {
  VecZ x(s.ambient_dim(), Int(0));
  for (std::size_t j = 0; j < s.rank(); ++j) x = add(x, scale(s.basis[j], t[j]));
  return x;
}

// Lattice generated by the cone's lattice points: the saturation of its
// ray span (trivial lattice for the origin cone).
Sublattice ray_lattice(const Cone& c) {
  if (c.rays.empty()) return Sublattice{MatZ(0, c.ambient)};
  return saturate(MatZ(c.rays));
}

bool contains_cone(const Cone& big, const Cone& small) {
  for (const auto& r : small.rays)
    if (!big.contains(r)) return false;
  return true;
}

Fan assemble(std::size_t n, std::vector<Cone> cones) {
  std::sort(cones.begin(), cones.end(), cone_less);
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  Fan f;
  f.ambient = n;
  f.cones = std::move(cones);
  for (std::size_t i = 0; i < f.cones.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < f.cones.size() && maximal; ++j)
      if (f.cones[j].dim > f.cones[i].dim && contains_cone(f.cones[j], f.cones[i]))
        maximal = false;
    if (maximal) f.maximal.push_back(i);
  }
  return f;
}

// Face closure without the pairwise validity check, for constructions that
// are fans by design (arrangements, refinements, normal fans).
Fan closure_fan(std::size_t n, const std::vector<Cone>& cones) {
  std::vector<Cone> all;
  std::set<std::vector<VecZ>> seen;
  for (const auto& c : cones) {
    if (c.ambient != n) throw DomainError("fan: ambient dimension mismatch");
    for (auto& f : faces(c))
      if (seen.insert(f.rays).second) all.push_back(std::move(f));
  }
  return assemble(n, std::move(all));
}

// Inequalities of sigma cut to a chart of span(sigma), optionally further
// cut by `other`, clipped to the cube [-1,1]^n; used for exact d-volume
// accounting of supports.
Rat chart_cell_volume(const Cone& sigma, const Cone* other) {
  std::size_t n = sigma.ambient;
  Sublattice s = ray_lattice(sigma);
  std::size_t d = s.rank();
  if (d == 0) return Rat(0);
  auto map_row = [&](const VecZ& w) {
    VecZ row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = dot(s.basis[j], w);
    return row;
  };
  std::vector<std::pair<VecZ, Rat>> rows;
  for (const auto& b : sigma.inequalities) rows.push_back({map_row(b), Rat(0)});
  if (other) {
    for (const auto& e : other->equations) {
      VecZ r = map_row(e);
      rows.push_back({negate(r), Rat(0)});
      rows.push_back({std::move(r), Rat(0)});
    }
    for (const auto& b : other->inequalities) rows.push_back({map_row(b), Rat(0)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    VecZ col(d);
    for (std::size_t j = 0; j < d; ++j) col[j] = s.basis[j][i];
    rows.push_back({negate(col), Rat(-1)});
    rows.push_back({std::move(col), Rat(-1)});
  }
  return volume_of_rational_points(d, vertices_of_halfspaces(d, rows));
}

VecZ canonical_normal(const VecZ& v) {
  VecZ p = primitive(v).primitive;
  for (const auto& e : p) {
    if (e > 0) break;
    if (e < 0) return negate(p);
  }
  return p;
}

// Full-dimensional cells of the central hyperplane arrangement spanned by
// the coordinate hyperplanes plus `normals`. Strict convexity of every
// cell is automatic: each input cone's constraint normals already have
// trivial common kernel.
std::vector<Cone> arrangement_cells(std::size_t n, const std::set<VecZ>& normals) {
  std::vector<Cone> cells;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<VecZ> rays;
    for (std::size_t i = 0; i < n; ++i) {
      VecZ e(n, Int(0));
      e[i] = (mask >> i) & 1 ? Int(-1) : Int(1);
      rays.push_back(std::move(e));
    }
    cells.push_back(cone_from_rays(n, rays));
  }
  for (const auto& h : normals) {
    std::vector<Cone> next;
    for (auto& c : cells) {
      bool pos = false, neg = false;
      for (const auto& r : c.rays) {
        Int v = dot(h, r);
        if (v > 0) pos = true;
        if (v < 0) neg = true;
      }
      if (pos && neg) {
        std::vector<VecZ> base = c.inequalities;
        base.push_back(h);
        next.push_back(cone_from_halfspaces(n, {}, base));
        base.back() = negate(h);
        next.push_back(cone_from_halfspaces(n, {}, base));
      } else {
        next.push_back(std::move(c));
      }
    }
    cells = std::move(next);
  }
  return cells;
}

struct PairMeet {
  enum Kind { kEmpty, kPoint, kHigher };
  Kind kind = kEmpty;
  VecQ point;
  bool transverse = false;  // point lies in both relative interiors
};

// How sigma meets shift + other: a unique affine-span intersection point
// (classified by relative interiority), an empty set, or a rank-deficient
// nonempty intersection. In the last case some intersection point is
// forced onto a boundary (or the set is infinite), so it always defeats
// transversality.
PairMeet meet(const Cone& sigma, const Cone& other, const VecQ& shift) {
  std::size_t n = sigma.ambient;
  std::vector<VecQ> system;
  VecQ rhs;
  for (const auto& e : sigma.equations) {
    system.push_back(to_rational(e));
    rhs.push_back(Rat(0));
  }
  for (const auto& e : other.equations) {
    system.push_back(to_rational(e));
    rhs.push_back(dot(e, shift));
  }
  if (rank_rational(system) == n) {
    auto x = solve_rational(system, rhs);
    if (!x) return {};
    VecQ back = sub(*x, shift);
    if (!sigma.contains(*x) || !other.contains(back)) return {};
    return {PairMeet::kPoint, *x, sigma.in_relint(*x) && other.in_relint(back)};
  }
  std::vector<std::pair<VecZ, Rat>> rows;
  for (const auto& e : sigma.equations) {
    rows.push_back({e, Rat(0)});
    rows.push_back({negate(e), Rat(0)});
  }
  for (const auto& b : sigma.inequalities) rows.push_back({b, Rat(0)});
  for (const auto& e : other.equations) {
    Rat c = dot(e, shift);
    rows.push_back({negate(e), -c});
    rows.push_back({e, std::move(c)});
  }
  for (const auto& b : other.inequalities) rows.push_back({b, dot(b, shift)});
  if (halfspaces_feasible(n, rows)) return {PairMeet::kHigher, {}, false};
  return {};
}

std::vector<std::pair<const Cone*, Rat>> active_cones(const WeightedFan& w) {
  std::vector<std::pair<const Cone*, Rat>> out;
  for (const auto& c : w.fan.cones) {
    if (c.dim != w.d) continue;
    Rat wt = w.weight_of(c);
    if (wt != 0) out.push_back({&c, std::move(wt)});
  }
  return out;
}

}  // namespace

std::size_t Fan::dim() const {
  std::size_t d = 0;
  for (const auto& c : cones) d = std::max(d, c.dim);
  return d;
}

std::vector<Cone> Fan::cones_of_dim(std::size_t k) const {
  std::vector<Cone> out;
  for (const auto& c : cones)
    if (c.dim == k) out.push_back(c);
  return out;
}

Fan validate_fan(std::size_t n, const std::vector<Cone>& cones) {
  Fan f = closure_fan(n, cones);
  for (std::size_t i = 0; i < f.cones.size(); ++i)
    for (std::size_t j = i + 1; j < f.cones.size(); ++j) {
      Cone g = intersect(f.cones[i], f.cones[j]);
      if (!is_face_of(g, f.cones[i]) || !is_face_of(g, f.cones[j]))
        throw DomainError("fan: two cones intersect in a set that is not a common face");
    }
  return f;
}

bool is_complete(const Fan& f) {
  std::size_t n = f.ambient;
  if (n == 0) return !f.cones.empty();
  Rat total(0);
  for (std::size_t idx : f.maximal) {
    const Cone& c = f.cones[idx];
    if (c.dim != n) continue;
    std::vector<std::pair<VecZ, Rat>> rows;
    for (const auto& b : c.inequalities) rows.push_back({b, Rat(0)});
    for (std::size_t i = 0; i < n; ++i) {
      VecZ e(n, Int(0));
      e[i] = 1;
      rows.push_back({e, Rat(-1)});
      e[i] = -1;
      rows.push_back({std::move(e), Rat(-1)});
    }
    total += volume_of_rational_points(n, vertices_of_halfspaces(n, rows));
  }
  Rat cube(1);
  for (std::size_t i = 0; i < n; ++i) cube *= 2;
  return total == cube;
}

VecZ quotient_generator(const Cone& sigma, const Cone& tau) {
  if (sigma.ambient != tau.ambient) throw DomainError("quotient generator: ambient dimension mismatch");
  if (tau.dim + 1 != sigma.dim || !is_face_of(tau, sigma))
    throw DomainError("quotient generator: tau must be a facet of sigma");
  if (sigma.dim == 1) return sigma.rays[0];

  Sublattice s = ray_lattice(sigma);
  std::size_t d = s.rank();
  std::vector<VecZ> tau_chart;
  for (const auto& r : tau.rays) tau_chart.push_back(to_integer(chart_coords(s, to_rational(r))));

  MatZ ker = integer_kernel(MatZ(tau_chart));
  VecZ phi = ker[0];
  for (const auto& r : sigma.rays) {
    Int v = dot(phi, to_integer(chart_coords(s, to_rational(r))));
    if (v < 0) {
      phi = negate(phi);
      break;
    }
    if (v > 0) break;
  }

  // Integer solution of <phi, z> = 1 via the unimodular factor of phi^T.
  MatZ column(d, 1);
  for (std::size_t i = 0; i < d; ++i) column[i][0] = phi[i];
  HermiteResult hr = hermite_normal_form(column);
  if (hr.h[0][0] != 1) throw DomainError("quotient generator: functional is not primitive");
  VecZ z = hr.u[0];

  // Slide along tau until the representative lands in sigma; membership is
  // monotone because the slide direction lies in sigma.
  VecZ w(d, Int(0));
  for (const auto& r : tau_chart) w = add(w, r);
  Int step(1);
  while (!sigma.contains(from_chart(s, z))) {
    z = add(z, scale(w, step));
    step *= 2;
    if (step > Int(1) << 80) throw DomainError("quotient generator: representative search failed");
  }
  return from_chart(s, z);
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (a.ambient != b.ambient) throw DomainError("refinement: ambient dimension mismatch");
  std::vector<Cone> all;
  std::set<std::vector<VecZ>> seen;
  for (const auto& ca : a.cones)
    for (const auto& cb : b.cones) {
      Cone g = intersect(ca, cb);
      if (seen.insert(g.rays).second) all.push_back(std::move(g));
    }
  return assemble(a.ambient, std::move(all));
}

Rat WeightedFan::weight_of(const Cone& c) const {
  auto it = weights.find(c.rays);
  if (it == weights.end()) throw DomainError("weighted fan: cone carries no weight");
  return it->second;
}

WeightedFan make_weighted_fan(std::size_t n, std::size_t d,
                              const std::vector<std::pair<Cone, Rat>>& weighted_cones) {
  if (d > n) throw DomainError("weighted fan: dimension exceeds ambient");
  std::vector<Cone> cones;
  std::map<std::vector<VecZ>, Rat> weights;
  for (const auto& [c, wt] : weighted_cones) {
    if (c.dim != d) throw DomainError("weighted fan: every weighted cone must have dimension d");
    auto [it, fresh] = weights.emplace(c.rays, wt);
    if (!fresh) {
      if (it->second != wt) throw DomainError("weighted fan: conflicting weights on one cone");
      continue;
    }
    cones.push_back(c);
  }
  WeightedFan w;
  w.fan = validate_fan(n, cones);
  w.d = d;
  w.weights = std::move(weights);
  return w;
}

bool is_balanced(const WeightedFan& w) {
  if (w.d == 0) return true;
  auto tops = w.weighted_cones();
  for (const auto& tau : w.fan.cones_of_dim(w.d - 1)) {
    VecQ total(w.fan.ambient, Rat(0));
    for (const auto& sigma : tops) {
      if (!is_face_of(tau, sigma)) continue;
      total = add(total, scale(to_rational(quotient_generator(sigma, tau)), w.weight_of(sigma)));
    }
    std::vector<VecQ> span_rows;
    for (const auto& r : tau.rays) span_rows.push_back(to_rational(r));
    if (!in_span(span_rows, total)) return false;
  }
  return true;
}

bool weighted_equivalent(const WeightedFan& a, const WeightedFan& b) {
  if (a.fan.ambient != b.fan.ambient) throw DomainError("equivalence: ambient dimension mismatch");
  auto act_a = active_cones(a), act_b = active_cones(b);
  if (a.d != b.d) return act_a.empty() && act_b.empty();
  std::size_t d = a.d;
  if (d == 0) {
    Rat wa = act_a.empty() ? Rat(0) : act_a[0].second;
    Rat wb = act_b.empty() ? Rat(0) : act_b[0].second;
    return wa == wb;
  }
  // Weights must agree on every d-dimensional overlap (zero weights count:
  // a zero cone overlapping a nonzero one is a genuine mismatch).
  for (const auto& sa : a.weighted_cones())
    for (const auto& sb : b.weighted_cones())
      if (intersect(sa, sb).dim == d && a.weight_of(sa) != b.weight_of(sb)) return false;
  // Every nonzero cone must be exactly covered by the other fan, by
  // d-volume accounting against the cube.
  auto covered = [d](const std::vector<std::pair<const Cone*, Rat>>& from, const WeightedFan& by) {
    for (const auto& [sigma, wt] : from) {
      Rat whole = chart_cell_volume(*sigma, nullptr);
      Rat parts(0);
      for (const auto& other : by.weighted_cones())
        if (intersect(*sigma, other).dim == d) parts += chart_cell_volume(*sigma, &other);
      if (parts != whole) return false;
    }
    return true;
  };
  return covered(act_a, b) && covered(act_b, a);
}

WeightedFan weighted_sum(const WeightedFan& a, const WeightedFan& b) {
  if (a.fan.ambient != b.fan.ambient) throw DomainError("weighted sum: ambient dimension mismatch");
  if (a.d != b.d) throw DomainError("weighted sum: dimension mismatch");
  std::size_t n = a.fan.ambient, d = a.d;
  std::set<VecZ> normals;
  auto grab = [&normals](const WeightedFan& w) {
    for (const auto& c : w.weighted_cones()) {
      for (const auto& e : c.equations) normals.insert(canonical_normal(e));
      for (const auto& e : c.inequalities) normals.insert(canonical_normal(e));
    }
  };
  grab(a);
  grab(b);
  Fan arrangement = closure_fan(n, arrangement_cells(n, normals));
  auto acones = a.weighted_cones();
  auto bcones = b.weighted_cones();
  std::vector<std::pair<Cone, Rat>> out;
  for (const auto& cell : arrangement.cones_of_dim(d)) {
    VecZ p(n, Int(0));
    for (const auto& r : cell.rays) p = add(p, r);
    bool inside = false;
    Rat wt(0);
    for (const auto& sigma : acones)
      if (sigma.contains(p)) {
        wt += a.weight_of(sigma);
        inside = true;
        break;
      }
    for (const auto& sigma : bcones)
      if (sigma.contains(p)) {
        wt += b.weight_of(sigma);
        inside = true;
        break;
      }
    if (inside) out.push_back({cell, std::move(wt)});
  }
  return make_weighted_fan(n, d, out);
}

bool is_transverse(const WeightedFan& a, const ShiftedComplex& shifted) {
  const WeightedFan& b = shifted.base;
  if (a.fan.ambient != b.fan.ambient) throw DomainError("transversality: ambient dimension mismatch");
  if (a.d + b.d != a.fan.ambient)
    throw DomainError("transversality: fan dimensions are not complementary");
  for (const auto& pa : active_cones(a))
    for (const auto& pb : active_cones(b)) {
      PairMeet m = meet(*pa.first, *pb.first, shifted.shift);
      if (m.kind == PairMeet::kHigher) return false;
      if (m.kind == PairMeet::kPoint && !m.transverse) return false;
    }
  return true;
}

std::optional<Rat> intersection_number_at_shift(const WeightedFan& a, const WeightedFan& b,
                                                const VecQ& shift) {
  if (a.fan.ambient != b.fan.ambient) throw DomainError("intersection: ambient dimension mismatch");
  if (a.d + b.d != a.fan.ambient)
    throw DomainError("intersection: fan dimensions are not complementary");
  Rat total(0);
  for (const auto& [sa, wa] : active_cones(a))
    for (const auto& [sb, wb] : active_cones(b)) {
      PairMeet m = meet(*sa, *sb, shift);
      if (m.kind == PairMeet::kEmpty) continue;
      if (m.kind == PairMeet::kHigher || !m.transverse) return std::nullopt;
      auto index = lattice_index(ray_lattice(*sa), ray_lattice(*sb));
      if (!index) throw DomainError("intersection: non-complementary spans at a transverse point");
      total += wa * wb * Rat(*index);
    }
  return total;
}

Rat stable_intersection_number(const WeightedFan& a, const WeightedFan& b,
                               const ShiftPolicy& policy) {
  if (!is_balanced(a) || !is_balanced(b))
    throw DomainError("stable intersection: both fans must be balanced");
  std::size_t n = a.fan.ambient;
  unsigned need = std::max(1u, policy.verifications);
  std::vector<Rat> values;
  unsigned failures = 0, index = 0;
  while (values.size() < need) {
    auto v = intersection_number_at_shift(a, b, sample_shift(n, policy.seed, index++));
    if (v) {
      values.push_back(*v);
    } else if (++failures > policy.max_retries) {
      throw ResourceError("stable intersection: exhausted the generic-shift retry budget");
    }
  }
  for (const auto& v : values)
    if (v != values[0]) throw DomainError("stable intersection: count depends on the shift");
  return values[0];
}

VecQ sample_shift(std::size_t n, std::uint64_t seed, unsigned index) {
  std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (std::uint64_t{index} + 1));
  VecQ s(n);
  for (std::size_t i = 0; i < n; ++i) {
    long long numerator = static_cast<long long>(rng() % 20001) - 10000;
    unsigned long long denominator = 2 * (rng() % 500) + 1;
    s[i] = Rat(Int(numerator), Int(denominator));
  }
  return s;
}

Fan normal_fan(const LatticePolytope& p) {
  std::size_t n = p.ambient();
  if (p.dim() != n) throw DomainError("normal fan: polytope must be full-dimensional");
  std::vector<Cone> cells;
  for (const auto& v : p.vertices()) {
    std::vector<VecZ> halfspaces;
    for (const auto& u : p.vertices())
      if (u != v) halfspaces.push_back(sub(u, v));
    cells.push_back(cone_from_halfspaces(n, {}, halfspaces));
  }
  return closure_fan(n, cells);
}

}  // namespace tropkit
