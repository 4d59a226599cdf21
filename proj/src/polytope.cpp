#include "tropkit/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropkit/dd.hpp"
#include "tropkit/errors.hpp"
#include "tropkit/lattice.hpp"

namespace tropkit {

namespace {

// Chart coordinates of p - base in the saturated basis `chart` (rows).
VecQ chart_coords(const Sublattice& chart, const VecQ& diff) {
  std::vector<VecQ> sys(diff.size(), VecQ(chart.rank()));
  for (std::size_t i = 0; i < diff.size(); ++i)
    for (std::size_t j = 0; j < chart.rank(); ++j) sys[i][j] = Rat(chart.basis[j][i]);
  auto t = solve_rational(sys, diff);
  if (!t) throw DomainError("polytope: point outside chart span");
  return *t;
}

// Jarvis march on integer points, counterclockwise from the lex-min point.
// Returns indices of hull vertices (collinear edge-interior points skipped).
std::vector<std::size_t> gift_wrap_2d(const std::vector<VecZ>& pts) {
  std::size_t start = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (lex_less(pts[i], pts[start])) start = i;
  auto cross = [&](const VecZ& o, const VecZ& a, const VecZ& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  auto dist2 = [&](const VecZ& a, const VecZ& b) {
    Int dx = a[0] - b[0], dy = a[1] - b[1];
    return dx * dx + dy * dy;
  };
  std::vector<std::size_t> order;
  std::size_t cur = start;
  do {
    order.push_back(cur);
    std::size_t best = (cur + 1) % pts.size();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i == cur) continue;
      Int c = cross(pts[cur], pts[best], pts[i]);
      if (c < 0 || (c == 0 && dist2(pts[i], pts[cur]) > dist2(pts[best], pts[cur]))) best = i;
    }
    cur = best;
  } while (cur != start && order.size() <= pts.size());
  if (cur != start) throw DomainError("polytope: hull walk failed to close");
  return order;
}

struct QFacet {
  VecZ normal;  // primitive inward
  Rat offset;
};

// Irredundant facets of the full-dimensional conv(points) via the
// homogenization cone { (a0, a) : a0 + a·p >= 0 for all p }.
std::vector<QFacet> rational_facets(std::size_t n, const std::vector<VecQ>& points) {
  std::vector<VecZ> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    Int mu = 1;
    for (const auto& x : p) mu = lcm(mu, den(x));
    VecZ row(n + 1);
    row[0] = mu;
    for (std::size_t i = 0; i < n; ++i) row[i + 1] = num(p[i]) * (mu / den(p[i]));
    rows.push_back(std::move(row));
  }
  DDResult dd = extreme_rays(n + 1, {}, rows);
  if (dd.lineality.rank() > 0)
    throw DomainError("polytope: facet cone not pointed (polytope degenerate)");
  std::vector<QFacet> out;
  for (const auto& ray : dd.rays) {
    VecZ a(ray.begin() + 1, ray.end());
    if (is_zero(a)) continue;  // the trivial 1 >= 0 direction
    Int g = content(a);
    for (auto& x : a) x /= g;
    out.push_back({std::move(a), Rat(-ray[0]) / Rat(g)});
  }
  return out;
}

// Lebesgue volume of a full-dimensional conv(points) in R^n by pyramid
// recursion; facet volumes are measured in saturated lattice charts, which
// makes every intermediate quantity rational.
Rat pyramid_volume(std::size_t n, const std::vector<VecQ>& points) {
  if (n == 1) {
    Rat lo = points[0][0], hi = points[0][0];
    for (const auto& p : points) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    return hi - lo;
  }
  Rat acc(0);
  const VecQ& apex = points[0];
  for (const auto& f : rational_facets(n, points)) {
    Rat h = dot(f.normal, apex) - f.offset;
    if (h == 0) continue;
    std::vector<VecQ> on;
    for (const auto& p : points)
      if (dot(f.normal, p) == f.offset) on.push_back(p);
    MatZ dirs(0, n);
    for (std::size_t i = 1; i < on.size(); ++i) {
      VecQ d = sub(on[i], on[0]);
      if (!is_zero(d)) dirs.append_row(primitive_direction(d));
    }
    Sublattice chart = saturate(dirs);
    std::vector<VecQ> mapped;
    mapped.reserve(on.size());
    for (const auto& p : on) mapped.push_back(chart_coords(chart, sub(p, on[0])));
    acc += h * pyramid_volume(n - 1, mapped);
  }
  return acc / Rat(n);
}

// Integral (n-1)-volume of a facet given by its points: Lebesgue volume in
// a saturated chart of the facet's direction space.
Rat integral_volume_in_chart(std::size_t n, const std::vector<VecQ>& facet_points) {
  if (n == 1) return Rat(1);  // 0-dimensional facet, one lattice cell
  MatZ dirs(0, n);
  for (std::size_t i = 1; i < facet_points.size(); ++i) {
    VecQ d = sub(facet_points[i], facet_points[0]);
    if (!is_zero(d)) dirs.append_row(primitive_direction(d));
  }
  Sublattice chart = saturate(dirs);
  std::vector<VecQ> mapped;
  for (const auto& p : facet_points)
    mapped.push_back(chart_coords(chart, sub(p, facet_points[0])));
  return pyramid_volume(n - 1, mapped);
}

}  // namespace

LatticePolytope LatticePolytope::hull(std::size_t n, const std::vector<VecZ>& points) {
  if (points.empty()) throw DomainError("hull: no points");
  for (const auto& p : points)
    if (p.size() != n) throw DomainError("hull: point dimension mismatch");

  std::vector<VecZ> pts = points;
  std::sort(pts.begin(), pts.end(), [](const VecZ& a, const VecZ& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope out;
  out.n_ = n;

  const VecZ& base = pts[0];
  MatZ diffs(0, n);
  for (const auto& p : pts) {
    VecZ d = sub(p, base);
    if (!is_zero(d)) diffs.append_row(d);
  }
  Sublattice chart = saturate(diffs);
  const std::size_t d = chart.rank();
  out.dim_ = d;

  if (d == 0) {
    out.vertices_ = {base};
    return out;
  }

  // Points in chart coordinates (integral: the chart basis is saturated).
  std::vector<VecZ> reduced;
  reduced.reserve(pts.size());
  for (const auto& p : pts)
    reduced.push_back(to_integer(chart_coords(chart, to_rational(sub(p, base)))));

  std::vector<std::size_t> keep;
  if (d == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < reduced.size(); ++i) {
      if (reduced[i][0] < reduced[lo][0]) lo = i;
      if (reduced[i][0] > reduced[hi][0]) hi = i;
    }
    keep = {lo, hi};
  } else if (d == 2) {
    keep = gift_wrap_2d(reduced);
  } else {
    std::vector<VecQ> qpts;
    qpts.reserve(reduced.size());
    for (const auto& p : reduced) qpts.push_back(to_rational(p));
    auto fs = rational_facets(d, qpts);
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      MatZ active(0, d);
      for (const auto& f : fs)
        if (Rat(dot(f.normal, reduced[i])) == f.offset) active.append_row(f.normal);
      if (rank(active) == d) keep.push_back(i);
    }
  }

  for (std::size_t i : keep) out.vertices_.push_back(pts[i]);
  std::sort(out.vertices_.begin(), out.vertices_.end(),
            [](const VecZ& a, const VecZ& b) { return lex_less(a, b); });
  out.vertices_.erase(std::unique(out.vertices_.begin(), out.vertices_.end()),
                      out.vertices_.end());

  if (d == n) {
    std::vector<VecQ> qverts;
    for (const auto& v : out.vertices_) qverts.push_back(to_rational(v));
    for (auto& f : rational_facets(n, qverts)) {
      Facet fac;
      fac.normal = std::move(f.normal);
      if (!is_integer(f.offset))
        throw DomainError("hull: non-integral facet offset on lattice input");
      fac.offset = num(f.offset);
      for (std::size_t i = 0; i < out.vertices_.size(); ++i)
        if (dot(fac.normal, out.vertices_[i]) == fac.offset) fac.vertex_indices.push_back(i);
      out.facets_.push_back(std::move(fac));
    }
    std::sort(out.facets_.begin(), out.facets_.end(),
              [](const Facet& a, const Facet& b) { return lex_less(a.normal, b.normal); });
  }
  return out;
}

const std::vector<Facet>& LatticePolytope::facets() const {
  if (dim_ != n_) throw DomainError("facets: polytope is not full-dimensional");
  return facets_;
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient() != q.ambient()) throw DomainError("minkowski: dimension mismatch");
  std::vector<VecZ> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  return LatticePolytope::hull(p.ambient(), sums);
}

LatticePolytope scale(const LatticePolytope& p, const Rat& c) {
  if (c <= 0) throw DomainError("scale: factor must be positive");
  std::vector<VecZ> scaled;
  for (const auto& v : p.vertices()) {
    VecZ w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      Rat x = Rat(v[i]) * c;
      if (!is_integer(x)) throw DomainError("scale: result is not a lattice polytope");
      w[i] = num(x);
    }
    scaled.push_back(std::move(w));
  }
  return LatticePolytope::hull(p.ambient(), scaled);
}

Rat volume(const LatticePolytope& p) {
  if (p.dim() < p.ambient()) return Rat(0);
  if (p.ambient() == 0) return Rat(1);
  std::vector<VecQ> pts;
  for (const auto& v : p.vertices()) pts.push_back(to_rational(v));
  return pyramid_volume(p.ambient(), pts);
}

Rat volume_ehrhart_oracle(const LatticePolytope& p, const Int& budget) {
  const std::size_t n = p.ambient();
  if (p.dim() != n || n == 0) throw DomainError("ehrhart: polytope is not full-dimensional");
  const auto& fs = p.facets();

  VecZ lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = p.vertices()[0][i];
    hi[i] = p.vertices()[0][i];
    for (const auto& v : p.vertices()) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  Int total = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    Int cells = 1;
    for (std::size_t i = 0; i < n; ++i) cells *= Int(k) * (hi[i] - lo[i]) + 1;
    total += cells;
  }
  if (total > budget) throw ResourceError("ehrhart: enumeration budget exceeded");

  std::vector<Int> counts(n + 1);
  counts[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Int count = 0;
    VecZ x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = lo[i] * Int(k);
    while (true) {
      bool inside = true;
      for (const auto& f : fs)
        if (dot(f.normal, x) < Int(k) * f.offset) {
          inside = false;
          break;
        }
      if (inside) ++count;
      std::size_t j = 0;
      while (j < n) {
        x[j] += 1;
        if (x[j] <= hi[j] * Int(k)) break;
        x[j] = lo[j] * Int(k);
        ++j;
      }
      if (j == n) break;
    }
    counts[k] = count;
  }

  // Leading coefficient = n-th finite difference / n!.
  Rat lead(0);
  for (std::size_t j = 0; j <= n; ++j) {
    Int term = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) * counts[j];
    if ((n - j) % 2 == 0)
      lead += Rat(term);
    else
      lead -= Rat(term);
  }
  return lead / Rat(factorial(static_cast<unsigned>(n)));
}

Rat mixed_volume(const std::vector<LatticePolytope>& polytopes) {
  if (polytopes.empty()) throw DomainError("mixed volume: no polytopes");
  const std::size_t n = polytopes[0].ambient();
  if (polytopes.size() != n) throw DomainError("mixed volume: need exactly n polytopes in R^n");
  for (const auto& p : polytopes)
    if (p.ambient() != n) throw DomainError("mixed volume: dimension mismatch");

  Rat acc(0);
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    LatticePolytope sum;
    bool first = true;
    std::size_t sz = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::size_t(1) << i))) continue;
      ++sz;
      sum = first ? polytopes[i] : minkowski_sum(sum, polytopes[i]);
      first = false;
    }
    Rat v = volume(sum);
    if ((n - sz) % 2 == 0)
      acc += v;
    else
      acc -= v;
  }
  return acc / Rat(factorial(static_cast<unsigned>(n)));
}

Rat facet_integral_volume(const LatticePolytope& p, const Facet& f) {
  const auto& fs = p.facets();
  const Facet* match = nullptr;
  for (const auto& g : fs)
    if (g.normal == f.normal && g.offset == f.offset) {
      match = &g;
      break;
    }
  if (!match) throw DomainError("facet volume: not a facet of the polytope");
  std::vector<VecQ> pts;
  for (std::size_t i : match->vertex_indices) pts.push_back(to_rational(p.vertices()[i]));
  return integral_volume_in_chart(p.ambient(), pts);
}

VecQ pascal_residual(const LatticePolytope& p) {
  const auto& fs = p.facets();
  VecQ acc(p.ambient(), Rat(0));
  for (const auto& f : fs) {
    Rat w = facet_integral_volume(p, f);
    for (std::size_t i = 0; i < p.ambient(); ++i) acc[i] += w * Rat(f.normal[i]);
  }
  return acc;
}

bool virtual_equal(const VirtualPolytope& a, const VirtualPolytope& b) {
  if (a.plus.ambient() != b.plus.ambient()) throw DomainError("virtual: dimension mismatch");
  return minkowski_sum(a.plus, b.minus) == minkowski_sum(b.plus, a.minus);
}

Rat volume_of_rational_points(std::size_t n, const std::vector<VecQ>& points) {
  if (points.empty()) return Rat(0);
  if (n == 0) return Rat(1);
  std::vector<VecQ> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  if (rank_rational(diffs) < n) return Rat(0);
  return pyramid_volume(n, points);
}

bool halfspaces_feasible(std::size_t n, const std::vector<std::pair<VecZ, Rat>>& ineqs) {
  std::vector<VecZ> rows;
  for (const auto& [a, c] : ineqs) {
    if (a.size() != n) throw DomainError("halfspaces: dimension mismatch");
    VecZ row(n + 1);
    row[0] = -num(c);
    for (std::size_t i = 0; i < n; ++i) row[i + 1] = a[i] * den(c);
    rows.push_back(std::move(row));
  }
  VecZ nonneg(n + 1, Int(0));
  nonneg[0] = 1;
  rows.push_back(std::move(nonneg));

  DDResult dd = extreme_rays(n + 1, {}, rows);
  for (const auto& r : dd.rays)
    if (r[0] > 0) return true;
  return false;
}

std::vector<VecQ> vertices_of_halfspaces(std::size_t n,
                                         const std::vector<std::pair<VecZ, Rat>>& ineqs) {
  std::vector<VecZ> rows;
  for (const auto& [a, c] : ineqs) {
    if (a.size() != n) throw DomainError("halfspaces: dimension mismatch");
    VecZ row(n + 1);
    row[0] = -num(c);
    for (std::size_t i = 0; i < n; ++i) row[i + 1] = a[i] * den(c);
    rows.push_back(std::move(row));
  }
  VecZ nonneg(n + 1, Int(0));
  nonneg[0] = 1;
  rows.push_back(std::move(nonneg));

  DDResult dd = extreme_rays(n + 1, {}, rows);
  std::vector<VecQ> verts;
  bool has_point = false, has_direction = dd.lineality.rank() > 0;
  for (const auto& r : dd.rays) {
    if (r[0] > 0) {
      has_point = true;
      VecQ v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = Rat(r[i + 1]) / Rat(r[0]);
      verts.push_back(std::move(v));
    } else {
      has_direction = true;
    }
  }
  if (!has_point) return {};
  if (has_direction) throw DomainError("halfspaces: feasible set is unbounded");
  std::sort(verts.begin(), verts.end(), [](const VecQ& a, const VecQ& b) { return lex_less(a, b); });
  return verts;
}

}  // namespace tropkit
