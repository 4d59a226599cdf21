#include <doctest.h>

#include <random>

#include "tropkit/errors.hpp"
#include "tropkit/polytope.hpp"

using namespace tropkit;

namespace {

VecZ v2(int a, int b) { return {Int(a), Int(b)}; }
VecZ v3(int a, int b, int c) { return {Int(a), Int(b), Int(c)}; }

LatticePolytope unit_square() {
  return LatticePolytope::hull(2, {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)});
}
LatticePolytope unit_triangle() {
  return LatticePolytope::hull(2, {v2(0, 0), v2(1, 0), v2(0, 1)});
}
LatticePolytope unit_cube() {
  std::vector<VecZ> vs;
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) vs.push_back(v3(x, y, z));
  return LatticePolytope::hull(3, vs);
}

// Shoelace area for lex-comparison with the pyramid recursion.
Rat shoelace(const std::vector<VecZ>& ccw) {
  Rat acc(0);
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const VecZ& a = ccw[i];
    const VecZ& b = ccw[(i + 1) % ccw.size()];
    acc += Rat(a[0] * b[1] - a[1] * b[0]);
  }
  return abs(acc) / 2;
}

LatticePolytope random_polytope(std::mt19937& rng, std::size_t dim, int lo, int hi,
                                std::size_t npts) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<VecZ> pts;
  for (std::size_t i = 0; i < npts; ++i) {
    VecZ p(dim);
    for (auto& x : p) x = dist(rng);
    pts.push_back(std::move(p));
  }
  return LatticePolytope::hull(dim, pts);
}

}  // namespace

TEST_CASE("hull drops non-extreme points") {
  auto p = LatticePolytope::hull(2, {v2(0, 2), v2(0, 0), v2(2, 0), v2(3, 0)});
  CHECK(p.vertices() == std::vector<VecZ>{v2(0, 0), v2(0, 2), v2(3, 0)});
  CHECK(p.dim() == 2);

  auto pt = LatticePolytope::hull(2, {v2(5, 7)});
  CHECK(pt.dim() == 0);
  CHECK(pt.vertices() == std::vector<VecZ>{v2(5, 7)});

  auto seg = LatticePolytope::hull(2, {v2(0, 0), v2(1, 0), v2(2, 0)});
  CHECK(seg.dim() == 1);
  CHECK(seg.vertices() == std::vector<VecZ>{v2(0, 0), v2(2, 0)});

  CHECK_THROWS_AS(LatticePolytope::hull(2, {}), DomainError);
}

TEST_CASE("hull in dimension 3 and 4") {
  auto cube = unit_cube();
  CHECK(cube.vertices().size() == 8);
  CHECK(cube.dim() == 3);

  // Octahedron plus interior points.
  std::vector<VecZ> pts = {v3(1, 0, 0), v3(-1, 0, 0), v3(0, 1, 0),
                           v3(0, -1, 0), v3(0, 0, 1), v3(0, 0, -1), v3(0, 0, 0)};
  auto oct = LatticePolytope::hull(3, pts);
  CHECK(oct.vertices().size() == 6);
  CHECK(oct.facets().size() == 8);

  // 4-dimensional cross-polytope.
  std::vector<VecZ> pts4;
  for (int i = 0; i < 4; ++i)
    for (int s : {-1, 1}) {
      VecZ p(4, Int(0));
      p[i] = s;
      pts4.push_back(p);
    }
  pts4.push_back(VecZ(4, Int(0)));
  auto cross4 = LatticePolytope::hull(4, pts4);
  CHECK(cross4.vertices().size() == 8);
  CHECK(cross4.facets().size() == 16);
  CHECK(volume(cross4) == Rat(2, 3));  // 2^n / n!
}

TEST_CASE("minkowski sums") {
  auto pent = minkowski_sum(unit_square(), unit_triangle());
  CHECK(pent.vertices() ==
        std::vector<VecZ>{v2(0, 0), v2(0, 2), v2(1, 2), v2(2, 0), v2(2, 1)});

  auto point = LatticePolytope::hull(2, {v2(3, 4)});
  auto moved = minkowski_sum(unit_triangle(), point);
  CHECK(moved.vertices() == std::vector<VecZ>{v2(3, 4), v2(3, 5), v2(4, 4)});

  auto doubled = minkowski_sum(unit_triangle(), unit_triangle());
  CHECK(doubled == scale(unit_triangle(), Rat(2)));
}

TEST_CASE("scaling") {
  auto sq3 = scale(unit_square(), Rat(3));
  CHECK(volume(sq3) == Rat(9));
  auto seg = LatticePolytope::hull(2, {v2(0, 0), v2(2, 0)});
  CHECK(scale(seg, Rat(1, 2)) == LatticePolytope::hull(2, {v2(0, 0), v2(1, 0)}));
  CHECK(scale(seg, Rat(1)) == seg);
  CHECK_THROWS_AS(scale(seg, Rat(0)), DomainError);
  CHECK_THROWS_AS(scale(unit_square(), Rat(1, 2)), DomainError);
}

TEST_CASE("volume pinned values") {
  CHECK(volume(unit_square()) == Rat(1));
  CHECK(volume(LatticePolytope::hull(2, {v2(0, 0), v2(3, 0), v2(0, 2)})) == Rat(3));
  CHECK(volume(LatticePolytope::hull(2, {v2(0, 0), v2(1, 1)})) == Rat(0));
  CHECK(volume(unit_cube()) == Rat(1));
  CHECK(volume(unit_triangle()) == Rat(1, 2));
  CHECK(volume(LatticePolytope::hull(3, {v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)})) ==
        Rat(1, 6));
}

TEST_CASE("volume matches shoelace on random polygons") {
  std::mt19937 rng(8101);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_polytope(rng, 2, -5, 5, 6);
    if (p.dim() < 2) continue;
    // Rebuild counterclockwise order via facet adjacency is overkill;
    // shoelace needs any CCW order, so sort vertices by angle around the
    // centroid using exact cross products relative to the lex-min vertex.
    std::vector<VecZ> vs = p.vertices();
    VecZ base = vs.front();
    std::sort(vs.begin() + 1, vs.end(), [&](const VecZ& a, const VecZ& b) {
      Int c = (a[0] - base[0]) * (b[1] - base[1]) - (a[1] - base[1]) * (b[0] - base[0]);
      return c > 0;
    });
    CHECK(volume(p) == shoelace(vs));
  }
}

TEST_CASE("ehrhart oracle pinned values") {
  CHECK(volume_ehrhart_oracle(unit_square()) == Rat(1));
  CHECK(volume_ehrhart_oracle(unit_triangle()) == Rat(1, 2));
  CHECK(volume_ehrhart_oracle(LatticePolytope::hull(2, {v2(0, 0), v2(3, 0), v2(0, 2)})) == Rat(3));
  CHECK(volume_ehrhart_oracle(unit_cube()) == Rat(1));
  CHECK_THROWS_AS(volume_ehrhart_oracle(LatticePolytope::hull(2, {v2(0, 0), v2(1, 0)})),
                  DomainError);
  CHECK_THROWS_AS(volume_ehrhart_oracle(scale(unit_square(), Rat(50)), Int(100)), ResourceError);
}

TEST_CASE("volume equals ehrhart oracle on random polytopes") {
  std::mt19937 rng(8102);
  for (int trial = 0; trial < 25; ++trial) {
    auto p = random_polytope(rng, 2 + trial % 2, 0, 5, 7);
    if (p.dim() < p.ambient()) continue;
    CHECK(volume(p) == volume_ehrhart_oracle(p));
  }
}

TEST_CASE("mixed volume pinned values") {
  CHECK(mixed_volume({unit_square(), unit_square()}) == Rat(1));
  CHECK(mixed_volume({unit_square(), unit_triangle()}) == Rat(1));
  auto seg_up = LatticePolytope::hull(2, {v2(0, 0), v2(1, 1)});
  auto seg_dn = LatticePolytope::hull(2, {v2(0, 0), v2(1, -1)});
  CHECK(mixed_volume({seg_up, seg_dn}) == Rat(1));
  CHECK_THROWS_AS(mixed_volume({unit_square()}), DomainError);
}

TEST_CASE("mixed volume axioms on random instances") {
  std::mt19937 rng(8103);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + trial % 2;
    std::vector<LatticePolytope> ps;
    for (std::size_t i = 0; i < n; ++i) {
      auto p = random_polytope(rng, n, 0, 3, 5);
      ps.push_back(p);
    }
    // Symmetry.
    std::vector<LatticePolytope> rev(ps.rbegin(), ps.rend());
    CHECK(mixed_volume(ps) == mixed_volume(rev));
    // Diagonal.
    std::vector<LatticePolytope> diag(n, ps[0]);
    CHECK(mixed_volume(diag) == volume(ps[0]));
    // Multilinearity in the first slot with integer coefficient c:
    // V(cA + B, ...) = c V(A, ...) + V(B, ...).
    auto a = random_polytope(rng, n, 0, 3, 4);
    auto b = random_polytope(rng, n, 0, 3, 4);
    Rat c(1 + trial % 3);
    auto combo = minkowski_sum(scale(a, c), b);
    std::vector<LatticePolytope> lhs = ps, va = ps, vb = ps;
    lhs[0] = combo;
    va[0] = a;
    vb[0] = b;
    CHECK(mixed_volume(lhs) == c * mixed_volume(va) + mixed_volume(vb));
  }
}

TEST_CASE("facets pinned values") {
  auto fs = unit_square().facets();
  REQUIRE(fs.size() == 4);
  // Lex order on normals: (-1,0), (0,-1), (0,1), (1,0).
  CHECK(fs[0].normal == v2(-1, 0));
  CHECK(fs[0].offset == -1);
  CHECK(fs[3].normal == v2(1, 0));
  CHECK(fs[3].offset == 0);

  auto tri = unit_triangle().facets();
  REQUIRE(tri.size() == 3);
  CHECK(tri[0].normal == v2(-1, -1));
  CHECK(tri[0].offset == -1);
  CHECK(tri[1].normal == v2(0, 1));
  CHECK(tri[2].normal == v2(1, 0));

  auto big = LatticePolytope::hull(2, {v2(0, 0), v2(3, 0), v2(0, 2)}).facets();
  REQUIRE(big.size() == 3);
  CHECK(big[0].normal == v2(-2, -3));
  CHECK(big[0].offset == -6);

  CHECK_THROWS_AS(LatticePolytope::hull(2, {v2(0, 0), v2(1, 0)}).facets(), DomainError);
}

TEST_CASE("facet integral volumes") {
  auto p = LatticePolytope::hull(2, {v2(0, 0), v2(2, 0), v2(0, 2)});
  const auto& fs = p.facets();
  // Hypotenuse has normal (-1,-1).
  for (const auto& f : fs) {
    if (f.normal == v2(-1, -1)) CHECK(facet_integral_volume(p, f) == Rat(2));
    if (f.normal == v2(0, 1)) CHECK(facet_integral_volume(p, f) == Rat(2));
  }

  auto q = LatticePolytope::hull(2, {v2(0, 0), v2(3, 0), v2(0, 2)});
  for (const auto& f : q.facets()) {
    if (f.normal == v2(0, 1)) CHECK(facet_integral_volume(q, f) == Rat(3));
    if (f.normal == v2(-2, -3)) CHECK(facet_integral_volume(q, f) == Rat(1));
  }

  auto cube = unit_cube();
  for (const auto& f : cube.facets()) CHECK(facet_integral_volume(cube, f) == Rat(1));

  Facet fake;
  fake.normal = v2(5, 5);
  fake.offset = 0;
  CHECK_THROWS_AS(facet_integral_volume(p, fake), DomainError);
}

TEST_CASE("pascal residual vanishes") {
  CHECK(is_zero(pascal_residual(LatticePolytope::hull(2, {v2(0, 0), v2(2, 0), v2(0, 2)}))));
  CHECK(is_zero(pascal_residual(unit_cube())));
  std::mt19937 rng(8104);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto p = random_polytope(rng, n, -4, 4, 6);
    if (p.dim() < n) continue;
    CHECK(is_zero(pascal_residual(p)));
  }
}

TEST_CASE("virtual polytope equality") {
  auto s = unit_square();
  auto t = unit_triangle();
  auto zero = LatticePolytope::hull(2, {v2(0, 0)});
  CHECK(virtual_equal({s, s}, {t, t}));
  CHECK(virtual_equal({scale(t, Rat(2)), t}, {t, zero}));
  CHECK_FALSE(virtual_equal({s, zero}, {t, zero}));
}

TEST_CASE("minkowski cancellation") {
  std::mt19937 rng(8105);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_polytope(rng, 2, 0, 4, 5);
    auto b = random_polytope(rng, 2, 0, 4, 5);
    auto c = random_polytope(rng, 2, 0, 4, 5);
    if (minkowski_sum(a, c) == minkowski_sum(b, c)) CHECK(a == b);
    // Commutative and associative.
    CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
    CHECK(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)));
  }
}

TEST_CASE("homogeneity of volume") {
  std::mt19937 rng(8106);
  for (int trial = 0; trial < 10; ++trial) {
    auto p = random_polytope(rng, 2, 0, 4, 5);
    Rat v = volume(p);
    CHECK(volume(scale(p, Rat(3))) == Rat(9) * v);
  }
  auto c = unit_cube();
  CHECK(volume(scale(c, Rat(2))) == Rat(8));
}

TEST_CASE("rational helpers") {
  // Half-square via rational points.
  std::vector<VecQ> pts = {{Rat(0), Rat(0)}, {Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 2)},
                           {Rat(1, 2), Rat(1, 2)}};
  CHECK(volume_of_rational_points(2, pts) == Rat(1, 4));
  CHECK(volume_of_rational_points(2, {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}) == Rat(0));

  // Unit square from halfspaces.
  std::vector<std::pair<VecZ, Rat>> sys = {
      {v2(1, 0), Rat(0)}, {v2(0, 1), Rat(0)}, {v2(-1, 0), Rat(-1)}, {v2(0, -1), Rat(-1)}};
  auto vs = vertices_of_halfspaces(2, sys);
  REQUIRE(vs.size() == 4);
  CHECK(vs[0] == VecQ{Rat(0), Rat(0)});
  CHECK(vs[3] == VecQ{Rat(1), Rat(1)});

  // Infeasible.
  std::vector<std::pair<VecZ, Rat>> bad = {{v2(1, 0), Rat(1)}, {v2(-1, 0), Rat(0)}};
  CHECK(vertices_of_halfspaces(2, bad).empty());

  // Unbounded.
  std::vector<std::pair<VecZ, Rat>> open = {{v2(1, 0), Rat(0)}, {v2(0, 1), Rat(0)}};
  CHECK_THROWS_AS(vertices_of_halfspaces(2, open), DomainError);
}
