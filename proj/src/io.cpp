#include "tropkit/io.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropkit/errors.hpp"

namespace tropkit {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field: ") + key);
  return *it;
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.is_number_float() || j.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

Int int_from_json(const Json& j) {
  if (!j.is_number_integer() || j.is_number_float())
    throw ParseError("expected an integer coordinate");
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  return Int(j.get<long long>());
}

Json int_to_json(const Int& x) {
  if (x > Int(std::numeric_limits<long long>::max()) ||
      x < Int(std::numeric_limits<long long>::min()))
    throw DomainError("integer too large to serialize");
  return Json(x.convert_to<long long>());
}

VecZ vecz_from_json(const Json& j, std::size_t arity) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  if (j.size() != arity) throw ParseError("coordinate arity mismatch");
  VecZ out;
  for (const auto& c : j) out.push_back(int_from_json(c));
  return out;
}

Json vecz_to_json(const VecZ& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_to_json(x));
  return out;
}

std::vector<std::pair<Cone, std::optional<Rat>>> cones_from_json(const Json& j,
                                                                 std::size_t n) {
  const Json& cones = field(j, "cones");
  if (!cones.is_array()) throw ParseError("cones must be an array");
  std::vector<std::pair<Cone, std::optional<Rat>>> out;
  for (const auto& cj : cones) {
    const Json& gens = field(cj, "generators");
    if (!gens.is_array()) throw ParseError("generators must be an array");
    std::vector<VecZ> rays;
    for (const auto& g : gens) rays.push_back(vecz_from_json(g, n));
    std::optional<Rat> w;
    if (cj.is_object() && cj.contains("weight")) w = rat_from_json(cj.at("weight"));
    out.emplace_back(cone_from_rays(n, rays), std::move(w));
  }
  return out;
}

}  // namespace

Json rat_to_json(const Rat& r) { return Json(to_string(r)); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer() && !j.is_number_float()) return Rat(int_from_json(j));
  throw ParseError("expected a rational as \"p/q\" or an integer");
}

Json polytope_to_json(const LatticePolytope& p) {
  Json out;
  out["dim"] = p.ambient();
  Json verts = Json::array();
  for (const VecZ& v : p.vertices()) verts.push_back(vecz_to_json(v));
  out["vertices"] = verts;
  return out;
}

LatticePolytope polytope_from_json(const Json& j) {
  std::size_t n = size_from_json(field(j, "dim"), "dim");
  const Json& verts = field(j, "vertices");
  if (!verts.is_array()) throw ParseError("vertices must be an array");
  std::vector<VecZ> pts;
  for (const auto& v : verts) pts.push_back(vecz_from_json(v, n));
  return LatticePolytope::hull(n, pts);
}

Json fan_to_json(const Fan& f) {
  Json out;
  out["dim"] = f.ambient;
  Json cones = Json::array();
  for (std::size_t idx : f.maximal) {
    Json cj;
    Json gens = Json::array();
    for (const VecZ& r : f.cones[idx].rays) gens.push_back(vecz_to_json(r));
    cj["generators"] = gens;
    cones.push_back(cj);
  }
  out["cones"] = cones;
  return out;
}

Json weighted_fan_to_json(const WeightedFan& w) {
  Json out;
  out["dim"] = w.fan.ambient;
  Json cones = Json::array();
  for (const Cone& c : w.weighted_cones()) {
    Json cj;
    Json gens = Json::array();
    for (const VecZ& r : c.rays) gens.push_back(vecz_to_json(r));
    cj["generators"] = gens;
    cj["weight"] = rat_to_json(w.weight_of(c));
    cones.push_back(cj);
  }
  out["cones"] = cones;
  return out;
}

Fan fan_from_json(const Json& j) {
  std::size_t n = size_from_json(field(j, "dim"), "dim");
  std::vector<Cone> cones;
  for (auto& [c, w] : cones_from_json(j, n)) cones.push_back(std::move(c));
  return validate_fan(n, cones);
}

WeightedFan weighted_fan_from_json(const Json& j) {
  std::size_t n = size_from_json(field(j, "dim"), "dim");
  std::vector<std::pair<Cone, Rat>> weighted;
  std::size_t d = 0;
  bool have_d = false;
  for (auto& [c, w] : cones_from_json(j, n)) {
    if (!have_d) {
      d = c.dim;
      have_d = true;
    } else if (c.dim != d) {
      throw DomainError("weighted fan cones must share one dimension");
    }
    weighted.emplace_back(std::move(c), w.value_or(Rat(1)));
  }
  return make_weighted_fan(n, d, weighted);
}

Json polynomial_to_json(const LaurentPolynomial& f) {
  Json out;
  out["n"] = f.n;
  Json terms = Json::array();
  for (const LaurentTerm& t : f.terms) {
    Json tj;
    tj["exp"] = vecz_to_json(t.exponent);
    tj["coef"] = t.generic ? Json("generic") : rat_to_json(t.coefficient);
    terms.push_back(tj);
  }
  out["terms"] = terms;
  return out;
}

LaurentPolynomial polynomial_from_json(const Json& j) {
  std::size_t n = size_from_json(field(j, "n"), "n");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("terms must be an array");
  std::vector<LaurentTerm> parsed;
  for (const auto& tj : terms) {
    LaurentTerm t;
    t.exponent = vecz_from_json(field(tj, "exp"), n);
    const Json& coef = field(tj, "coef");
    if (coef.is_string() && coef.get<std::string>() == "generic") {
      t.coefficient = Rat(1);
      t.generic = true;
    } else {
      t.coefficient = rat_from_json(coef);
    }
    parsed.push_back(std::move(t));
  }
  return make_laurent(n, parsed);
}

std::string monomial_string(const VecZ& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += e.size() <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + e[i].str();
  }
  return out.empty() ? "1" : out;
}

Json hilbert_report(const HomogeneousPolynomial& p) {
  HilbertFunction h = hilbert_function(p);
  Json out;
  out["hilbert"] = h.values;
  out["poincare"] = poincare_check(h);
  Json vp = Json::object();
  for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it)
    vp[monomial_string(it->first)] = to_string(it->second);
  out["volume_polynomial"] = vp;
  return out;
}

// ---- SVG rendering ----

namespace {

constexpr int kCanvas = 420;
constexpr int kMargin = 30;

// Nearest-thousandth decimal from exact arithmetic; no floating point.
std::string svg_num(const Rat& r) {
  Int p = num(r) * 1000;
  const Int& q = den(r);
  bool neg = p < 0;
  if (neg) p = -p;
  Int t = (2 * p + q) / (2 * q);
  Int whole = t / 1000;
  std::string s = whole.str();
  if (neg && t != 0) s.insert(0, "-");
  Int frac = t % 1000;
  if (frac != 0) {
    std::string f = frac.str();
    f.insert(0, 3 - f.size(), '0');
    while (f.back() == '0') f.pop_back();
    s += "." + f;
  }
  return s;
}

std::string svg_header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"420\" height=\"420\" "
         "viewBox=\"0 0 420 420\">\n"
         "<rect width=\"420\" height=\"420\" fill=\"#ffffff\"/>\n";
}

std::string point_attr(const Rat& x, const Rat& y) {
  return svg_num(x) + "," + svg_num(y);
}

// Exact counterclockwise order around the centroid.
std::vector<VecQ> cyclic_order(const std::vector<VecZ>& vertices) {
  VecQ c(2, Rat(0));
  for (const VecZ& v : vertices) {
    c[0] += Rat(v[0]);
    c[1] += Rat(v[1]);
  }
  c[0] /= Rat(Int(vertices.size()));
  c[1] /= Rat(Int(vertices.size()));
  std::vector<VecQ> pts;
  for (const VecZ& v : vertices) pts.push_back({Rat(v[0]), Rat(v[1])});
  auto half = [&](const VecQ& p) {
    Rat dy = p[1] - c[1];
    if (dy != 0) return dy > 0 ? 0 : 1;
    return p[0] - c[0] >= 0 ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const VecQ& a, const VecQ& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rat cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
    if (cross != 0) return cross > 0;
    return lex_less(a, b);
  });
  return pts;
}

}  // namespace

std::string render_svg(const LatticePolytope& p) {
  if (p.ambient() != 2) throw DomainError("svg rendering needs ambient dimension 2");
  if (p.vertices().empty()) throw DomainError("svg rendering of an empty polytope");

  Int minx = p.vertices()[0][0], maxx = minx;
  Int miny = p.vertices()[0][1], maxy = miny;
  for (const VecZ& v : p.vertices()) {
    minx = std::min(minx, v[0]);
    maxx = std::max(maxx, v[0]);
    miny = std::min(miny, v[1]);
    maxy = std::max(maxy, v[1]);
  }
  minx -= 1;
  miny -= 1;
  maxx += 1;
  maxy += 1;
  Int spanx = maxx - minx, spany = maxy - miny;
  Int span = std::max(spanx, spany);
  Rat s = Rat(Int(kCanvas - 2 * kMargin), span);
  Rat offx = Rat(kMargin) + (Rat(kCanvas - 2 * kMargin) - Rat(spanx) * s) / 2;
  Rat offy = Rat(kMargin) + (Rat(kCanvas - 2 * kMargin) - Rat(spany) * s) / 2;
  auto px = [&](const Rat& x) { return offx + (x - Rat(minx)) * s; };
  auto py = [&](const Rat& y) { return offy + (Rat(maxy) - y) * s; };

  std::string out = svg_header();
  if (span <= 24) {
    for (Int g = minx; g <= maxx; ++g)
      out += "<line x1=\"" + svg_num(px(Rat(g))) + "\" y1=\"" + svg_num(py(Rat(miny))) +
             "\" x2=\"" + svg_num(px(Rat(g))) + "\" y2=\"" + svg_num(py(Rat(maxy))) +
             "\" stroke=\"#e3e3e3\" stroke-width=\"1\"/>\n";
    for (Int g = miny; g <= maxy; ++g)
      out += "<line x1=\"" + svg_num(px(Rat(minx))) + "\" y1=\"" + svg_num(py(Rat(g))) +
             "\" x2=\"" + svg_num(px(Rat(maxx))) + "\" y2=\"" + svg_num(py(Rat(g))) +
             "\" stroke=\"#e3e3e3\" stroke-width=\"1\"/>\n";
  }

  auto pts = cyclic_order(p.vertices());
  if (pts.size() >= 3) {
    out += "<polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) out += " ";
      out += point_attr(px(pts[i][0]), py(pts[i][1]));
    }
    out += "\" fill=\"#cfe2f3\" stroke=\"#2a5d9f\" stroke-width=\"2\"/>\n";
  } else if (pts.size() == 2) {
    out += "<line x1=\"" + svg_num(px(pts[0][0])) + "\" y1=\"" + svg_num(py(pts[0][1])) +
           "\" x2=\"" + svg_num(px(pts[1][0])) + "\" y2=\"" + svg_num(py(pts[1][1])) +
           "\" stroke=\"#2a5d9f\" stroke-width=\"2\"/>\n";
  }
  for (const auto& v : pts)
    out += "<circle cx=\"" + svg_num(px(v[0])) + "\" cy=\"" + svg_num(py(v[1])) +
           "\" r=\"4\" fill=\"#2a5d9f\"/>\n";
  out += "</svg>\n";
  return out;
}

namespace {

std::string render_fan_svg(std::size_t n,
                           const std::vector<std::pair<Cone, std::optional<Rat>>>& cells) {
  if (n != 2) throw DomainError("svg rendering needs ambient dimension 2");
  const Rat cx(kCanvas / 2), cy(kCanvas / 2);
  const Rat reach(kCanvas / 2 - kMargin - 10);

  // Endpoint of a ray clipped to the drawing box (exact: no square roots).
  auto tip = [&](const VecZ& r) {
    Int ax = abs(r[0]), ay = abs(r[1]);
    Rat t = reach / Rat(std::max(ax, ay));
    return std::pair<Rat, Rat>(cx + t * Rat(r[0]), cy - t * Rat(r[1]));
  };

  std::string out = svg_header();
  out += "<line x1=\"" + svg_num(Rat(kMargin)) + "\" y1=\"" + svg_num(cy) + "\" x2=\"" +
         svg_num(Rat(kCanvas - kMargin)) + "\" y2=\"" + svg_num(cy) +
         "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
  out += "<line x1=\"" + svg_num(cx) + "\" y1=\"" + svg_num(Rat(kMargin)) + "\" x2=\"" +
         svg_num(cx) + "\" y2=\"" + svg_num(Rat(kCanvas - kMargin)) +
         "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";

  for (const auto& [c, w] : cells) {
    if (c.dim != 2) continue;
    auto a = tip(c.rays[0]), b = tip(c.rays[1]);
    out += "<polygon points=\"" + point_attr(cx, cy) + " " + point_attr(a.first, a.second) +
           " " + point_attr(b.first, b.second) + "\" fill=\"#cfe2f3\" fill-opacity=\"0.6\"/>\n";
  }

  std::vector<VecZ> rays;
  for (const auto& [c, w] : cells)
    for (const VecZ& r : c.rays)
      if (std::find(rays.begin(), rays.end(), r) == rays.end()) rays.push_back(r);
  std::sort(rays.begin(), rays.end(), [](const VecZ& a, const VecZ& b) { return lex_less(a, b); });
  for (const VecZ& r : rays) {
    auto e = tip(r);
    out += "<line x1=\"" + svg_num(cx) + "\" y1=\"" + svg_num(cy) + "\" x2=\"" +
           svg_num(e.first) + "\" y2=\"" + svg_num(e.second) +
           "\" stroke=\"#2a5d9f\" stroke-width=\"2\"/>\n";
  }

  for (const auto& [c, w] : cells) {
    if (!w) continue;
    Rat lx = cx, ly = cy;
    if (c.dim == 1) {
      auto e = tip(c.rays[0]);
      lx = cx + (e.first - cx) * Rat(5, 8) + 8;
      ly = cy + (e.second - cy) * Rat(5, 8) - 8;
    } else if (c.dim == 2) {
      auto a = tip(c.rays[0]), b = tip(c.rays[1]);
      lx = cx + ((a.first + b.first) / 2 - cx) * Rat(1, 2);
      ly = cy + ((a.second + b.second) / 2 - cy) * Rat(1, 2);
    } else {
      lx += 8;
      ly -= 8;
    }
    out += "<text x=\"" + svg_num(lx) + "\" y=\"" + svg_num(ly) +
           "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#1d3f6e\">" +
           to_string(*w) + "</text>\n";
  }

  out += "<circle cx=\"" + svg_num(cx) + "\" cy=\"" + svg_num(cy) +
         "\" r=\"3\" fill=\"#2a5d9f\"/>\n</svg>\n";
  return out;
}

}  // namespace

std::string render_svg(const Fan& f) {
  std::vector<std::pair<Cone, std::optional<Rat>>> cells;
  for (std::size_t idx : f.maximal) cells.emplace_back(f.cones[idx], std::nullopt);
  return render_fan_svg(f.ambient, cells);
}

std::string render_svg(const WeightedFan& w) {
  std::vector<std::pair<Cone, std::optional<Rat>>> cells;
  for (const Cone& c : w.weighted_cones()) cells.emplace_back(c, w.weight_of(c));
  return render_fan_svg(w.fan.ambient, cells);
}

}  // namespace tropkit
