#include "tropkit/cone.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropkit/errors.hpp"
#include "tropkit/lattice.hpp"

namespace tropkit {

namespace {

Cone assemble(std::size_t n, std::vector<VecZ> rays) {
  Cone c;
  c.ambient = n;
  std::sort(rays.begin(), rays.end(), [](const VecZ& a, const VecZ& b) { return lex_less(a, b); });
  c.rays = std::move(rays);
  HRep h = halfspaces_from_rays(n, c.rays);
  c.equations = std::move(h.equations);
  c.inequalities = std::move(h.inequalities);
  c.dim = n - c.equations.size();
  return c;
}

}  // namespace

bool Cone::contains(const VecQ& x) const {
  for (const auto& e : equations)
    if (dot(e, x) != 0) return false;
  for (const auto& b : inequalities)
    if (dot(b, x) < 0) return false;
  return true;
}

bool Cone::contains(const VecZ& x) const { return contains(to_rational(x)); }

bool Cone::in_relint(const VecQ& x) const {
  for (const auto& e : equations)
    if (dot(e, x) != 0) return false;
  for (const auto& b : inequalities)
    if (dot(b, x) <= 0) return false;
  return true;
}

bool Cone::in_relint(const VecZ& x) const { return in_relint(to_rational(x)); }

bool cone_less(const Cone& a, const Cone& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.rays.size() != b.rays.size()) return a.rays.size() < b.rays.size();
  for (std::size_t i = 0; i < a.rays.size(); ++i) {
    if (a.rays[i] != b.rays[i]) return lex_less(a.rays[i], b.rays[i]);
  }
  return false;
}

Cone cone_from_rays(std::size_t n, const std::vector<VecZ>& generators) {
  HRep h = halfspaces_from_rays(n, generators);
  DDResult dd = extreme_rays(n, h.equations, h.inequalities);
  if (dd.lineality.rank() > 0) throw DomainError("cone: generators span a line");
  return assemble(n, std::move(dd.rays));
}

Cone cone_from_halfspaces(std::size_t n, const std::vector<VecZ>& equations,
                          const std::vector<VecZ>& inequalities) {
  DDResult dd = extreme_rays(n, equations, inequalities);
  if (dd.lineality.rank() > 0) throw DomainError("cone: halfspaces admit a line");
  return assemble(n, std::move(dd.rays));
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient != b.ambient) throw DomainError("cone: ambient dimension mismatch");
  std::vector<VecZ> eqs = a.equations;
  eqs.insert(eqs.end(), b.equations.begin(), b.equations.end());
  std::vector<VecZ> ineqs = a.inequalities;
  ineqs.insert(ineqs.end(), b.inequalities.begin(), b.inequalities.end());
  DDResult dd = extreme_rays(a.ambient, eqs, ineqs);
  // Intersections of strictly convex cones cannot contain a line.
  if (dd.lineality.rank() > 0) throw DomainError("cone: unexpected lineality in intersection");
  return assemble(a.ambient, std::move(dd.rays));
}

std::vector<Cone> cone_facets(const Cone& c) {
  std::vector<Cone> out;
  if (c.dim == 0) return out;
  if (c.inequalities.empty()) {
    // A subspace-like strictly convex cone of positive dimension is a
    // single ray pair-free case: dim 1 with one ray has one facet {0}.
    // Handled below through the generic path; reaching here means dim > 0
    // with no facet inequality, which only the origin satisfies.
    return out;
  }
  std::set<std::vector<VecZ>> seen;
  for (const auto& b : c.inequalities) {
    std::vector<VecZ> sub;
    for (const auto& r : c.rays)
      if (dot(b, r) == 0) sub.push_back(r);
    Cone f = cone_from_rays(c.ambient, sub);
    if (f.dim + 1 != c.dim) continue;  // defensive; irredundant normals give facets
    if (seen.insert(f.rays).second) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), cone_less);
  return out;
}

std::vector<Cone> faces(const Cone& c) {
  std::map<std::vector<VecZ>, Cone> acc;
  std::vector<Cone> frontier{c};
  acc.emplace(c.rays, c);
  while (!frontier.empty()) {
    std::vector<Cone> next;
    for (const auto& f : frontier) {
      for (auto& g : cone_facets(f)) {
        if (acc.emplace(g.rays, g).second) next.push_back(std::move(g));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Cone> out;
  out.reserve(acc.size());
  for (auto& [key, cone] : acc) out.push_back(std::move(cone));
  std::sort(out.begin(), out.end(), cone_less);
  return out;
}

bool is_face_of(const Cone& f, const Cone& c) {
  if (f.ambient != c.ambient) return false;
  for (const auto& r : f.rays)
    if (!c.contains(r)) return false;
  // Tight inequalities of c on f span the face generated by f; f is a face
  // exactly when that generated face is f itself.
  std::vector<VecZ> tight;
  for (const auto& b : c.inequalities) {
    bool vanishes = true;
    for (const auto& r : f.rays)
      if (dot(b, r) != 0) {
        vanishes = false;
        break;
      }
    if (vanishes) tight.push_back(b);
  }
  std::vector<VecZ> generated;
  for (const auto& r : c.rays) {
    bool on = true;
    for (const auto& b : tight)
      if (dot(b, r) != 0) {
        on = false;
        break;
      }
    if (on) generated.push_back(r);
  }
  std::sort(generated.begin(), generated.end(),
            [](const VecZ& a, const VecZ& b) { return lex_less(a, b); });
  return generated == f.rays;
}

}  // namespace tropkit
