#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tropkit/algebra.hpp"
#include "tropkit/cone.hpp"
#include "tropkit/errors.hpp"
#include "tropkit/fan.hpp"
#include "tropkit/io.hpp"
#include "tropkit/polytope.hpp"
#include "tropkit/tropical.hpp"

namespace py = pybind11;

namespace tropkit {
namespace {

// Integers and rationals cross the boundary as decimal strings, so Python
// ints and Fractions stay exact at any size. Floats are rejected rather
// than rounded.
Int int_from_py(py::handle h) {
  if (!py::isinstance<py::int_>(h)) throw ParseError("expected an integer");
  return Int(py::cast<std::string>(py::str(h)));
}

py::object int_to_py(const Int& x) {
  return py::module_::import("builtins").attr("int")(to_string(x));
}

py::object rat_to_py(const Rat& r) {
  return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

Rat rat_from_py(py::handle h) {
  if (py::isinstance<py::float_>(h))
    throw ParseError("floats are not exact; pass an int, Fraction or \"p/q\" string");
  return parse_rat(py::cast<std::string>(py::str(h)));
}

// Counts and volumes read better as ints when they are integers.
py::object scalar_to_py(const Rat& r) {
  if (is_integer(r)) return int_to_py(num(r));
  return rat_to_py(r);
}

VecZ vecz_from_py(py::handle h) {
  VecZ v;
  for (py::handle c : h) v.push_back(int_from_py(c));
  return v;
}

py::tuple vecz_to_py(const VecZ& v) {
  py::tuple t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) t[i] = int_to_py(v[i]);
  return t;
}

std::vector<VecZ> vecs_from_py(py::handle h) {
  std::vector<VecZ> out;
  for (py::handle r : h) out.push_back(vecz_from_py(r));
  return out;
}

py::tuple rays_to_py(const std::vector<VecZ>& rays) {
  py::tuple t(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) t[i] = vecz_to_py(rays[i]);
  return t;
}

std::vector<LatticePolytope> polytopes_from_py(py::iterable it) {
  std::vector<LatticePolytope> ps;
  for (py::handle h : it) ps.push_back(py::cast<LatticePolytope>(h));
  return ps;
}

std::vector<LaurentPolynomial> laurents_from_py(py::iterable it) {
  std::vector<LaurentPolynomial> fs;
  for (py::handle h : it) fs.push_back(parse_laurent(py::cast<std::string>(h)));
  return fs;
}

Json json_of(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

ShiftPolicy policy_of(std::uint64_t seed, unsigned verifications, unsigned max_retries) {
  return ShiftPolicy{seed, verifications, max_retries};
}

}  // namespace
}  // namespace tropkit

PYBIND11_MODULE(_core, m) {
  using namespace tropkit;

  m.doc() = "exact kernel for Newton polytopes, mixed volumes, balanced fans "
            "and tropical intersection counts";

  py::register_exception<DomainError>(m, "DomainError");
  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<ResourceError>(m, "ResourceError");

  py::class_<LatticePolytope>(m, "Polytope",
                              "Lattice polytope stored as the vertex hull of its points.")
      .def(py::init([](std::size_t ambient, py::iterable points) {
             return LatticePolytope::hull(ambient, vecs_from_py(points));
           }),
           py::arg("ambient"), py::arg("points"))
      .def_property_readonly("ambient", &LatticePolytope::ambient)
      .def_property_readonly("dim", &LatticePolytope::dim)
      .def_property_readonly("vertices",
                             [](const LatticePolytope& p) { return rays_to_py(p.vertices()); })
      .def("__eq__",
           [](const LatticePolytope& a, py::handle b) {
             return py::isinstance<LatticePolytope>(b) && a == py::cast<const LatticePolytope&>(b);
           })
      .def("__repr__", [](const LatticePolytope& p) {
        return "Polytope(ambient=" + std::to_string(p.ambient()) +
               ", dim=" + std::to_string(p.dim()) +
               ", vertices=" + std::to_string(p.vertices().size()) + ")";
      });

  py::class_<Fan>(m, "Fan", "Polyhedral fan; cones are tuples of primitive rays.")
      .def_property_readonly("ambient", [](const Fan& f) { return f.ambient; })
      .def_property_readonly("dim", &Fan::dim)
      .def_property_readonly("maximal_cones",
                             [](const Fan& f) {
                               py::tuple t(f.maximal.size());
                               for (std::size_t i = 0; i < f.maximal.size(); ++i)
                                 t[i] = rays_to_py(f.cones[f.maximal[i]].rays);
                               return t;
                             })
      .def("__repr__", [](const Fan& f) {
        return "Fan(ambient=" + std::to_string(f.ambient) + ", dim=" + std::to_string(f.dim()) +
               ", maximal_cones=" + std::to_string(f.maximal.size()) + ")";
      });

  py::class_<WeightedFan>(m, "WeightedFan",
                          "Weighted fan of pure dimension d; cones is a tuple of "
                          "(rays, weight) pairs.")
      .def_property_readonly("ambient", [](const WeightedFan& w) { return w.fan.ambient; })
      .def_property_readonly("dim", [](const WeightedFan& w) { return w.d; })
      .def_property_readonly("cones",
                             [](const WeightedFan& w) {
                               const auto cs = w.weighted_cones();
                               py::tuple t(cs.size());
                               for (std::size_t i = 0; i < cs.size(); ++i)
                                 t[i] = py::make_tuple(rays_to_py(cs[i].rays),
                                                       rat_to_py(w.weight_of(cs[i])));
                               return t;
                             })
      .def("__repr__", [](const WeightedFan& w) {
        return "WeightedFan(ambient=" + std::to_string(w.fan.ambient) +
               ", dim=" + std::to_string(w.d) +
               ", cones=" + std::to_string(w.weights.size()) + ")";
      });

  m.def("make_weighted_fan",
        [](std::size_t ambient, std::size_t dim, py::iterable cones) {
          std::vector<std::pair<Cone, Rat>> cw;
          for (py::handle h : cones) {
            auto pair = py::cast<py::sequence>(h);
            cw.emplace_back(cone_from_rays(ambient, vecs_from_py(pair[0])),
                            rat_from_py(pair[1]));
          }
          return make_weighted_fan(ambient, dim, cw);
        },
        py::arg("ambient"), py::arg("dim"), py::arg("cones"),
        "Build a weighted fan from (rays, weight) pairs of d-cones.");

  m.def("volume", [](const LatticePolytope& p) { return rat_to_py(volume(p)); },
        py::arg("polytope"), "Euclidean volume, exact.");
  m.def("volume_ehrhart",
        [](const LatticePolytope& p, py::handle budget) {
          return rat_to_py(volume_ehrhart_oracle(p, int_from_py(budget)));
        },
        py::arg("polytope"), py::arg("budget") = py::int_(10000000),
        "Volume recovered from lattice-point counts of dilates; independent "
        "of the triangulation route.");
  m.def("minkowski_sum",
        [](const LatticePolytope& a, const LatticePolytope& b) { return minkowski_sum(a, b); },
        py::arg("a"), py::arg("b"));
  m.def("scale",
        [](const LatticePolytope& p, py::handle c) { return scale(p, rat_from_py(c)); },
        py::arg("polytope"), py::arg("factor"),
        "Dilate by a nonnegative rational factor (the result must be a lattice polytope).");
  m.def("mixed_volume",
        [](py::iterable polytopes) { return rat_to_py(mixed_volume(polytopes_from_py(polytopes))); },
        py::arg("polytopes"), "Mixed volume of n polytopes in R^n.");
  m.def("pascal_residual",
        [](const LatticePolytope& p) {
          const VecQ r = pascal_residual(p);
          py::tuple t(r.size());
          for (std::size_t i = 0; i < r.size(); ++i) t[i] = rat_to_py(r[i]);
          return t;
        },
        py::arg("polytope"),
        "n*vol(P)*e_i minus the facet sum of integral-volume-weighted normals; "
        "all zero for every polytope.");
  m.def("normal_fan", [](const LatticePolytope& p) { return normal_fan(p); },
        py::arg("polytope"));
  m.def("is_complete", &is_complete, py::arg("fan"));

  m.def("parse_polynomial",
        [](const std::string& text) { return polynomial_to_json(parse_laurent(text)).dump(); },
        py::arg("text"),
        "Parse a Laurent polynomial and return its canonical JSON form.");
  m.def("newton_polytope",
        [](const std::string& f) { return newton_polytope(parse_laurent(f)); },
        py::arg("polynomial"));
  m.def("tropical_hypersurface",
        [](const std::string& f) { return tropical_hypersurface(parse_laurent(f)).weighted; },
        py::arg("polynomial"),
        "Codimension-one balanced fan dual to the Newton polytope.");
  m.def("bkk_count",
        [](py::iterable polynomials) { return scalar_to_py(bkk_count(laurents_from_py(polynomials))); },
        py::arg("polynomials"),
        "Generic root count of n polynomials in the torus, via mixed volume.");
  m.def("bkk_via_fans",
        [](py::iterable polynomials, std::uint64_t seed, unsigned verifications,
           unsigned max_retries) {
          return scalar_to_py(
              bkk_via_fans(laurents_from_py(polynomials), policy_of(seed, verifications, max_retries)));
        },
        py::arg("polynomials"), py::arg("seed") = 0, py::arg("verifications") = 1,
        py::arg("max_retries") = 32,
        "Same count through stable intersection of the tropical hypersurfaces.");

  m.def("is_balanced", &is_balanced, py::arg("fan"));
  m.def("weighted_sum", &weighted_sum, py::arg("a"), py::arg("b"),
        "Overlay of two weighted fans on their common refinement.");
  m.def("weighted_equivalent", &weighted_equivalent, py::arg("a"), py::arg("b"),
        "Equality after refinement and dropping weight-zero cones.");
  m.def("stable_intersection",
        [](const WeightedFan& a, const WeightedFan& b, std::uint64_t seed,
           unsigned verifications, unsigned max_retries) {
          return scalar_to_py(
              stable_intersection_number(a, b, policy_of(seed, verifications, max_retries)));
        },
        py::arg("a"), py::arg("b"), py::arg("seed") = 0, py::arg("verifications") = 1,
        py::arg("max_retries") = 32,
        "Stable intersection number of balanced fans of complementary dimension.");

  m.def("volume_polynomial",
        [](py::iterable basis) {
          const HomogeneousPolynomial p = volume_polynomial(PolytopeBasis{polytopes_from_py(basis)});
          py::dict d;
          for (const auto& [e, c] : p.coefficients) d[vecz_to_py(e)] = rat_to_py(c);
          return d;
        },
        py::arg("basis"),
        "vol(x1*P1 + ... + xm*Pm) as {exponent: coefficient}.");
  m.def("hilbert_function",
        [](py::iterable basis) {
          return hilbert_function(volume_polynomial(PolytopeBasis{polytopes_from_py(basis)})).values;
        },
        py::arg("basis"),
        "Catalecticant ranks h_0..h_n of the volume polynomial's apolarity algebra.");
  m.def("poincare_check",
        [](const std::vector<std::size_t>& values) {
          return poincare_check(HilbertFunction{values});
        },
        py::arg("hilbert"),
        "True when the sequence is symmetric with h_0 = h_n = 1.");

  m.def("polytope_to_json",
        [](const LatticePolytope& p) { return polytope_to_json(p).dump(); }, py::arg("polytope"));
  m.def("polytope_from_json",
        [](const std::string& text) { return polytope_from_json(json_of(text)); }, py::arg("text"));
  m.def("weighted_fan_to_json",
        [](const WeightedFan& w) { return weighted_fan_to_json(w).dump(); }, py::arg("fan"));
  m.def("weighted_fan_from_json",
        [](const std::string& text) { return weighted_fan_from_json(json_of(text)); },
        py::arg("text"));

  m.def("render_svg", py::overload_cast<const LatticePolytope&>(&render_svg), py::arg("polytope"));
  m.def("render_svg", py::overload_cast<const Fan&>(&render_svg), py::arg("fan"));
  m.def("render_svg", py::overload_cast<const WeightedFan&>(&render_svg), py::arg("fan"));
}
