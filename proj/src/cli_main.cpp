#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "tropkit/errors.hpp"
#include "tropkit/io.hpp"

namespace {

using namespace tropkit;

struct Config {
  std::uint64_t seed = 0;
  unsigned verify = 1;
  long long budget = 0;  // 0 = command default
  std::string format = "json";
  std::string out;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

LatticePolytope load_polytope(const std::string& path) {
  return polytope_from_json(parse_json_text(read_file(path)));
}

WeightedFan load_weighted_fan(const std::string& path) {
  return weighted_fan_from_json(parse_json_text(read_file(path)));
}

// Polynomials are grammar strings on the command line; "@file" reads the
// polynomial JSON schema instead.
LaurentPolynomial load_polynomial(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@')
    return polynomial_from_json(parse_json_text(read_file(arg.substr(1))));
  return parse_laurent(arg);
}

void write_output(const Config& cfg, const std::string& bytes) {
  if (cfg.out.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ResourceError("cannot write output file: " + cfg.out);
  f << bytes;
}

// Counts and residuals that are integral print as JSON numbers.
Json scalar_json(const Rat& r) {
  Int mag = abs(num(r));
  if (is_integer(r) && mag <= Int(std::numeric_limits<long long>::max()))
    return Json(num(r).convert_to<long long>());
  return rat_to_json(r);
}

std::string text_of_json(const Json& j) {
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out += it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
  return out;
}

void emit_json(const Config& cfg, const Json& j) {
  if (cfg.format == "svg") throw DomainError("no diagram for this result; use json or text");
  write_output(cfg, cfg.format == "text" ? text_of_json(j) : j.dump() + "\n");
}

void emit_polytope(const Config& cfg, const LatticePolytope& p) {
  if (cfg.format == "svg") {
    write_output(cfg, render_svg(p));
  } else if (cfg.format == "text") {
    std::string out = "dim: " + std::to_string(p.ambient()) + "\nvertices:\n";
    for (const VecZ& v : p.vertices()) out += "  " + to_string(v) + "\n";
    write_output(cfg, out);
  } else {
    write_output(cfg, polytope_to_json(p).dump() + "\n");
  }
}

std::string text_of_cone(const Cone& c) {
  if (c.rays.empty()) return "{0}";
  std::string out;
  for (std::size_t i = 0; i < c.rays.size(); ++i) {
    if (i) out += " ";
    out += to_string(c.rays[i]);
  }
  return out;
}

void emit_fan(const Config& cfg, const Fan& f) {
  if (cfg.format == "svg") {
    write_output(cfg, render_svg(f));
  } else if (cfg.format == "text") {
    std::string out = "dim: " + std::to_string(f.ambient) + "\ncones:\n";
    for (std::size_t idx : f.maximal) out += "  " + text_of_cone(f.cones[idx]) + "\n";
    write_output(cfg, out);
  } else {
    write_output(cfg, fan_to_json(f).dump() + "\n");
  }
}

void emit_weighted_fan(const Config& cfg, const WeightedFan& w) {
  if (cfg.format == "svg") {
    write_output(cfg, render_svg(w));
  } else if (cfg.format == "text") {
    std::string out = "dim: " + std::to_string(w.fan.ambient) + "\ncones:\n";
    for (const Cone& c : w.weighted_cones())
      out += "  " + text_of_cone(c) + " weight " + to_string(w.weight_of(c)) + "\n";
    write_output(cfg, out);
  } else {
    write_output(cfg, weighted_fan_to_json(w).dump() + "\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropkit: exact Newton polytopes, mixed volumes, balanced fans and "
               "tropical intersection counts"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--seed", cfg.seed, "Seed for generic shift sampling")->envname("TROPKIT_SEED");
  app.add_option("--verify-shifts", cfg.verify, "Independent shifts that must agree (k >= 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Enumeration / retry budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "svg"}));
  app.add_option("--out", cfg.out, "Write output to a file instead of stdout");

  std::string poly_arg, file_a, file_b;
  std::vector<std::string> many;
  bool use_oracle = false;

  auto* newton = app.add_subcommand("newton", "Newton polytope of a Laurent polynomial");
  newton->add_option("poly", poly_arg, "Polynomial (or @file.json)")->required();

  auto* minkowski_cmd = app.add_subcommand("minkowski", "Minkowski sum of two polytopes");
  minkowski_cmd->add_option("a", file_a, "Polytope JSON file")->required();
  minkowski_cmd->add_option("b", file_b, "Polytope JSON file")->required();

  auto* volume_cmd = app.add_subcommand("volume", "Euclidean volume of a polytope");
  volume_cmd->add_option("polytope", file_a, "Polytope JSON file")->required();
  volume_cmd->add_flag("--oracle", use_oracle,
                       "Use the Ehrhart lattice-point oracle instead of pyramid volume");

  auto* mixedvol = app.add_subcommand("mixedvol", "Mixed volume of n polytopes in R^n");
  mixedvol->add_option("polytopes", many, "Polytope JSON files")->required()->expected(-1);

  auto* normalfan = app.add_subcommand("normalfan", "Normal fan of a full-dimensional polytope");
  normalfan->add_option("polytope", file_a, "Polytope JSON file")->required();

  auto* pascal = app.add_subcommand("pascal-check", "Minkowski facet-normal relation check");
  pascal->add_option("--polytope", file_a, "Polytope JSON file")->required();

  auto* balance = app.add_subcommand("balance-check", "Balancing condition of a weighted fan");
  balance->add_option("fan", file_a, "Fan JSON file")->required();

  auto* tropical_cmd = app.add_subcommand("tropical", "Tropical hypersurface fan");
  tropical_cmd->add_option("poly", poly_arg, "Polynomial (or @file.json)")->required();

  auto* bkk = app.add_subcommand("bkk", "Generic torus solution count via mixed volume");
  bkk->add_option("polys", many, "n polynomials in n variables")->required()->expected(-1);

  auto* trop_intersect = app.add_subcommand(
      "trop-intersect", "The same count via stable tropical intersection (two variables)");
  trop_intersect->add_option("f", poly_arg, "First polynomial")->required();
  trop_intersect->add_option("g", file_a, "Second polynomial")->required();

  auto* equiv = app.add_subcommand("equiv", "Weighted-fan equivalence");
  equiv->add_option("a", file_a, "Fan JSON file")->required();
  equiv->add_option("b", file_b, "Fan JSON file")->required();

  auto* fan_sum = app.add_subcommand("fan-sum", "Sum of two weighted fans on a common refinement");
  fan_sum->add_option("a", file_a, "Fan JSON file")->required();
  fan_sum->add_option("b", file_b, "Fan JSON file")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a volume polynomial");
  hilbert->add_option("basis", file_a, "JSON file with a list of polytopes")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (newton->parsed()) {
      emit_polytope(cfg, newton_polytope(load_polynomial(poly_arg)));
    } else if (minkowski_cmd->parsed()) {
      emit_polytope(cfg, minkowski_sum(load_polytope(file_a), load_polytope(file_b)));
    } else if (volume_cmd->parsed()) {
      auto p = load_polytope(file_a);
      Rat v = use_oracle ? volume_ehrhart_oracle(p, Int(cfg.budget > 0 ? cfg.budget : 10000000))
                         : volume(p);
      emit_json(cfg, Json{{"volume", scalar_json(v)}});
    } else if (mixedvol->parsed()) {
      std::vector<LatticePolytope> ps;
      for (const auto& path : many) ps.push_back(load_polytope(path));
      emit_json(cfg, Json{{"mixed_volume", scalar_json(mixed_volume(ps))}});
    } else if (normalfan->parsed()) {
      emit_fan(cfg, normal_fan(load_polytope(file_a)));
    } else if (pascal->parsed()) {
      VecQ residual = pascal_residual(load_polytope(file_a));
      Json arr = Json::array();
      bool ok = true;
      for (const Rat& r : residual) {
        arr.push_back(scalar_json(r));
        ok = ok && r == 0;
      }
      emit_json(cfg, Json{{"residual", arr}, {"ok", ok}});
    } else if (balance->parsed()) {
      emit_json(cfg, Json{{"balanced", is_balanced(load_weighted_fan(file_a))}});
    } else if (tropical_cmd->parsed()) {
      emit_weighted_fan(cfg, tropical_hypersurface(load_polynomial(poly_arg)).weighted);
    } else if (bkk->parsed()) {
      std::vector<LaurentPolynomial> fs;
      for (const auto& arg : many) fs.push_back(load_polynomial(arg));
      emit_json(cfg, Json{{"count", scalar_json(bkk_count(fs))}});
    } else if (trop_intersect->parsed()) {
      ShiftPolicy policy{cfg.seed, cfg.verify,
                         cfg.budget > 0 ? static_cast<unsigned>(cfg.budget) : 32u};
      Rat c = bkk_via_fans({load_polynomial(poly_arg), load_polynomial(file_a)}, policy);
      emit_json(cfg, Json{{"count", scalar_json(c)}});
    } else if (equiv->parsed()) {
      emit_json(cfg, Json{{"equivalent", weighted_equivalent(load_weighted_fan(file_a),
                                                             load_weighted_fan(file_b))}});
    } else if (fan_sum->parsed()) {
      emit_weighted_fan(cfg, weighted_sum(load_weighted_fan(file_a), load_weighted_fan(file_b)));
    } else if (hilbert->parsed()) {
      Json basis = parse_json_text(read_file(file_a));
      if (!basis.is_array()) throw ParseError("basis file must be a JSON list of polytopes");
      PolytopeBasis b;
      for (const auto& pj : basis) b.polytopes.push_back(polytope_from_json(pj));
      emit_json(cfg, hilbert_report(volume_polynomial(b)));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what();
    if (e.position() != ParseError::npos) std::cerr << " (position " << e.position() << ")";
    std::cerr << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
