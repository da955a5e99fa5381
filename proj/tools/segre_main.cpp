// Command-line driver: runs the verification suites, decomposes
// user-supplied tensors, reports harmonic dimensions, and sweeps the
// numeric Nijenhuis checker. Exit codes: 0 all checks pass, 1 a check
// failed, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "segre/checks.hpp"
#include "segre/graded.hpp"
#include "segre/json_io.hpp"
#include "segre/kostant.hpp"
#include "segre/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int finish(segre::Report& report, bool as_json,
           std::chrono::steady_clock::time_point start) {
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (as_json)
    std::cout << report.to_json(/*deterministic=*/true) << "\n";
  else
    report.print(std::cout);
  return report.pass() ? kExitPass : kExitCheckFailure;
}

int run_verify(const std::string& scope, std::vector<int> ns, bool unsafe_n,
               bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  if (ns.empty()) ns = {2, 3};
  for (int n : ns)
    if (n < 2 || (n > 5 && !unsafe_n))
      throw CLI::ValidationError("--n must lie in {2,...,5} (see --unsafe-n)");

  segre::Report report;
  report.command = "verify " + scope;
  {
    nlohmann::json inputs;
    inputs["scope"] = scope;
    inputs["n"] = ns;
    report.inputs = inputs.dump();
  }

  auto append = [&](std::vector<segre::Check> part) {
    report.checks.insert(report.checks.end(), part.begin(), part.end());
  };
  if (scope == "algebra" || scope == "all") {
    append(segre::checks::algebra_suite());
    append(segre::checks::epsilon_suite(ns));
  }
  if (scope == "decomp" || scope == "all") append(segre::checks::decomp_suite(ns));
  if (scope == "parabolic" || scope == "all")
    append(segre::checks::parabolic_suite(ns));
  if (scope == "field" || scope == "all") append(segre::checks::field_suite());
  return finish(report, as_json, start);
}

segre::EpsilonStructure structure_from_flag(const std::string& name,
                                            const std::string& custom_m) {
  if (name == "j+") return segre::j_plus();
  if (name == "j-") return segre::j_minus();
  if (name == "j0") return segre::j_zero();
  if (name != "custom")
    throw std::invalid_argument("structure must be j+, j-, j0 or custom");
  if (custom_m.empty())
    throw std::invalid_argument("custom structure needs --m '[[..],[..]]'");
  const nlohmann::json j = nlohmann::json::parse(custom_m, nullptr, false);
  if (j.is_discarded() || !j.is_array() || j.size() != 2)
    throw std::invalid_argument("--m must be a 2x2 JSON array");
  segre::Matrix m(2, 2);
  for (std::size_t r = 0; r < 2; ++r) {
    if (!j[r].is_array() || j[r].size() != 2)
      throw std::invalid_argument("--m must be a 2x2 JSON array");
    for (std::size_t c = 0; c < 2; ++c) {
      const auto& v = j[r][c];
      if (v.is_number_integer())
        m.at(r, c) = segre::Rational(static_cast<long>(v.get<long long>()));
      else if (v.is_string())
        m.at(r, c) = segre::rat_parse(v.get<std::string>());
      else
        throw std::invalid_argument("--m entries must be integers or 'p/q'");
    }
  }
  return segre::EpsilonStructure::make(m);  // rejects nonzero trace
}

int run_decompose(const std::string& input_path, const std::string& structure,
                  const std::string& custom_m, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  const segre::BilinearMap phi = segre::bilinear_from_json(read_input(input_path));
  const segre::EpsilonStructure a = structure_from_flag(structure, custom_m);

  segre::Report report;
  report.command = "decompose";
  {
    nlohmann::json inputs;
    inputs["structure"] = structure;
    inputs["n"] = phi.n();
    inputs["arity"] = phi.vector_valued() ? "vector" : "scalar";
    inputs["epsilon"] = segre::to_string(a.epsilon());
    report.inputs = inputs.dump();
  }

  if (a.epsilon() == 0) {
    if (!phi.vector_valued())
      throw std::invalid_argument(
          "eps = 0 admits only the degenerate (0,2)-part of W-valued maps");
    const segre::BilinearMap p02 = segre::part02_nilpotent(phi, a);
    report.checks.push_back({"degenerate (0,2) part",
                             "phi02 = (-phi(AX,AY)+A phi(AX,Y)+A phi(X,AY))/4",
                             true, segre::to_json(p02)});
    report.checks.push_back(
        {"type (0,2) identities", "phi02(AX,Y) = phi02(X,AY) = -A phi02(X,Y)",
         segre::type_check(p02, a, segre::PQType::t02), ""});
  } else if (phi.vector_valued()) {
    const segre::PQParts parts = segre::pq_parts(phi, a);
    report.checks.push_back({"components sum to input", "phi = p20 + p11 + p02",
                             parts.p20 + parts.p11 + parts.p02 == phi, ""});
    report.checks.push_back({"p20", "type (2,0) member",
                             segre::type_check(parts.p20, a, segre::PQType::t20),
                             segre::to_json(parts.p20)});
    report.checks.push_back({"p11", "type (1,1) member",
                             segre::type_check(parts.p11, a, segre::PQType::t11),
                             segre::to_json(parts.p11)});
    report.checks.push_back({"p02", "type (0,2) member",
                             segre::type_check(parts.p02, a, segre::PQType::t02),
                             segre::to_json(parts.p02)});
  } else {
    const segre::BilinearMap p11 = segre::pi11_single(phi, a);
    const segre::BilinearMap rest = phi - p11;
    report.checks.push_back({"scalar (1,1) part",
                             "p11 = (|A|^2 phi + phi(A.,A.)) / (2|A|^2)",
                             segre::type_check(p11, a, segre::PQType::t11),
                             segre::to_json(p11)});
    report.checks.push_back(
        {"complement", "phi - p11", segre::pi11_single(rest, a).is_zero(),
         segre::to_json(rest)});
  }
  return finish(report, as_json, start);
}

int run_kostant(int n, const std::string& homogeneity, bool unsafe_n,
                bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 2 || (n > 5 && !unsafe_n))
    throw CLI::ValidationError("--n must lie in {2,...,5} (see --unsafe-n)");
  if (homogeneity != "all" && homogeneity != "1" && homogeneity != "2")
    throw CLI::ValidationError("--homogeneity must be 1, 2 or all");

  const segre::GradedAlgebra alg(static_cast<std::size_t>(n));
  const segre::HarmonicSummary s = segre::kostant_harmonics(alg);

  segre::Report report;
  report.command = "kostant";
  {
    nlohmann::json inputs;
    inputs["n"] = n;
    inputs["homogeneity"] = homogeneity;
    report.inputs = inputs.dump();
  }
  report.checks.push_back(
      {"complex sanity", "d o d = 0 and d* o d* = 0 as matrices",
       s.d_squared_zero && s.c_squared_zero, ""});
  if (homogeneity != "2") {
    report.dimensions.emplace_back("harmonic homogeneity 1",
                                   std::to_string(s.hom1_dim));
    if (n == 2)
      report.checks.push_back({"homogeneity 1 vanishes for n=2",
                               "torsion-free in the lowest dimension",
                               s.hom1_dim == 0, ""});
    else {
      report.checks.push_back(
          {"homogeneity 1 symmetry type",
           "inside the S^2 R^2 (x) L^2 R^n* component, trace-free",
           s.hom1_u_symmetric && s.hom1_traces_vanish, ""});
      report.checks.push_back(
          {"homogeneity 1 dimension",
           "matches the trace-kernel product oracle",
           s.hom1_dim == s.hom1_oracle_dim,
           "dim " + std::to_string(s.hom1_dim) + ", oracle " +
               std::to_string(s.hom1_oracle_dim)});
    }
  }
  if (homogeneity != "1") {
    report.dimensions.emplace_back("harmonic homogeneity 2",
                                   std::to_string(s.hom2_dim));
    if (n == 2) {
      report.dimensions.emplace_back("K1 component", std::to_string(s.k1_dim));
      report.dimensions.emplace_back("K2 component", std::to_string(s.k2_dim));
      report.checks.push_back({"homogeneity 2 splits for n=2",
                               "two symmetry-type components", s.k_split_clean,
                               ""});
    }
  }
  report.dimensions.emplace_back("harmonic homogeneity 3",
                                 std::to_string(s.hom3_dim));
  return finish(report, as_json, start);
}

int run_nijenhuis(const std::string& config_path, double h_override,
                  int grid_override, bool as_json) {
  const auto start = std::chrono::steady_clock::now();
  segre::FieldConfig cfg = segre::field_config_from_json(read_input(config_path));
  if (h_override > 0) cfg.h = h_override;
  if (grid_override > 0) cfg.grid.steps = grid_override;
  const segre::StructureField field =
      segre::StructureField::make(cfg.family, cfg.n, cfg.params);
  const segre::SweepSummary s = segre::sweep(field, cfg.grid, cfg.h);
  const segre::FamilyTolerances tol = segre::tolerances();

  segre::Report report;
  report.command = "nijenhuis";
  {
    nlohmann::json inputs;
    inputs["family"] = cfg.family;
    inputs["n"] = cfg.n;
    inputs["params"] = field.params();
    inputs["h"] = cfg.h;
    inputs["grid_steps"] = cfg.grid.steps;
    report.inputs = inputs.dump();
  }

  std::ostringstream detail;
  detail << "points " << s.points << ", N max " << s.max_abs << ", frobenius "
         << s.max_frobenius << ", oracle dev " << s.max_oracle_deviation;
  const double oracle_tol =
      std::max(tol.graph_oracle_factor * cfg.h * cfg.h, 1e-9);
  report.checks.push_back({"matches symbolic oracle",
                           "finite differences vs closed form",
                           s.max_oracle_deviation < oracle_tol, detail.str()});
  if (field.family() == "flat") {
    report.checks.push_back({"flat verdict", "N = 0 for constant fields",
                             s.max_abs < tol.nijenhuis_flat_max, ""});
  } else if (field.family() == "tangent-shear") {
    report.checks.push_back(
        {"strictness verdict",
         "kernel distribution involutive while N stays large",
         s.max_frobenius < tol.frobenius_zero_max &&
             s.max_abs > tol.shear_nijenhuis_min,
         ""});
  } else if (field.family() == "para-graph") {
    const bool integrable = field.params()[1] == 0.0;
    if (integrable)
      report.checks.push_back({"integrable verdict",
                               "N = 0 iff the eigendistributions are involutive",
                               s.max_abs < tol.graph_integrable_max &&
                                   s.max_frobenius < tol.graph_integrable_max,
                               ""});
    else
      report.checks.push_back({"non-integrable verdict",
                               "N = 0 iff the eigendistributions are involutive",
                               s.max_abs > tol.nonintegrable_min &&
                                   s.max_frobenius > tol.nonintegrable_min,
                               ""});
  }
  return finish(report, as_json, start);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification kernel for split-quaternionic linear algebra"};
  app.require_subcommand(1);

  std::string scope = "all";
  std::vector<int> ns;
  bool unsafe_n = false, as_json = false;

  CLI::App* verify = app.add_subcommand("verify", "run the named check suites");
  verify->add_option("scope", scope, "all|algebra|decomp|parabolic|field")
      ->check(CLI::IsMember({"all", "algebra", "decomp", "parabolic", "field"}));
  verify->add_option("--n", ns, "module sizes to verify (default 2 3)");
  verify->add_flag("--unsafe-n", unsafe_n, "allow n > 5");
  verify->add_flag("--json", as_json, "machine-readable report");

  std::string input_path, structure = "j+", custom_m;
  CLI::App* decompose =
      app.add_subcommand("decompose", "split a bilinear map into (p,q) parts");
  decompose->add_option("--input", input_path, "bilinear map JSON ('-' = stdin)")
      ->required();
  decompose->add_option("--structure", structure, "j+|j-|j0|custom");
  decompose->add_option("--m", custom_m, "custom trace-free 2x2 block (JSON)");
  decompose->add_flag("--json", as_json, "machine-readable report");

  int kostant_n = 3;
  std::string homogeneity = "all";
  CLI::App* kostant =
      app.add_subcommand("kostant", "harmonic space dimensions and splits");
  kostant->add_option("--n", kostant_n, "module size (2..5)");
  kostant->add_option("--homogeneity", homogeneity, "1|2|all");
  kostant->add_flag("--unsafe-n", unsafe_n, "allow n > 5");
  kostant->add_flag("--json", as_json, "machine-readable report");

  std::string config_path;
  double h_override = 0.0;
  int grid_override = 0;
  CLI::App* nijenhuis =
      app.add_subcommand("nijenhuis", "numeric integrability sweep");
  nijenhuis->set_help_flag("--help", "print help");  // frees -h for the step size
  nijenhuis->add_option("--config", config_path, "field config JSON ('-' = stdin)")
      ->required();
  nijenhuis->add_option("--h", h_override, "step size override");
  nijenhuis->add_option("--grid", grid_override, "points per axis override");
  nijenhuis->add_flag("--json", as_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(scope, ns, unsafe_n, as_json);
    if (decompose->parsed())
      return run_decompose(input_path, structure, custom_m, as_json);
    if (kostant->parsed())
      return run_kostant(kostant_n, homogeneity, unsafe_n, as_json);
    if (nijenhuis->parsed())
      return run_nijenhuis(config_path, h_override, grid_override, as_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
