#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "segre/bilinear.hpp"
#include "segre/epsilon.hpp"
#include "segre/json_io.hpp"

#ifndef SEGRE_CLI_PATH
#define SEGRE_CLI_PATH "segre"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string out_path =
      std::string("/tmp/segre_cli_out_") + std::to_string(::getpid()) + ".txt";
  const std::string cmd = env_prefix + std::string(SEGRE_CLI_PATH) + " " + args +
                          " > " + out_path + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(raw);
  std::ifstream in(out_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  std::remove(out_path.c_str());
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("verify subcommand") {
  const RunResult ok = run_cli("verify algebra --n 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("[pass]") != std::string::npos);

  // The parabolic scope runs the bracket-identity and harmonic checks.
  const RunResult parabolic = run_cli("verify parabolic --n 2");
  CHECK(parabolic.exit_code == 0);
  CHECK(parabolic.output.find("bracket identity") != std::string::npos);
  CHECK(parabolic.output.find("harmonic space") != std::string::npos);

  CHECK(run_cli("verify nonsense").exit_code == 2);
  CHECK(run_cli("verify algebra --n 7").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("decompose subcommand") {
  using namespace segre;
  // A scalar type-(1,1) map decomposes as (0, g, 0): the (1,1) part is the
  // input itself and the complement is the zero map.
  Matrix omega(2, 2);
  omega.at(0, 1) = 1;
  omega.at(1, 0) = -1;
  const SymBilinear g = compatible_metric(omega, omega);
  const BilinearMap gb = BilinearMap::from_gram(2, g.gram);
  const std::string path = write_temp("segre_metric.json", to_json(gb));

  const RunResult ok =
      run_cli("decompose --input " + path + " --structure j- --json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("\"pass\": true") != std::string::npos);
  // The emitted (1,1) component is the input map verbatim.
  std::string p11_json = to_json(gb);
  for (std::size_t pos = 0; (pos = p11_json.find('"', pos)) != std::string::npos;
       pos += 2)
    p11_json.insert(pos, "\\");  // details strings are JSON-escaped
  CHECK(ok.output.find(p11_json) != std::string::npos);
  const BilinearMap zero = BilinearMap::scalar(2);
  std::string zero_json = to_json(zero);
  for (std::size_t pos = 0; (pos = zero_json.find('"', pos)) != std::string::npos;
       pos += 2)
    zero_json.insert(pos, "\\");
  CHECK(ok.output.find(zero_json) != std::string::npos);

  // Scalar maps have no degenerate (0,2) decomposition.
  CHECK(run_cli("decompose --input " + path + " --structure j0").exit_code == 2);

  // Degenerate structure on a W-valued map: only the (0,2) part is emitted.
  BilinearMap phi = BilinearMap::vector(2);
  phi.vector_at(0, 1, 2) = 1;
  const std::string vec_path = write_temp("segre_vec.json", to_json(phi));
  const RunResult nil =
      run_cli("decompose --input " + vec_path + " --structure j0 --json");
  CHECK(nil.exit_code == 0);
  CHECK(nil.output.find("degenerate (0,2) part") != std::string::npos);

  // Custom structures must be trace-free.
  const RunResult bad_m = run_cli("decompose --input " + vec_path +
                                  " --structure custom --m [[1,0],[0,1]]");
  CHECK(bad_m.exit_code == 2);

  const std::string malformed =
      write_temp("segre_broken.json", R"({"n":2,"arity":"vector","values":[1]})");
  const RunResult bad = run_cli("decompose --input " + malformed);
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("error") != std::string::npos);
}

TEST_CASE("kostant subcommand") {
  const RunResult r2 = run_cli("kostant --n 2 --json");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output.find("\"harmonic homogeneity 1\": \"0\"") != std::string::npos);
  CHECK(r2.output.find("\"K1 component\": \"5\"") != std::string::npos);
  CHECK(r2.output.find("\"K2 component\": \"5\"") != std::string::npos);

  CHECK(run_cli("kostant --n 9").exit_code == 2);
  CHECK(run_cli("kostant --n 2 --homogeneity 4").exit_code == 2);
}

TEST_CASE("nijenhuis subcommand") {
  const std::string flat = write_temp(
      "segre_flat.json",
      R"({"family":"flat","n":2,"params":[1,0,0],
          "grid":{"min":[-1,-1,-1,-1],"max":[1,1,1,1],"steps":3},"h":1e-3})");
  const RunResult okf = run_cli("nijenhuis --config " + flat);
  CHECK(okf.exit_code == 0);

  const std::string shear = write_temp(
      "segre_shear.json",
      R"({"family":"tangent-shear","n":2,
          "grid":{"min":[-1,-1,-1,-1],"max":[1,1,1,1],"steps":3},"h":1e-3})");
  const RunResult oks = run_cli("nijenhuis --config " + shear + " --json");
  CHECK(oks.exit_code == 0);
  CHECK(oks.output.find("strictness verdict") != std::string::npos);

  const std::string unknown = write_temp(
      "segre_unknown.json", R"({"family":"wobbly","n":2})");
  CHECK(run_cli("nijenhuis --config " + unknown).exit_code == 2);
}

TEST_CASE("json reports are deterministic") {
  const RunResult a = run_cli("kostant --n 2 --json");
  const RunResult b = run_cli("kostant --n 2 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("worker cap and sweep overrides") {
  const RunResult capped = run_cli("verify algebra --n 2",
                                   "SEGRE_KIT_WORKERS=1 ");
  CHECK(capped.exit_code == 0);

  const std::string flat = write_temp(
      "segre_flat_override.json", R"({"family":"flat","n":2,"params":[1,0,0]})");
  const RunResult swept =
      run_cli("nijenhuis --config " + flat + " --grid 2 --h 1e-4 --json");
  CHECK(swept.exit_code == 0);
  CHECK(swept.output.find("\"grid_steps\": 2") != std::string::npos);
  CHECK(swept.output.find("\"h\": 0.0001") != std::string::npos);
}
