#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "uncert/errors.hpp"
#include "uncert/problem_file.hpp"
#include "uncert/report_io.hpp"
#include "uncert/spin.hpp"

using namespace uncert;

namespace {

const std::string kDataDir = UNCERT_DATA_DIR;
const std::string kCli = UNCERT_CLI_PATH;

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/uncert_cli_out.txt";
  const std::string cmd = kCli + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return CliResult{WEXITSTATUS(status), buf.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("problem_file") {

TEST_CASE("bundled spin1 problem loads and validates") {
  const ProblemFile file = ProblemFile::load(kDataDir + "/spin1.json");
  CHECK(file.dim == 3);
  CHECK(file.operators.size() == 4);
  CHECK(file.states.size() == 4);
  CHECK(file.density_matrices.size() == 1);
  // the stored jx matches the ladder construction
  const SpinTriple s = spin_operators(1.0);
  CMat diff = file.operators.at("jx").matrix();
  diff -= s.jx.matrix();
  CHECK(diff.max_abs() < 1e-15);
}

TEST_CASE("strict parsing") {
  SUBCASE("unknown top-level key") {
    CHECK_THROWS_WITH_AS(ProblemFile::parse(R"({"dim": 2, "oops": 1})"),
                         doctest::Contains("oops"), Error);
  }
  SUBCASE("bad complex entry names the path") {
    const std::string text =
        R"({"dim": 2, "states": {"bad": [[1.0, 0.0], [0.0]]}})";
    CHECK_THROWS_WITH_AS(ProblemFile::parse(text), doctest::Contains("states.bad[1]"), Error);
  }
  SUBCASE("non-hermitian operator is rejected with its name") {
    const std::string text =
        R"({"dim": 2, "operators": {"m": [[[0,0],[1,0]],[[0.5,0],[0,0]]]}})";
    CHECK_THROWS_WITH_AS(ProblemFile::parse(text), doctest::Contains("operators.m"), Error);
  }
  SUBCASE("unnormalized state is rejected") {
    const std::string text = R"({"dim": 2, "states": {"s": [[0.5,0],[0.5,0]]}})";
    CHECK_THROWS_WITH_AS(ProblemFile::parse(text), doctest::Contains("NotNormalized"), Error);
  }
  SUBCASE("missing dim") {
    CHECK_THROWS_WITH_AS(ProblemFile::parse(R"({"states": {}})"), doctest::Contains("dim"),
                         Error);
  }
  SUBCASE("wrong row count names the operator") {
    const std::string text = R"({"dim": 3, "operators": {"m": [[[0,0]]]}})";
    CHECK_THROWS_WITH_AS(ProblemFile::parse(text), doctest::Contains("operators.m"), Error);
  }
}

TEST_CASE("bound report json round-trip compares equal field by field") {
  const SpinTriple s = spin_operators(1.0);
  const StateVector psi = figure1_state(0.37);
  const Sign sign = select_sign(s.jx, s.jy, psi);
  const StateVector perp = optimal_perp_sum(s.jx, s.jy, psi, sign);
  const BoundReport report = evaluate_bounds(s.jx, s.jy, psi, &perp, sign);
  const BoundReport reparsed = bound_report_from_json(bound_report_to_json(report));
  CHECK(report == reparsed);

  // optional fields stay absent without a perp
  const BoundReport no_perp = evaluate_bounds(s.jx, s.jy, psi);
  CHECK(!no_perp.eq3.has_value());
  CHECK(!no_perp.amended_hr.has_value());
  CHECK(no_perp == bound_report_from_json(bound_report_to_json(no_perp)));
}

}  // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("bounds with the optimal strategy saturates the sum") {
  const CliResult r = run_cli("bounds --problem " + kDataDir +
                              "/spin1.json --a jx --b jy --state phi0 --perp-strategy optimal");
  CHECK(r.exit_code == 0);
  const BoundReport report = bound_report_from_json(r.output);
  REQUIRE(report.eq3.has_value());
  CHECK(*report.eq3 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(report.sum_of_variances == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.resolved_sign == "-");  // auto sign at phi=0
}

TEST_CASE("joint eigenstate exits 3 with the reason") {
  const CliResult r = run_cli("bounds --problem " + kDataDir +
                              "/spin1.json --a jz --b jz2 --state phi0 --perp-strategy optimal");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("JointEigenstate") != std::string::npos);
}

TEST_CASE("malformed problem exits 2 with the offending path") {
  const std::string bad_path = "/tmp/uncert_bad_problem.json";
  std::ofstream(bad_path) << R"({"dim": 2, "states": {"s": [[0.5,0],[0.5,0]]}})";
  const CliResult r =
      run_cli("bounds --problem " + bad_path + " --a jx --b jy --state s");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("states.s") != std::string::npos);
}

TEST_CASE("csv format emits one header and one data row") {
  const CliResult r =
      run_cli("bounds --problem " + kDataDir +
              "/spin1.json --a jx --b jy --state phi_pi_8 --perp zero --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("sum_of_variances,", 0) == 0);
  CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 2);
}

TEST_CASE("mixed bound runs against the bundled density matrix") {
  const CliResult r = run_cli("bounds --problem " + kDataDir +
                              "/spin1.json --a jx --b jy --mixed rho_mix --perp zero");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("mixed_sum_bound") != std::string::npos);
  CHECK(r.output.find("\"residual\"") != std::string::npos);
}

TEST_CASE("figure1 writes deterministic files with the requested grid") {
  const CliResult r1 =
      run_cli("figure1 --phi-steps 20 --perp-samples 3 --seed 5 --out-dir /tmp/uncert_fig_a");
  CHECK(r1.exit_code == 0);
  const CliResult r2 =
      run_cli("figure1 --phi-steps 20 --perp-samples 3 --seed 5 --out-dir /tmp/uncert_fig_b");
  CHECK(r2.exit_code == 0);
  const std::string curves = slurp("/tmp/uncert_fig_a/curves.csv");
  const std::string samples = slurp("/tmp/uncert_fig_a/eq3_samples.csv");
  CHECK(curves == slurp("/tmp/uncert_fig_b/curves.csv"));
  CHECK(samples == slurp("/tmp/uncert_fig_b/eq3_samples.csv"));
  CHECK(std::count(curves.begin(), curves.end(), '\n') == 21);
  CHECK(std::count(samples.begin(), samples.end(), '\n') == 61);
  CHECK(slurp("/tmp/uncert_fig_a/plot.gp").find("curves.csv") != std::string::npos);
}

TEST_CASE("figure1 default flags produce the 200-row, 4000-sample dataset") {
  const CliResult r = run_cli("figure1 --out-dir /tmp/uncert_fig_default");
  CHECK(r.exit_code == 0);
  const std::string curves = slurp("/tmp/uncert_fig_default/curves.csv");
  const std::string samples = slurp("/tmp/uncert_fig_default/eq3_samples.csv");
  CHECK(std::count(curves.begin(), curves.end(), '\n') == 201);    // header + 200 rows
  CHECK(std::count(samples.begin(), samples.end(), '\n') == 4001); // header + 200·20 rows
}

TEST_CASE("verify exits 0 at the default tolerance and 1 at 1e-30") {
  const CliResult ok = run_cli("verify --trials 25 --out /tmp/uncert_verify.json");
  CHECK(ok.exit_code == 0);
  CHECK(slurp("/tmp/uncert_verify.json").find("\"total_violations\": 0") != std::string::npos);

  const CliResult bad =
      run_cli("verify --trials 25 --tol 1e-30 --out /tmp/uncert_verify_bad.json");
  CHECK(bad.exit_code == 1);
}

TEST_CASE("verify with zero trials exits 0 with an empty report") {
  const CliResult r = run_cli("verify --trials 0 --out /tmp/uncert_verify_empty.json");
  CHECK(r.exit_code == 0);
}

TEST_CASE("saturate reports sub-1e-9 residuals and exits 0") {
  const CliResult r = run_cli("saturate --trials 50 --dims 2,3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("eq3_saturation") != std::string::npos);
  CHECK(r.output.find("eq6_saturation") != std::string::npos);
}

TEST_CASE("UNCERT_SEED env var is the default seed, flag wins") {
  const std::string base = "figure1 --phi-steps 4 --perp-samples 1";
  auto shell = [](const std::string& cmd) { return WEXITSTATUS(std::system(cmd.c_str())); };
  REQUIRE(shell("UNCERT_SEED=9 " + kCli + " " + base +
                " --out-dir /tmp/uncert_env_a > /dev/null 2>&1") == 0);
  REQUIRE(shell(kCli + " " + base + " --seed 9 --out-dir /tmp/uncert_env_b > /dev/null 2>&1") ==
          0);
  CHECK(slurp("/tmp/uncert_env_a/eq3_samples.csv") == slurp("/tmp/uncert_env_b/eq3_samples.csv"));
  // flag wins over the env var
  REQUIRE(shell("UNCERT_SEED=9 " + kCli + " " + base +
                " --seed 123 --out-dir /tmp/uncert_env_c > /dev/null 2>&1") == 0);
  CHECK(slurp("/tmp/uncert_env_c/eq3_samples.csv") != slurp("/tmp/uncert_env_a/eq3_samples.csv"));
}

}  // TEST_SUITE
