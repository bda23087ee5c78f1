// uncert — compute, verify and saturate variance uncertainty relations for
// finite-dimensional observables. Subcommands: bounds, figure1, verify,
// saturate. Exit codes: 0 ok, 1 contract violation, 2 validation error,
// 3 degenerate input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "uncert/bounds.hpp"
#include "uncert/errors.hpp"
#include "uncert/experiments.hpp"
#include "uncert/perp.hpp"
#include "uncert/problem_file.hpp"
#include "uncert/report_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDegenerate = 3;

int exit_code_for(const uncert::Error& e) {
  return uncert::is_validation_error(e.code()) ? kExitValidation : kExitDegenerate;
}

void print_error(const uncert::Error& e) { std::cerr << "error: " << e.what() << "\n"; }

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) uncert::raise(uncert::ErrorCode::ParseError, "cannot write \"" + path.string() + "\"");
  out << content;
}

struct BoundsArgs {
  std::string problem;
  std::string a_name;
  std::string b_name;
  std::string state_name;
  std::string perp_name;
  std::string perp_strategy;
  std::string sign = "auto";
  std::string mixed_name;
  std::string format = "json";
  std::uint64_t seed = 42;
};

const uncert::HermitianOperator& named_operator(const uncert::ProblemFile& file,
                                                const std::string& name) {
  const auto it = file.operators.find(name);
  if (it == file.operators.end())
    uncert::raise(uncert::ErrorCode::ParseError, "no operator named \"" + name + "\"");
  return it->second;
}

const uncert::StateVector& named_state(const uncert::ProblemFile& file, const std::string& name) {
  const auto it = file.states.find(name);
  if (it == file.states.end())
    uncert::raise(uncert::ErrorCode::ParseError, "no state named \"" + name + "\"");
  return it->second;
}

std::optional<uncert::Sign> parse_sign(const std::string& text) {
  if (text == "auto") return std::nullopt;
  if (text == "plus") return uncert::Sign::plus;
  if (text == "minus") return uncert::Sign::minus;
  uncert::raise(uncert::ErrorCode::InvalidArgument, "--sign must be plus, minus or auto");
}

uncert::PerpStrategy parse_strategy(const std::string& text, std::uint64_t seed) {
  uncert::PerpStrategy strategy;
  strategy.seed = seed;
  if (text == "vaidman-a")
    strategy.kind = uncert::PerpStrategy::Kind::vaidman_a;
  else if (text == "vaidman-b")
    strategy.kind = uncert::PerpStrategy::Kind::vaidman_b;
  else if (text == "prescribed")
    strategy.kind = uncert::PerpStrategy::Kind::prescribed;
  else if (text == "optimal")
    strategy.kind = uncert::PerpStrategy::Kind::optimal_sum;
  else if (text == "optimal-product")
    strategy.kind = uncert::PerpStrategy::Kind::optimal_product;
  else if (text == "random")
    strategy.kind = uncert::PerpStrategy::Kind::random;
  else
    uncert::raise(uncert::ErrorCode::InvalidArgument,
                  "--perp-strategy must be one of vaidman-a, vaidman-b, prescribed, optimal, "
                  "optimal-product, random");
  return strategy;
}

int run_bounds(const BoundsArgs& args) {
  const uncert::ProblemFile file = uncert::ProblemFile::load(args.problem);
  const uncert::HermitianOperator& a = named_operator(file, args.a_name);
  const uncert::HermitianOperator& b = named_operator(file, args.b_name);
  const std::optional<uncert::Sign> sign = parse_sign(args.sign);

  if (!args.mixed_name.empty()) {
    const auto it = file.density_matrices.find(args.mixed_name);
    if (it == file.density_matrices.end())
      uncert::raise(uncert::ErrorCode::ParseError,
                    "no density matrix named \"" + args.mixed_name + "\"");
    const uncert::DensityMatrix& rho = it->second;

    std::optional<uncert::StateVector> perp;
    if (!args.perp_name.empty()) {
      perp = named_state(file, args.perp_name);
    } else if (args.perp_strategy == "random" || args.perp_strategy.empty()) {
      uncert::SeededRng rng(args.seed);
      perp = uncert::null_space_perp(rho, rng);
    } else {
      uncert::raise(uncert::ErrorCode::InvalidArgument,
                    "--mixed supports --perp <name> or --perp-strategy random only");
    }
    const uncert::Sign resolved = sign.value_or(uncert::select_sign_mixed(a, b, rho));
    const double value = uncert::mixed_sum_bound(a, b, rho, *perp, resolved);
    const double var_a = uncert::variance_mixed(a, rho);
    const double var_b = uncert::variance_mixed(b, rho);
    nlohmann::json j;
    j["mixed_sum_bound"] = value;
    j["mixed_var_a"] = var_a;
    j["mixed_var_b"] = var_b;
    j["sum_of_mixed_variances"] = var_a + var_b;
    j["residual"] = var_a + var_b - value;
    j["resolved_sign"] = std::string(1, uncert::sign_symbol(resolved));
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  if (args.state_name.empty())
    uncert::raise(uncert::ErrorCode::InvalidArgument, "either --state or --mixed is required");
  const uncert::StateVector& psi = named_state(file, args.state_name);
  std::optional<uncert::StateVector> perp;
  if (!args.perp_name.empty() && !args.perp_strategy.empty())
    uncert::raise(uncert::ErrorCode::InvalidArgument, "--perp and --perp-strategy are exclusive");
  if (!args.perp_name.empty()) perp = named_state(file, args.perp_name);
  if (!args.perp_strategy.empty())
    perp = uncert::make_perp(parse_strategy(args.perp_strategy, args.seed), a, b, psi, sign);

  const uncert::BoundReport report =
      uncert::evaluate_bounds(a, b, psi, perp ? &*perp : nullptr, sign);
  if (args.format == "json")
    std::cout << uncert::bound_report_to_json(report);
  else if (args.format == "csv")
    std::cout << uncert::bound_report_to_csv(report);
  else
    uncert::raise(uncert::ErrorCode::InvalidArgument, "--format must be json or csv");
  return kExitOk;
}

int run_figure1(std::size_t phi_steps, std::size_t perp_samples, std::uint64_t seed,
                const std::string& out_dir) {
  const uncert::Figure1Data data = uncert::run_figure1(phi_steps, perp_samples, seed);
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_file(dir / "curves.csv", uncert::curves_csv(data.rows));
  write_file(dir / "eq3_samples.csv", uncert::eq3_samples_csv(data.samples));
  write_file(dir / "plot.gp", uncert::plot_script());
  std::cout << "wrote " << (dir / "curves.csv").string() << " (" << data.rows.size()
            << " rows), " << (dir / "eq3_samples.csv").string() << " (" << data.samples.size()
            << " rows), " << (dir / "plot.gp").string() << "\n";
  return kExitOk;
}

int run_verify(const uncert::CampaignConfig& config, const std::string& out_path) {
  const uncert::CampaignReport report = uncert::run_verification(config);
  const std::string text = uncert::report_json(report);
  if (!out_path.empty()) write_file(out_path, text);
  const std::uint64_t violations = report.total_violations();
  std::cout << "verify: " << violations << " violation(s) across "
            << report.inequalities.size() << " checks";
  if (!out_path.empty()) std::cout << ", report in " << out_path;
  std::cout << "\n";
  return violations == 0 ? kExitOk : kExitViolation;
}

int run_saturate(const uncert::CampaignConfig& config) {
  const uncert::CampaignReport report = uncert::run_saturation(config);
  bool ok = true;
  for (const auto& [name, stats] : report.inequalities) {
    std::cout << name << ": max residual " << uncert::format_double(stats.max_violation)
              << " over " << stats.trials << " trials (" << stats.skipped << " skipped)\n";
    if (stats.passes != stats.trials) ok = false;
  }
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stronger variance uncertainty relations: bounds, sweeps, campaigns"};
  app.require_subcommand(1);

  BoundsArgs bounds_args;
  CLI::App* bounds = app.add_subcommand("bounds", "evaluate every bound on one problem instance");
  bounds->add_option("--problem", bounds_args.problem, "problem JSON file")->required();
  bounds->add_option("--a", bounds_args.a_name, "observable A name")->required();
  bounds->add_option("--b", bounds_args.b_name, "observable B name")->required();
  bounds->add_option("--state", bounds_args.state_name, "state name (pure-state bounds)");
  bounds->add_option("--perp", bounds_args.perp_name, "orthogonal state name");
  bounds->add_option("--perp-strategy", bounds_args.perp_strategy,
                     "vaidman-a|vaidman-b|prescribed|optimal|optimal-product|random");
  bounds->add_option("--sign", bounds_args.sign, "plus|minus|auto (default auto)");
  bounds->add_option("--mixed", bounds_args.mixed_name, "density matrix name (mixed-state bound)");
  bounds->add_option("--format", bounds_args.format, "json|csv (default json)");
  bounds->add_option("--seed", bounds_args.seed, "seed for random perp strategy")
      ->envname("UNCERT_SEED");

  std::size_t phi_steps = 200;
  std::size_t perp_samples = 20;
  std::uint64_t fig_seed = 42;
  std::string out_dir = ".";
  CLI::App* figure1 = app.add_subcommand("figure1", "spin-1 Jx/Jy sweep with random perps");
  figure1->add_option("--phi-steps", phi_steps, "number of phi grid points (default 200)");
  figure1->add_option("--perp-samples", perp_samples, "random perps per phi (default 20)");
  figure1->add_option("--seed", fig_seed, "seed (default 42)")->envname("UNCERT_SEED");
  figure1->add_option("--out-dir", out_dir, "output directory (default .)");

  uncert::CampaignConfig verify_config;
  std::string report_path = "report.json";
  CLI::App* verify = app.add_subcommand("verify", "randomized inequality verification campaign");
  verify->add_option("--dims", verify_config.dims, "dimensions (default 2,3,4,8)")
      ->delimiter(',');
  verify->add_option("--trials", verify_config.trials_per_dim, "trials per dim (default 1000)");
  verify->add_option("--seed", verify_config.seed, "seed (default 7)")->envname("UNCERT_SEED");
  verify->add_option("--tol", verify_config.tol, "violation tolerance (default 1e-9)");
  verify->add_option("--out", report_path, "report path (default report.json)");
  verify->add_option("--threads", verify_config.threads, "worker threads (default 1)");

  uncert::CampaignConfig saturate_config;
  CLI::App* saturate = app.add_subcommand("saturate", "saturation residuals at the optimal perps");
  saturate->add_option("--dims", saturate_config.dims, "dimensions (default 2,3,4,8)")
      ->delimiter(',');
  saturate->add_option("--trials", saturate_config.trials_per_dim,
                       "trials per dim (default 1000)");
  saturate->add_option("--seed", saturate_config.seed, "seed (default 7)")
      ->envname("UNCERT_SEED");
  saturate->add_option("--threads", saturate_config.threads, "worker threads (default 1)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bounds->parsed()) return run_bounds(bounds_args);
    if (figure1->parsed()) return run_figure1(phi_steps, perp_samples, fig_seed, out_dir);
    if (verify->parsed()) return run_verify(verify_config, report_path);
    if (saturate->parsed()) return run_saturate(saturate_config);
  } catch (const uncert::Error& e) {
    print_error(e);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
