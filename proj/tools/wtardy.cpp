// wtardy: solve, generate and benchmark 1||sum w_j U_j instances.
//
// Exit codes: 0 success, 1 invalid input, 2 internal inconsistency.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wtardy/bench.hpp"
#include "wtardy/generator.hpp"
#include "wtardy/instance_io.hpp"
#include "wtardy/oracle.hpp"
#include "wtardy/solvers.hpp"

namespace {

using namespace wtardy;

constexpr int kExitInvalid = 1;
constexpr int kExitInconsistent = 2;

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

AutoCalibration load_calibration(const std::string& path) {
  AutoCalibration cal;
  if (path.empty()) return cal;
  const auto doc = nlohmann::json::parse(read_file(path));
  cal.lawler_moore = doc.value("lawler-moore", cal.lawler_moore);
  cal.naive = doc.value("naive", cal.naive);
  cal.prediction = doc.value("prediction", cal.prediction);
  cal.concave_p = doc.value("concave-p", cal.concave_p);
  cal.inverse_w = doc.value("inverse-w", cal.inverse_w);
  return cal;
}

int run_solve(const std::string& input, const std::string& algo, bool reconstruct,
              bool verify, std::size_t cap, const std::string& calibration_path) {
  const Instance instance = load_instance(input);
  SolveOptions options;
  options.policy = *parse_policy(algo);
  options.reconstruct = reconstruct;
  options.calibration = load_calibration(calibration_path);
  const SolverPolicy used = options.policy == SolverPolicy::kAuto
                                ? choose_policy(instance.stats(), options.calibration)
                                : options.policy;
  const SolveResult result = solve(instance, options);

  nlohmann::json out{{"algo", policy_name(used)},
                     {"min_tardy_weight", result.min_tardy_weight},
                     {"max_early_weight", result.max_early_weight}};
  if (result.early_set) out["early_set"] = *result.early_set;

  if (verify) {
    Value expected = 0;
    std::string checker;
    if (instance.size() <= cap) {
      expected = brute_force(instance, cap).min_tardy_weight;
      checker = "brute-force";
    } else {
      const SolverPolicy second = used == SolverPolicy::kLawlerMoore
                                      ? SolverPolicy::kMaxPlusNaive
                                      : SolverPolicy::kLawlerMoore;
      expected = solve_maxplus(instance, second).min_tardy_weight;
      checker = std::string(policy_name(second));
    }
    out["verified_by"] = checker;
    out["verified"] = expected == result.min_tardy_weight;
    std::cout << out.dump() << '\n';
    if (expected != result.min_tardy_weight) {
      std::cerr << "verification failed: " << checker << " gives " << expected << '\n';
      return kExitInconsistent;
    }
    return 0;
  }
  std::cout << out.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for minimum weighted tardy jobs on one machine"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file (JSON or CSV)");
  std::string input;
  std::string algo = "auto";
  bool reconstruct = false;
  bool verify = false;
  std::size_t cap = kDefaultOracleCap;
  std::string calibration;
  solve_cmd->add_option("input", input, "Instance file, or - for stdin")->required();
  solve_cmd->add_option("--algo", algo, "Solver policy")
      ->check(CLI::IsMember(
          {"lawler-moore", "naive", "prediction", "concave-p", "inverse-w", "auto"}));
  solve_cmd->add_flag("--reconstruct", reconstruct, "Also output an optimal early set");
  solve_cmd->add_flag("--verify", verify,
                      "Cross-check with brute force (n <= cap) or a second policy");
  solve_cmd->add_option("--oracle-cap", cap, "Largest n checked by brute force");
  solve_cmd->add_option("--calibration", calibration,
                        "JSON file of per-policy cost multipliers for auto");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  GeneratorParams params;
  std::string distribution = "uniform";
  std::string output = "-";
  std::string format;
  gen_cmd->add_option("--seed", params.seed, "64-bit seed");
  gen_cmd->add_option("--n", params.n, "Number of jobs")->required();
  gen_cmd->add_option("--d-hash", params.d_hash, "Distinct due dates")->required();
  gen_cmd->add_option("--d-max", params.d_max, "Largest due date")->required();
  gen_cmd->add_option("--p-max", params.p_max, "Largest processing time")->required();
  gen_cmd->add_option("--w-max", params.w_max, "Largest weight")->required();
  gen_cmd->add_option("--distribution", distribution)
      ->check(CLI::IsMember({"uniform", "correlated", "anticorrelated"}));
  gen_cmd->add_option("-o,--output", output, "Output file, - for stdout");
  gen_cmd->add_option("--format", format, "json or csv (default: from extension)")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark grid, print CSV");
  std::string config_path;
  std::string bench_out = "-";
  bench_cmd->add_option("--config", config_path, "Bench config JSON")->required();
  bench_cmd->add_option("-o,--output", bench_out, "CSV output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*solve_cmd) {
      return run_solve(input, algo, reconstruct, verify, cap, calibration);
    }
    if (*gen_cmd) {
      params.distribution = *parse_distribution(distribution);
      const Instance instance = generate_instance(params);
      const InstanceFormat fmt =
          format.empty() ? format_for_path(output)
                         : (format == "csv" ? InstanceFormat::kCsv : InstanceFormat::kJson);
      const std::string text = serialize_instance(instance, fmt);
      if (output == "-") {
        std::cout << text;
      } else {
        std::ofstream(output) << text;
      }
      return 0;
    }
    if (*bench_cmd) {
      const auto rows = run_bench(parse_bench_config(read_file(config_path)));
      if (bench_out == "-") {
        write_bench_csv(std::cout, rows);
      } else {
        std::ofstream f(bench_out);
        write_bench_csv(f, rows);
      }
      return 0;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const PreconditionError& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitInconsistent;
  }
  return 0;
}
