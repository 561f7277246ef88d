#include "wtardy/bench.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace wtardy {

namespace {

using nlohmann::json;

template <class T>
std::vector<T> list_of(const json& doc, const char* key, std::vector<T> fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  try {
    if (v.is_array()) return v.get<std::vector<T>>();
    return {v.get<T>()};
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bench config key '") + key + "': " + e.what());
  }
}

}  // namespace

BenchConfig parse_bench_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed bench config: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("bench config must be an object");

  BenchConfig cfg;
  for (const auto& name : list_of<std::string>(doc, "policies", {})) {
    const auto p = parse_policy(name);
    if (!p) throw InvalidInput("unknown policy '" + name + "'");
    cfg.policies.push_back(*p);
  }
  const auto reps = list_of<std::size_t>(doc, "repetitions", {1});
  if (reps.size() != 1 || reps[0] < 1) {
    throw InvalidInput("repetitions must be a positive integer");
  }
  cfg.repetitions = reps[0];
  cfg.seeds = list_of<std::uint64_t>(doc, "seeds", {1});
  cfg.n = list_of<std::size_t>(doc, "n", {});
  cfg.d_hash = list_of<std::size_t>(doc, "d_hash", {});
  cfg.d_max = list_of<Value>(doc, "d_max", {});
  cfg.p_max = list_of<Value>(doc, "p_max", {});
  cfg.w_max = list_of<Value>(doc, "w_max", {});
  if (doc.contains("distribution")) {
    const auto name = doc.at("distribution").get<std::string>();
    const auto d = parse_distribution(name);
    if (!d) throw InvalidInput("unknown distribution '" + name + "'");
    cfg.distribution = *d;
  }
  return cfg;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (auto seed : config.seeds)
    for (auto n : config.n)
      for (auto d_hash : config.d_hash)
        for (auto d_max : config.d_max)
          for (auto p_max : config.p_max)
            for (auto w_max : config.w_max) {
              const GeneratorParams params{seed,  n,     d_hash, d_max,
                                           p_max, w_max, config.distribution};
              const Instance instance = generate_instance(params);
              std::vector<BenchRow> pending;
              for (SolverPolicy policy : config.policies) {
                for (std::size_t r = 0; r < config.repetitions; ++r) {
                  const auto start = std::chrono::steady_clock::now();
                  const SolveResult res = solve_maxplus(instance, policy);
                  const auto stop = std::chrono::steady_clock::now();
                  pending.push_back(BenchRow{
                      policy, params, res.min_tardy_weight,
                      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                          .count()});
                }
              }
              for (const BenchRow& row : pending) {
                if (row.answer != pending.front().answer) {
                  std::ostringstream msg;
                  msg << "policy disagreement on seed " << seed << " n=" << n
                      << " d_hash=" << d_hash << " d_max=" << d_max
                      << ": " << policy_name(pending.front().policy) << " -> "
                      << pending.front().answer << ", " << policy_name(row.policy)
                      << " -> " << row.answer;
                  throw InconsistencyError(msg.str());
                }
              }
              rows.insert(rows.end(), pending.begin(), pending.end());
            }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRow& r : rows) {
    out << policy_name(r.policy) << ',' << r.params.seed << ',' << r.params.n << ','
        << r.params.d_hash << ',' << r.params.d_max << ',' << r.params.p_max << ','
        << r.params.w_max << ',' << r.answer << ',' << r.nanos << '\n';
  }
}

}  // namespace wtardy
