// Benchmark harness: generated instances x policies x repetitions.
//
// Config (JSON); list-valued keys also accept a single scalar:
//   {"policies": ["naive", "lawler-moore"], "repetitions": 5,
//    "seeds": [1, 2], "n": [200], "d_hash": [4, 8, 16], "d_max": [2000],
//    "p_max": [100], "w_max": [10], "distribution": "uniform"}
// The grid is the cartesian product of seeds, n, d_hash, d_max, p_max, w_max.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "wtardy/generator.hpp"
#include "wtardy/solvers.hpp"

namespace wtardy {

struct BenchConfig {
  std::vector<SolverPolicy> policies;
  std::size_t repetitions = 1;
  std::vector<std::uint64_t> seeds{1};
  std::vector<std::size_t> n;
  std::vector<std::size_t> d_hash;
  std::vector<Value> d_max;
  std::vector<Value> p_max;
  std::vector<Value> w_max;
  Distribution distribution = Distribution::kUniform;
};

struct BenchRow {
  SolverPolicy policy;
  GeneratorParams params;
  Value answer = 0;  // minimum tardy weight
  std::int64_t nanos = 0;
};

/// Throws InvalidInput on malformed JSON, unknown policy or distribution
/// names, and values of the wrong type.
BenchConfig parse_bench_config(std::string_view json_text);

/// One row per (instance, policy, repetition). Every policy's answer on an
/// instance is compared before any of that instance's rows are kept; a
/// disagreement throws InconsistencyError and no rows are returned.
std::vector<BenchRow> run_bench(const BenchConfig& config);

inline constexpr std::string_view kBenchCsvHeader =
    "policy,seed,n,d_hash,d_max,p_max,w_max,answer,nanos";

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace wtardy
