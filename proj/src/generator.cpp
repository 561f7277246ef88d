#include "wtardy/generator.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace wtardy {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  Value operator()(Value lo, Value hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Value>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

std::string_view distribution_name(Distribution d) {
  switch (d) {
    case Distribution::kUniform: return "uniform";
    case Distribution::kCorrelated: return "correlated";
    case Distribution::kAntiCorrelated: return "anticorrelated";
  }
  return "uniform";
}

std::optional<Distribution> parse_distribution(std::string_view name) {
  for (auto d : {Distribution::kUniform, Distribution::kCorrelated,
                 Distribution::kAntiCorrelated}) {
    if (distribution_name(d) == name) return d;
  }
  return std::nullopt;
}

Instance generate_instance(const GeneratorParams& params) {
  const auto& g = params;
  if (g.n < 1 || g.d_max < 1 || g.p_max < 1 || g.w_max < 1) {
    throw InvalidInput("n, d_max, p_max and w_max must be positive");
  }
  if (g.d_hash < 1 || static_cast<Value>(g.d_hash) > g.d_max || g.d_hash > g.n) {
    throw InvalidInput("d_hash must lie in [1, min(n, d_max)], got " +
                       std::to_string(g.d_hash));
  }
  Draw draw(g.seed);

  std::set<Value> dates{g.d_max};
  while (dates.size() < g.d_hash) dates.insert(draw(1, g.d_max - 1));
  const std::vector<Value> sorted(dates.begin(), dates.end());

  const Value p_span = std::max<Value>(1, g.p_max - 1);
  std::vector<Job> jobs(g.n);
  for (std::size_t j = 0; j < g.n; ++j) {
    Job& job = jobs[j];
    job.d = j < g.d_hash
                ? sorted[j]
                : sorted[static_cast<std::size_t>(
                      draw(0, static_cast<Value>(g.d_hash) - 1))];
    job.p = draw(1, g.p_max);
    switch (g.distribution) {
      case Distribution::kUniform:
        job.w = draw(1, g.w_max);
        break;
      case Distribution::kCorrelated: {
        const Value base = 1 + (job.p - 1) * (g.w_max - 1) / p_span;
        job.w = std::clamp<Value>(base + draw(0, 2) - 1, 1, g.w_max);
        break;
      }
      case Distribution::kAntiCorrelated: {
        const Value base = g.w_max - (job.p - 1) * (g.w_max - 1) / p_span;
        job.w = std::clamp<Value>(base + draw(0, 2) - 1, 1, g.w_max);
        break;
      }
    }
  }
  for (std::size_t i = g.n - 1; i >= 1; --i) {
    std::swap(jobs[i], jobs[static_cast<std::size_t>(draw(0, static_cast<Value>(i)))]);
  }
  for (std::size_t j = 0; j < g.n; ++j) jobs[j].id = static_cast<JobId>(j);
  return Instance(std::move(jobs));
}

}  // namespace wtardy
