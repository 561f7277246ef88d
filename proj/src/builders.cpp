#include "wtardy/builders.hpp"

#include <algorithm>
#include <map>

#include "wtardy/maxplus.hpp"

namespace wtardy {

namespace {

void require_horizon(Value horizon) {
  if (horizon < 0) throw PreconditionError("horizon must be non-negative");
}

}  // namespace

SolutionVector build_solution_vector_dp(std::span<const Job> jobs, Value horizon) {
  require_horizon(horizon);
  auto out = SolutionVector::zeros(static_cast<std::size_t>(horizon));
  auto& f = out.entries;
  for (const Job& j : jobs) {
    if (j.p > horizon) continue;
    const auto p = static_cast<std::size_t>(j.p);
    for (std::size_t k = f.size() - 1; k >= p; --k) {
      f[k] = std::max(f[k], f[k - p] + j.w);
    }
  }
  return out;
}

std::vector<std::pair<Value, SolutionVector>> processing_time_step_vectors(
    std::span<const Job> jobs, Value horizon) {
  require_horizon(horizon);
  std::map<Value, std::vector<Job>> by_p;
  for (const Job& j : jobs) by_p[j.p].push_back(j);

  std::vector<std::pair<Value, SolutionVector>> out;
  for (auto& [p, group] : by_p) {
    std::sort(group.begin(), group.end(), [](const Job& a, const Job& b) {
      return a.w != b.w ? a.w > b.w : a.id < b.id;
    });
    auto v = SolutionVector::zeros(static_cast<std::size_t>(horizon));
    Value prefix = 0;
    std::size_t taken = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const auto want = static_cast<std::size_t>(static_cast<Value>(k) / p);
      while (taken < want && taken < group.size()) prefix += group[taken++].w;
      v[k] = prefix;
    }
    out.emplace_back(p, std::move(v));
  }
  return out;
}

SolutionVector build_solution_vector_concave(std::span<const Job> jobs,
                                             Value horizon) {
  require_horizon(horizon);
  auto acc = SolutionVector::zeros(static_cast<std::size_t>(horizon));
  for (const auto& [p, step_vector] : processing_time_step_vectors(jobs, horizon)) {
    if (p > horizon) continue;
    acc = convolve_sstep_concave(acc, step_vector, static_cast<std::size_t>(p));
  }
  return acc;
}

std::vector<std::pair<Value, InverseSolutionVector>> weight_step_inverse_vectors(
    std::span<const Job> jobs) {
  std::map<Value, std::vector<Job>> by_w;
  for (const Job& j : jobs) by_w[j.w].push_back(j);

  std::vector<std::pair<Value, InverseSolutionVector>> out;
  for (auto& [w, group] : by_w) {
    std::sort(group.begin(), group.end(), [](const Job& a, const Job& b) {
      return a.p != b.p ? a.p < b.p : a.id < b.id;
    });
    const auto len = static_cast<std::size_t>(w) * group.size() + 1;
    std::vector<Value> v(len, 0);
    Value prefix = 0;
    std::size_t taken = 0;
    for (std::size_t k = 1; k < len; ++k) {
      const auto want = (k + static_cast<std::size_t>(w) - 1) /
                        static_cast<std::size_t>(w);
      while (taken < want) prefix += group[taken++].p;
      v[k] = prefix;
    }
    out.emplace_back(w, InverseSolutionVector(std::move(v)));
  }
  return out;
}

InverseSolutionVector build_inverse_solution_vector(std::span<const Job> jobs) {
  InverseSolutionVector acc(std::vector<Value>{0});
  for (const auto& [w, step_vector] : weight_step_inverse_vectors(jobs)) {
    acc = minplus_convolve(
        acc, step_vector,
        SStepConcaveEngine{static_cast<std::size_t>(w), StepAlignment::kCeil});
  }
  return acc;
}

SolutionVector inverse_to_direct(const InverseSolutionVector& inv, Value horizon) {
  require_horizon(horizon);
  auto out = SolutionVector::zeros(static_cast<std::size_t>(horizon));
  // inv is non-decreasing, so the best weight only grows with the budget.
  std::size_t w = 0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    while (w + 1 < inv.size() && inv[w + 1] <= static_cast<Value>(k)) ++w;
    out[k] = static_cast<Value>(w);
  }
  return out;
}

}  // namespace wtardy
