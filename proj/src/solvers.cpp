#include "wtardy/solvers.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "wtardy/builders.hpp"
#include "wtardy/fractional.hpp"
#include "wtardy/maxplus.hpp"
#include "wtardy/oracle.hpp"
#include "wtardy/prediction.hpp"

namespace wtardy {

namespace {

constexpr std::array<std::pair<SolverPolicy, std::string_view>, 6> kNames{{
    {SolverPolicy::kLawlerMoore, "lawler-moore"},
    {SolverPolicy::kMaxPlusNaive, "naive"},
    {SolverPolicy::kPrediction, "prediction"},
    {SolverPolicy::kConcaveByP, "concave-p"},
    {SolverPolicy::kInverseByW, "inverse-w"},
    {SolverPolicy::kAuto, "auto"},
}};

std::vector<Job> edd_sorted(const Instance& instance) {
  std::vector<Job> jobs = instance.jobs();
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    return a.d != b.d ? a.d < b.d : a.id < b.id;
  });
  return jobs;
}

SolveResult make_result(const Instance& instance, Value early) {
  SolveResult r;
  r.max_early_weight = early;
  r.min_tardy_weight = instance.stats().w_total - early;
  return r;
}

SolutionVector merge_prediction(const SolutionVector& acc,
                                const std::vector<Job>& prefix_jobs,
                                const std::vector<Job>& group, Value due_date,
                                std::size_t iteration, Value w_max) {
  const SolutionVector b = build_solution_vector_dp(group, due_date);
  const auto a_frac = fractional_solution_vector(prefix_jobs);
  const auto b_frac = fractional_solution_vector(group);
  std::vector<Job> union_jobs(prefix_jobs);
  union_jobs.insert(union_jobs.end(), group.begin(), group.end());
  const auto c_frac = fractional_solution_vector(union_jobs);

  if (a_frac.size() != acc.size() || b_frac.size() != b.size()) {
    throw InconsistencyError("fractional vector horizons disagree with iteration " +
                             std::to_string(iteration));
  }
  const RangeIntervals ranges =
      compute_range_intervals(a_frac, b_frac, c_frac, iteration, w_max);
  SolutionVector c;
  try {
    c = convolve_with_ranges(acc, b, ranges);
  } catch (const PreconditionError& e) {
    throw InconsistencyError("iteration " + std::to_string(iteration) +
                             ": invalid range intervals: " + e.what());
  }
  const auto hole = std::find(c.entries.begin(), c.entries.end(), kNegInf);
  if (hole != c.entries.end()) {
    throw InconsistencyError("iteration " + std::to_string(iteration) +
                             ": range intervals miss every witness of entry " +
                             std::to_string(hole - c.entries.begin()));
  }
  return c;
}

SolutionVector merge_concave(const SolutionVector& acc,
                             const std::vector<Job>& group, Value due_date) {
  // Budgets past the previous due date add nothing for earlier groups.
  SolutionVector out = resize_to_horizon(acc, static_cast<std::size_t>(due_date));
  for (const auto& [p, step_vector] :
       processing_time_step_vectors(group, due_date)) {
    if (p > due_date) continue;
    out = convolve_sstep_concave(out, step_vector, static_cast<std::size_t>(p));
  }
  return out;
}

SolveResult run_direct(const Instance& instance, SolverPolicy policy,
                       const IterationObserver& observer) {
  const auto grouping = group_by_due_date(instance);
  const Value w_max = instance.stats().w_max;

  auto first = [&](const std::vector<Job>& group, Value d) {
    return policy == SolverPolicy::kConcaveByP
               ? build_solution_vector_concave(group, d)
               : build_solution_vector_dp(group, d);
  };

  SolutionVector acc = first(grouping.groups[0], grouping.due_dates[0]);
  if (observer) observer(1, acc);
  std::vector<Job> prefix_jobs = grouping.groups[0];

  for (std::size_t i = 1; i < grouping.groups.size(); ++i) {
    const auto& group = grouping.groups[i];
    const Value d = grouping.due_dates[i];
    switch (policy) {
      case SolverPolicy::kMaxPlusNaive:
        acc = convolve_naive(acc, build_solution_vector_dp(group, d));
        break;
      case SolverPolicy::kConcaveByP:
        acc = merge_concave(acc, group, d);
        break;
      case SolverPolicy::kPrediction:
        acc = merge_prediction(acc, prefix_jobs, group, d, i + 1, w_max);
        break;
      default:
        throw PreconditionError("not a max-plus policy");
    }
    prefix_jobs.insert(prefix_jobs.end(), group.begin(), group.end());
    if (observer) observer(i + 1, acc);
  }
  return make_result(instance, acc.entries.back());
}

SolveResult run_inverse(const Instance& instance, const IterationObserver& observer) {
  const auto grouping = group_by_due_date(instance);
  InverseSolutionVector acc(std::vector<Value>{0});
  for (std::size_t i = 0; i < grouping.groups.size(); ++i) {
    const Value d = grouping.due_dates[i];
    for (const auto& [w, step_vector] :
         weight_step_inverse_vectors(grouping.groups[i])) {
      acc = minplus_convolve(
          acc, step_vector,
          SStepConcaveEngine{static_cast<std::size_t>(w), StepAlignment::kCeil});
    }
    // Only sets finishing by the current due date stay feasible.
    for (Value& t : acc.entries) {
      if (t > d) t = kPosInf;
    }
    acc.entries.resize(acc.max_finite_index() + 1);
    if (observer) observer(i + 1, inverse_to_direct(acc, d));
  }
  return make_result(instance, static_cast<Value>(acc.max_finite_index()));
}

}  // namespace

std::string_view policy_name(SolverPolicy policy) {
  for (const auto& [p, name] : kNames) {
    if (p == policy) return name;
  }
  return "unknown";
}

std::optional<SolverPolicy> parse_policy(std::string_view name) {
  for (const auto& [p, n] : kNames) {
    if (n == name) return p;
  }
  return std::nullopt;
}

double estimated_cost(SolverPolicy policy, const InstanceStats& s,
                      const AutoCalibration& cal) {
  const double n = static_cast<double>(s.n);
  const double dm = static_cast<double>(s.d_max);
  const double dh = static_cast<double>(s.d_hash);
  const double pm = static_cast<double>(s.p_max);
  const double wm = static_cast<double>(s.w_max);
  switch (policy) {
    case SolverPolicy::kLawlerMoore:
      return cal.lawler_moore * n * dm;
    case SolverPolicy::kMaxPlusNaive:
      return cal.naive * (n * dm + dh * dm * dm);
    case SolverPolicy::kPrediction:
      return cal.prediction * (dh * n + dh * dh * dm * wm);
    case SolverPolicy::kConcaveByP:
      return cal.concave_p * (dh * n + dh * dm * pm);
    case SolverPolicy::kInverseByW:
      if (n >= dm) return cal.lawler_moore * n * dm;
      return cal.inverse_w * (n * wm + dm * wm * wm);
    case SolverPolicy::kAuto:
      break;
  }
  throw PreconditionError("auto has no cost of its own");
}

SolverPolicy choose_policy(const InstanceStats& stats,
                           const AutoCalibration& calibration) {
  SolverPolicy best = SolverPolicy::kLawlerMoore;
  double best_cost = estimated_cost(best, stats, calibration);
  for (SolverPolicy p : kConcretePolicies) {
    const double c = estimated_cost(p, stats, calibration);
    if (c < best_cost) {
      best = p;
      best_cost = c;
    }
  }
  return best;
}

SolveResult lawler_moore(const Instance& instance) {
  const auto jobs = edd_sorted(instance);
  const auto horizon = static_cast<std::size_t>(instance.stats().d_max);
  // f[t]: best weight of an early set finishing exactly at time t.
  std::vector<Value> f(horizon + 1, kNegInf);
  f[0] = 0;
  for (const Job& j : jobs) {
    if (j.p > j.d) continue;
    const auto p = static_cast<std::size_t>(j.p);
    for (auto t = static_cast<std::size_t>(j.d); t >= p; --t) {
      if (f[t - p] != kNegInf) f[t] = std::max(f[t], f[t - p] + j.w);
    }
  }
  return make_result(instance, *std::max_element(f.begin(), f.end()));
}

SolveResult solve_maxplus(const Instance& instance, SolverPolicy policy) {
  SolveOptions options;
  options.policy = policy;
  return solve(instance, options);
}

SolveResult solve(const Instance& instance, const SolveOptions& options) {
  SolverPolicy policy = options.policy;
  if (policy == SolverPolicy::kAuto) {
    policy = choose_policy(instance.stats(), options.calibration);
  }
  SolveResult result;
  switch (policy) {
    case SolverPolicy::kLawlerMoore:
      result = lawler_moore(instance);
      break;
    case SolverPolicy::kInverseByW:
      if (options.inverse_fallback &&
          static_cast<Value>(instance.size()) >= instance.stats().d_max) {
        result = lawler_moore(instance);
      } else {
        result = run_inverse(instance, options.observer);
      }
      break;
    default:
      result = run_direct(instance, policy, options.observer);
      break;
  }
  if (options.reconstruct) {
    result.early_set = reconstruct_schedule(instance, result.max_early_weight);
  }
  return result;
}

std::vector<JobId> reconstruct_schedule(const Instance& instance,
                                        Value target_weight) {
  const auto jobs = edd_sorted(instance);
  const auto horizon = static_cast<std::size_t>(instance.stats().d_max);
  const std::size_t width = horizon + 1;
  std::vector<Value> f(width, kNegInf);
  f[0] = 0;
  std::vector<bool> take(jobs.size() * width, false);
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    const Job& job = jobs[j];
    if (job.p > job.d) continue;
    const auto p = static_cast<std::size_t>(job.p);
    for (auto t = static_cast<std::size_t>(job.d); t >= p; --t) {
      if (f[t - p] != kNegInf && f[t - p] + job.w > f[t]) {
        f[t] = f[t - p] + job.w;
        take[j * width + t] = true;
      }
    }
  }
  const Value best = *std::max_element(f.begin(), f.end());
  if (best != target_weight) {
    throw InconsistencyError("target early weight " + std::to_string(target_weight) +
                             " differs from the optimum " + std::to_string(best));
  }
  std::size_t t = static_cast<std::size_t>(
      std::find(f.begin(), f.end(), best) - f.begin());
  std::vector<JobId> ids;
  std::vector<Job> chosen;
  for (std::size_t j = jobs.size(); j-- > 0;) {
    if (take[j * width + t]) {
      ids.push_back(jobs[j].id);
      chosen.push_back(jobs[j]);
      t -= static_cast<std::size_t>(jobs[j].p);
    }
  }
  std::sort(ids.begin(), ids.end());
  if (t != 0 || !edd_feasible(chosen) || total_weight(chosen) != target_weight) {
    throw InconsistencyError("reconstructed early set fails verification");
  }
  return ids;
}

}  // namespace wtardy
