// End-to-end exact solvers.
#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "wtardy/core.hpp"

namespace wtardy {

enum class SolverPolicy {
  kLawlerMoore,
  kMaxPlusNaive,
  kPrediction,
  kConcaveByP,
  kInverseByW,
  kAuto,
};

inline constexpr SolverPolicy kConcretePolicies[] = {
    SolverPolicy::kLawlerMoore, SolverPolicy::kMaxPlusNaive,
    SolverPolicy::kPrediction,  SolverPolicy::kConcaveByP,
    SolverPolicy::kInverseByW,
};

/// CLI spelling: lawler-moore, naive, prediction, concave-p, inverse-w, auto.
std::string_view policy_name(SolverPolicy policy);
std::optional<SolverPolicy> parse_policy(std::string_view name);

/// Multipliers applied to each policy's asymptotic cost estimate before Auto
/// picks the cheapest. Measured with the bench harness; the defaults only
/// reflect that the prediction path works on exact rationals.
struct AutoCalibration {
  double lawler_moore = 1.0;
  double naive = 1.0;
  double prediction = 50.0;
  double concave_p = 4.0;
  double inverse_w = 4.0;
};

/// Cost estimate of a concrete policy on an instance with these statistics.
double estimated_cost(SolverPolicy policy, const InstanceStats& stats,
                      const AutoCalibration& calibration = {});

SolverPolicy choose_policy(const InstanceStats& stats,
                           const AutoCalibration& calibration = {});

/// Called after each due-date group is merged, with the 1-based iteration
/// and the accumulator over budgets 0..d^(iteration).
using IterationObserver =
    std::function<void(std::size_t iteration, const SolutionVector& accumulator)>;

struct SolveOptions {
  SolverPolicy policy = SolverPolicy::kAuto;
  bool reconstruct = false;
  /// InverseByW hands instances with n >= d_max to Lawler-Moore.
  bool inverse_fallback = true;
  AutoCalibration calibration;
  IterationObserver observer;
};

/// O(n * d_max) DP over EDD-ordered jobs.
SolveResult lawler_moore(const Instance& instance);

/// Merges per-due-date solution vectors with the policy's convolution
/// engine. kLawlerMoore and kAuto are accepted and dispatched.
SolveResult solve_maxplus(const Instance& instance, SolverPolicy policy);

SolveResult solve(const Instance& instance, const SolveOptions& options);

/// An EDD-feasible early set whose weight is target_weight, which must be
/// the optimum. Throws InconsistencyError otherwise.
std::vector<JobId> reconstruct_schedule(const Instance& instance,
                                        Value target_weight);

}  // namespace wtardy
