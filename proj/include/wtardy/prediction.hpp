// Range intervals predicted from fractional solution vectors.
//
// For the accumulator A (jobs J_A) and the next group's vector B (jobs J_B),
// the fractional vectors A', B', C' of J_A, J_B and J_A u J_B locate, for
// every k, the offsets l where A[k] + B[l] is close to (A (+) B)[k + l].
#pragma once

#include <string>
#include <vector>

#include "wtardy/core.hpp"
#include "wtardy/fractional.hpp"
#include "wtardy/maxplus.hpp"

namespace wtardy {

/// C'[k + l] - (A'[k] + B'[l]).
///
/// C' is a budget-indexed vector, so budgets past its horizon read its last
/// entry (no extra budget helps once every due date is saturated). Throws
/// PreconditionError when k or l is outside A' or B'.
Rational delta(const FractionalSolutionVector& a_frac,
               const FractionalSolutionVector& b_frac,
               const FractionalSolutionVector& c_frac, std::size_t k,
               std::size_t l);

/// Two-pointer sweep producing, for every k, the smallest and largest l with
/// delta(k, l) <= 2 * iteration * w_max. Neither pointer moves backwards.
/// The result carries error 4 * iteration * w_max. Throws InconsistencyError
/// if some k admits no offset at all.
RangeIntervals compute_range_intervals(const FractionalSolutionVector& a_frac,
                                       const FractionalSolutionVector& b_frac,
                                       const FractionalSolutionVector& c_frac,
                                       std::size_t iteration, Value w_max);

struct RangeViolation {
  /// 0: malformed intervals, otherwise the violated condition (1, 2 or 3).
  int condition = 0;
  std::size_t index = 0;
  std::string message;
};

/// Checks the three range-interval conditions literally against
/// C = convolve_naive(A, B):
///   1. A[k] + B[l] >= C[k + l] - error for every l in [x_k, y_k]
///      (only where k + l is inside C);
///   2. every C[t] has a witness k with t - k in [x_k, y_k];
///   3. x_k and y_k are non-decreasing.
std::vector<RangeViolation> validate_range_intervals(const SolutionVector& a,
                                                     const SolutionVector& b,
                                                     const RangeIntervals& ranges);

}  // namespace wtardy
