// Solution vectors for a single-due-date group of jobs.
#pragma once

#include <span>
#include <utility>
#include <vector>

#include "wtardy/core.hpp"

namespace wtardy {

/// 0/1 knapsack DP: entries[k] = best weight of a subset with total
/// processing time <= k, for k = 0..horizon. O(n * horizon).
SolutionVector build_solution_vector_dp(std::span<const Job> jobs, Value horizon);

/// For each distinct processing time p, the p-step concave vector of the
/// jobs with that processing time (weights taken in descending order, ties by
/// id), covering 0..horizon. Ordered by p.
std::vector<std::pair<Value, SolutionVector>> processing_time_step_vectors(
    std::span<const Job> jobs, Value horizon);

/// Same values as the DP builder, obtained by folding the processing-time
/// step vectors with the s-step concave engine.
SolutionVector build_solution_vector_concave(std::span<const Job> jobs,
                                             Value horizon);

/// For each distinct weight w, the inverse vector of the jobs with that
/// weight: entry k is the sum of the ceil(k / w) smallest processing times.
/// Covers targets 0..w * count. Ordered by w.
std::vector<std::pair<Value, InverseSolutionVector>> weight_step_inverse_vectors(
    std::span<const Job> jobs);

/// entries[k] = least processing time reaching weight >= k, folding the
/// weight step vectors with (min,+)-convolutions. Covers 0..sum of weights.
/// Due dates are not applied here.
InverseSolutionVector build_inverse_solution_vector(std::span<const Job> jobs);

/// entries[k] = max { w : inv[w] <= k } for k = 0..horizon.
SolutionVector inverse_to_direct(const InverseSolutionVector& inv, Value horizon);

}  // namespace wtardy
