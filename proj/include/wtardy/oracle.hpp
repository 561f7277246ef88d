// Exhaustive ground truth for small instances.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wtardy/core.hpp"

namespace wtardy {

inline constexpr std::size_t kDefaultOracleCap = 20;

/// True iff the jobs, run back to back in due-date order (ties by id), all
/// complete by their due dates.
bool edd_feasible(std::span<const Job> early);

/// Best early set over all 2^n subsets. Throws InvalidInput when n > cap.
SolveResult brute_force(const Instance& instance,
                        std::size_t cap = kDefaultOracleCap);

/// Best early weight over all n! processing orders, with no EDD assumption.
/// Throws InvalidInput when n > cap.
Value brute_force_all_orders(const Instance& instance, std::size_t cap = 9);

/// entries[k] = best weight of an EDD-feasible subset of jobs with total
/// processing time <= k, for k = 0..horizon.
SolutionVector brute_force_vector(std::span<const Job> jobs, Value horizon,
                                  std::size_t cap = kDefaultOracleCap);

/// True iff A equals the brute-force vector of the first `iteration`
/// due-date groups over budgets 0..d^(iteration).
bool prefix_vector_semantics_check(const Instance& instance,
                                   std::size_t iteration, const SolutionVector& a);

}  // namespace wtardy
