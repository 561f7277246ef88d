// Fractional (LP-relaxed) solution vectors, built greedily in WSPT order.
#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "wtardy/core.hpp"

namespace wtardy {

using Rational = mpq_class;

/// entries[k] is the best fractional early weight with length at most k.
/// Exact rationals: the gap and range checks compare these exactly.
struct FractionalSolutionVector {
  std::vector<Rational> entries;

  std::size_t size() const noexcept { return entries.size(); }
  const Rational& operator[](std::size_t k) const { return entries[k]; }

  friend bool operator==(const FractionalSolutionVector&,
                         const FractionalSolutionVector&) = default;
};

/// True when a precedes b in WSPT order: larger w/p first (compared by
/// cross-multiplication), ties by id.
bool wspt_before(const Job& a, const Job& b);

std::vector<Job> wspt_sort(std::vector<Job> jobs);

/// Vector plus the implicit assignment, for inspection by tests.
struct FractionalRun {
  FractionalSolutionVector vector;
  std::vector<Job> order;        // WSPT order actually used
  std::vector<Value> processed;  // units of order[j] scheduled at the horizon
};

/// Greedy unit-slice construction over budgets 0..max due date. When the
/// current job cannot take another slice the next job is tried for the same
/// budget; once jobs run out the remaining entries repeat the last value.
FractionalRun fractional_run(std::span<const Job> jobs);

FractionalSolutionVector fractional_solution_vector(std::span<const Job> jobs);

inline FractionalSolutionVector fractional_solution_vector(const Instance& in) {
  return fractional_solution_vector(in.jobs());
}

/// 0 <= frac[k] - integral[k] <= d_hash * w_max for every k. Throws
/// PreconditionError on a length mismatch.
bool fractional_gap_check(const FractionalSolutionVector& frac,
                          const SolutionVector& integral, std::size_t d_hash,
                          Value w_max);

}  // namespace wtardy
