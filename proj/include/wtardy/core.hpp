// Domain types shared by every solver and convolution engine.
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtardy {

using Value = std::int64_t;
using JobId = std::int64_t;

/// Reserved for infeasible (max,+) entries.
inline constexpr Value kNegInf = std::numeric_limits<Value>::min();
/// Reserved for infeasible (min,+) entries.
inline constexpr Value kPosInf = std::numeric_limits<Value>::max();

/// Saturating addition for (max,+) arithmetic: -inf absorbs everything.
constexpr Value add_maxplus(Value a, Value b) noexcept {
  return (a == kNegInf || b == kNegInf) ? kNegInf : a + b;
}

/// Saturating addition for (min,+) arithmetic: +inf absorbs everything.
constexpr Value add_minplus(Value a, Value b) noexcept {
  return (a == kPosInf || b == kPosInf) ? kPosInf : a + b;
}

/// Input rejected before any computation (bad instance, bad parameters).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an engine or builder did not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal cross-check failed. Never swallowed: a wrong answer is worse.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Job {
  JobId id = 0;
  Value p = 1;  // processing time
  Value w = 1;  // weight
  Value d = 1;  // due date

  friend bool operator==(const Job&, const Job&) = default;
};

struct InstanceStats {
  std::size_t n = 0;
  Value d_max = 0;
  std::size_t d_hash = 0;
  Value p_max = 0;
  Value w_max = 0;
  Value w_total = 0;
  Value p_total = 0;
};

/// A validated, immutable set of jobs.
class Instance {
 public:
  /// Throws InvalidInput on an empty list, duplicate ids, non-positive
  /// fields, or totals that do not fit in 64 bits.
  explicit Instance(std::vector<Job> jobs);

  const std::vector<Job>& jobs() const noexcept { return jobs_; }
  const InstanceStats& stats() const noexcept { return stats_; }
  std::size_t size() const noexcept { return jobs_.size(); }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.jobs_ == b.jobs_;
  }

 private:
  std::vector<Job> jobs_;
  InstanceStats stats_;
};

/// Jobs partitioned by due date; groups[i] holds every job with due date
/// due_dates[i], ordered by id.
struct DueDateGrouping {
  std::vector<Value> due_dates;
  std::vector<std::vector<Job>> groups;
};

DueDateGrouping group_by_due_date(const Instance& instance);

/// entries[k] is the best early weight using at most k units of processing.
struct SolutionVector {
  std::vector<Value> entries;

  SolutionVector() = default;
  explicit SolutionVector(std::vector<Value> v) : entries(std::move(v)) {}

  /// All-zero vector covering budgets 0..horizon.
  static SolutionVector zeros(std::size_t horizon) {
    return SolutionVector(std::vector<Value>(horizon + 1, 0));
  }

  std::size_t size() const noexcept { return entries.size(); }
  std::size_t horizon() const noexcept { return entries.size() - 1; }
  Value operator[](std::size_t k) const { return entries[k]; }
  Value& operator[](std::size_t k) { return entries[k]; }

  friend bool operator==(const SolutionVector&, const SolutionVector&) = default;
};

/// entries[k] is the least processing time of an early set of weight >= k,
/// kPosInf when no such set exists.
struct InverseSolutionVector {
  std::vector<Value> entries;

  InverseSolutionVector() = default;
  explicit InverseSolutionVector(std::vector<Value> v) : entries(std::move(v)) {}

  std::size_t size() const noexcept { return entries.size(); }
  Value operator[](std::size_t k) const { return entries[k]; }
  Value& operator[](std::size_t k) { return entries[k]; }

  /// Largest weight target with a finite entry.
  std::size_t max_finite_index() const;

  friend bool operator==(const InverseSolutionVector&,
                         const InverseSolutionVector&) = default;
};

struct SolveResult {
  Value min_tardy_weight = 0;
  Value max_early_weight = 0;
  std::optional<std::vector<JobId>> early_set;
};

enum class ViolationKind {
  kEmpty,
  kNonzeroOrigin,
  kNonMonotone,
  kSentinel,
};

struct Violation {
  ViolationKind kind;
  std::size_t index = 0;
  std::string message;
};

/// Reports every way v breaks zero-origin or monotonicity. Empty means valid.
std::vector<Violation> validate_solution_vector(const SolutionVector& v);

/// Same checks for an inverse vector, plus the finite-prefix/+inf-suffix shape.
std::vector<Violation> validate_inverse_solution_vector(
    const InverseSolutionVector& v);

/// Extends v to cover budgets 0..horizon by repeating its last entry.
/// Truncates when v is longer.
SolutionVector resize_to_horizon(const SolutionVector& v, std::size_t horizon);

Value total_weight(std::span<const Job> jobs);

}  // namespace wtardy
