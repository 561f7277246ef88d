// (max,+)- and (min,+)-convolution engines.
//
// All engines agree with convolve_naive on every input that satisfies their
// precondition. The (max,+) output covers indices 0..max(|A|,|B|)-1; indices
// outside an operand count as -inf. The (min,+) output covers the full sum
// range 0..|A|+|B|-2 because inverse vectors are indexed by weight.
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "wtardy/core.hpp"

namespace wtardy {

/// Where the constant runs of an s-step vector sit relative to the stride.
enum class StepAlignment {
  /// B[l] == B[l-1] whenever l % s != 0 (direct solution vectors).
  kFloor,
  /// B[l] == B[l+1] whenever l % s != 0 and the last index is a multiple of s
  /// (negated inverse vectors, where weight targets round up).
  kCeil,
};

struct Interval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// One interval of B-indices per index of A, plus the additive error bound
/// the intervals certify.
struct RangeIntervals {
  std::vector<Interval> intervals;
  Value error = 0;
};

/// Hook for an external bounded-monotone convolution. Receives A, B and the
/// output length.
using BoundedMonotoneKernel = std::function<std::vector<Value>(
    std::span<const Value>, std::span<const Value>, std::size_t)>;

struct NaiveEngine {};

struct SStepConcaveEngine {
  std::size_t step = 1;
  StepAlignment alignment = StepAlignment::kFloor;
};

struct RangeGuidedEngine {
  RangeIntervals ranges;
};

/// Validates both operands are bound-bounded monotone, then runs kernel, or
/// the naive engine when no kernel is installed.
struct BoundedMonotoneEngine {
  Value bound = 0;
  BoundedMonotoneKernel kernel;
};

using ConvolutionEngine = std::variant<NaiveEngine, SStepConcaveEngine,
                                       RangeGuidedEngine, BoundedMonotoneEngine>;

enum class EngineKind { kNaive, kSStepConcave, kRangeGuided, kBoundedMonotone };

EngineKind engine_kind(const ConvolutionEngine& engine);

// Span-level kernels. Entries may be kNegInf; out_len is explicit.

std::vector<Value> maxplus_naive(std::span<const Value> a,
                                 std::span<const Value> b, std::size_t out_len);

std::vector<Value> maxplus_sstep(std::span<const Value> a,
                                 std::span<const Value> b, std::size_t step,
                                 StepAlignment alignment, std::size_t out_len);

std::vector<Value> maxplus_ranges(std::span<const Value> a,
                                  std::span<const Value> b,
                                  const RangeIntervals& ranges,
                                  std::size_t out_len);

std::vector<Value> maxplus_with_engine(std::span<const Value> a,
                                       std::span<const Value> b,
                                       const ConvolutionEngine& engine,
                                       std::size_t out_len);

/// First index at which b fails to be step-s concave under alignment, or
/// nullopt. Sentinel entries count as violations.
std::optional<std::size_t> first_sstep_violation(
    std::span<const Value> b, std::size_t step,
    StepAlignment alignment = StepAlignment::kFloor);

bool is_sstep_concave(std::span<const Value> b, std::size_t step,
                      StepAlignment alignment = StepAlignment::kFloor);
inline bool is_sstep_concave(const SolutionVector& b, std::size_t step) {
  return is_sstep_concave(b.entries, step);
}

bool is_bounded_monotone(std::span<const Value> a, Value bound);
inline bool is_bounded_monotone(const SolutionVector& a, Value bound) {
  return is_bounded_monotone(a.entries, bound);
}

/// Throws PreconditionError when the intervals do not fit a (|A|, |B|) pair:
/// wrong count, empty, out of bounds or non-monotone endpoints.
void check_range_intervals_shape(const RangeIntervals& ranges,
                                 std::size_t a_size, std::size_t b_size);

SolutionVector convolve_naive(const SolutionVector& a, const SolutionVector& b);

/// Linear time when b is s-step concave; throws PreconditionError naming the
/// first offending index otherwise.
SolutionVector convolve_sstep_concave(const SolutionVector& a,
                                      const SolutionVector& b, std::size_t step);

/// Only pairs (k, l) with l inside ranges.intervals[k] are considered.
SolutionVector convolve_with_ranges(const SolutionVector& a,
                                    const SolutionVector& b,
                                    const RangeIntervals& ranges);

SolutionVector convolve_bounded_monotone(const SolutionVector& a,
                                         const SolutionVector& b, Value bound,
                                         const BoundedMonotoneKernel& kernel = {});

SolutionVector convolve(const SolutionVector& a, const SolutionVector& b,
                        const ConvolutionEngine& engine);

/// (min,+)-convolution computed as -((-a) (+) (-b)) with the given (max,+)
/// engine; for SStepConcaveEngine the negated b must satisfy the engine's
/// precondition.
InverseSolutionVector minplus_convolve(const InverseSolutionVector& a,
                                       const InverseSolutionVector& b,
                                       const ConvolutionEngine& engine = NaiveEngine{});

}  // namespace wtardy
