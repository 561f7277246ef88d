#include "wtardy/prediction.hpp"

#include <algorithm>

namespace wtardy {

namespace {

const Rational& budget_entry(const FractionalSolutionVector& v, std::size_t k) {
  return v[std::min(k, v.size() - 1)];
}

}  // namespace

Rational delta(const FractionalSolutionVector& a_frac,
               const FractionalSolutionVector& b_frac,
               const FractionalSolutionVector& c_frac, std::size_t k,
               std::size_t l) {
  if (k >= a_frac.size() || l >= b_frac.size() || c_frac.size() == 0) {
    throw PreconditionError("delta index out of range: k=" + std::to_string(k) +
                            " l=" + std::to_string(l));
  }
  return budget_entry(c_frac, k + l) - a_frac[k] - b_frac[l];
}

RangeIntervals compute_range_intervals(const FractionalSolutionVector& a_frac,
                                       const FractionalSolutionVector& b_frac,
                                       const FractionalSolutionVector& c_frac,
                                       std::size_t iteration, Value w_max) {
  if (a_frac.size() == 0 || b_frac.size() == 0 || c_frac.size() == 0) {
    throw PreconditionError("fractional vectors must be non-empty");
  }
  if (iteration == 0 || w_max < 1) {
    throw PreconditionError("iteration and w_max must be positive");
  }
  const auto it = static_cast<Value>(iteration);
  const Rational threshold(2 * it * w_max);
  const std::size_t nb = b_frac.size();
  auto within = [&](std::size_t k, std::size_t l) {
    return budget_entry(c_frac, k + l) - a_frac[k] - b_frac[l] <= threshold;
  };

  RangeIntervals out;
  out.error = 4 * it * w_max;
  out.intervals.resize(a_frac.size());
  std::size_t x = 0;
  std::size_t y = 0;  // one past the previous y_k
  for (std::size_t k = 0; k < a_frac.size(); ++k) {
    while (x < nb && !within(k, x)) ++x;
    if (x == nb) {
      throw InconsistencyError("no admissible offset for index " +
                               std::to_string(k));
    }
    y = std::max(y, x);
    while (y < nb && within(k, y)) ++y;
    out.intervals[k] = Interval{x, y - 1};
  }
  return out;
}

std::vector<RangeViolation> validate_range_intervals(const SolutionVector& a,
                                                     const SolutionVector& b,
                                                     const RangeIntervals& ranges) {
  std::vector<RangeViolation> out;
  const auto& iv = ranges.intervals;
  if (iv.size() != a.size()) {
    out.push_back({0, iv.size(), "interval count does not match |A|"});
    return out;
  }
  for (std::size_t k = 0; k < iv.size(); ++k) {
    if (iv[k].lo > iv[k].hi || iv[k].hi >= b.size()) {
      out.push_back({0, k, "interval " + std::to_string(k) + " is malformed"});
    }
  }
  if (!out.empty()) return out;

  const SolutionVector c = convolve_naive(a, b);
  const std::size_t n = c.size();

  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t l = iv[k].lo; l <= iv[k].hi && k + l < n; ++l) {
      if (a[k] + b[l] < c[k + l] - ranges.error) {
        out.push_back({1, k,
                       "A[" + std::to_string(k) + "] + B[" + std::to_string(l) +
                           "] is more than the error below C"});
        break;
      }
    }
  }

  for (std::size_t t = 0; t < n; ++t) {
    bool witnessed = false;
    for (std::size_t k = 0; k <= t && k < a.size() && !witnessed; ++k) {
      const std::size_t l = t - k;
      if (l >= b.size()) continue;
      witnessed = a[k] + b[l] == c[t] && iv[k].lo <= l && l <= iv[k].hi;
    }
    if (!witnessed) {
      out.push_back({2, t, "no witness inside the intervals for C[" +
                               std::to_string(t) + "]"});
    }
  }

  for (std::size_t k = 1; k < iv.size(); ++k) {
    if (iv[k].lo < iv[k - 1].lo || iv[k].hi < iv[k - 1].hi) {
      out.push_back({3, k, "endpoints decrease at " + std::to_string(k)});
    }
  }
  return out;
}

}  // namespace wtardy
