#include "wtardy/maxplus.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>

#include "wtardy/smawk.hpp"

namespace wtardy {

namespace {

__extension__ using Wide = __int128;

bool has_sentinel(std::span<const Value> v) {
  return std::any_of(v.begin(), v.end(),
                     [](Value x) { return x == kNegInf || x == kPosInf; });
}

void require_nonempty(std::span<const Value> a, std::span<const Value> b) {
  if (a.empty() || b.empty()) {
    throw PreconditionError("convolution operand is empty");
  }
}

// out[t] = max values[j] over j in [lo(t), hi(t)] clipped to the valid range;
// both window ends must be non-decreasing in t.
template <class Lo, class Hi>
std::vector<Value> sliding_max(std::span<const Value> values, std::size_t out_len,
                               Lo lo, Hi hi) {
  std::vector<Value> out(out_len, kNegInf);
  std::deque<std::size_t> window;
  const auto n = static_cast<std::ptrdiff_t>(values.size());
  std::ptrdiff_t next = 0;
  for (std::size_t t = 0; t < out_len; ++t) {
    const std::ptrdiff_t l = std::max<std::ptrdiff_t>(lo(t), 0);
    const std::ptrdiff_t h = std::min<std::ptrdiff_t>(hi(t), n - 1);
    while (next <= h) {
      const Value v = values[static_cast<std::size_t>(next)];
      while (!window.empty() && values[window.back()] <= v) window.pop_back();
      window.push_back(static_cast<std::size_t>(next));
      ++next;
    }
    while (!window.empty() && static_cast<std::ptrdiff_t>(window.front()) < l) {
      window.pop_front();
    }
    if (l <= h && !window.empty()) out[t] = values[window.front()];
  }
  return out;
}

// E[t] = max over k = t - s*q, q in [0, |g|), of a[k] + g[q].
// Each residue class of k modulo s is an arbitrary-by-concave convolution,
// solved with SMAWK on a matrix whose out-of-band entries are replaced by a
// steep concave extension of g.
std::vector<Value> residue_concave(std::span<const Value> a,
                                   std::span<const Value> g, std::size_t s,
                                   std::size_t out_len) {
  std::vector<Value> e(out_len, kNegInf);
  if (g.empty()) return e;
  const auto glen = static_cast<std::ptrdiff_t>(g.size());
  const Wide g_lo = *std::min_element(g.begin(), g.end());
  const Wide g_hi = *std::max_element(g.begin(), g.end());

  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < s && r < out_len; ++r) {
    cols.clear();
    Wide a_lo = 0, a_hi = 0;
    for (std::size_t k = r, idx = 0; k < a.size(); k += s, ++idx) {
      if (a[k] == kNegInf) continue;
      if (cols.empty()) {
        a_lo = a_hi = a[k];
      } else {
        a_lo = std::min<Wide>(a_lo, a[k]);
        a_hi = std::max<Wide>(a_hi, a[k]);
      }
      cols.push_back(idx);
    }
    if (cols.empty()) continue;
    const std::size_t rows = (out_len - r + s - 1) / s;
    const Wide big = (a_hi - a_lo) + (g_hi - g_lo) + 1;

    auto g_ext = [&](std::ptrdiff_t x) -> Wide {
      if (x < 0) return Wide(g[0]) + big * x;
      if (x >= glen) return Wide(g[glen - 1]) - big * (x - (glen - 1));
      return g[static_cast<std::size_t>(x)];
    };
    auto f = [&](std::size_t u, std::size_t col) -> Wide {
      return Wide(a[r + s * col]) +
             g_ext(static_cast<std::ptrdiff_t>(u) - static_cast<std::ptrdiff_t>(col));
    };

    const auto argmax = smawk_row_argmax(rows, cols, f);
    for (std::size_t u = 0; u < rows; ++u) {
      const auto x = static_cast<std::ptrdiff_t>(u) -
                     static_cast<std::ptrdiff_t>(argmax[u]);
      if (x >= 0 && x < glen) {
        e[r + s * u] = a[r + s * argmax[u]] + g[static_cast<std::size_t>(x)];
      }
    }
  }
  return e;
}

}  // namespace

EngineKind engine_kind(const ConvolutionEngine& engine) {
  return static_cast<EngineKind>(engine.index());
}

std::vector<Value> maxplus_naive(std::span<const Value> a,
                                 std::span<const Value> b, std::size_t out_len) {
  require_nonempty(a, b);
  std::vector<Value> c(out_len, kNegInf);
  if (!has_sentinel(a) && !has_sentinel(b)) {
#ifndef NDEBUG
    const Value amax = *std::max_element(a.begin(), a.end());
    const Value bmax = *std::max_element(b.begin(), b.end());
    Value sink = 0;
    assert(!__builtin_add_overflow(amax, bmax, &sink));
#endif
    for (std::size_t k = 0; k < a.size() && k < out_len; ++k) {
      const Value ak = a[k];
      const std::size_t lim = std::min(b.size(), out_len - k);
      Value* out = c.data() + k;
      const Value* bp = b.data();
      for (std::size_t l = 0; l < lim; ++l) {
        out[l] = std::max(out[l], ak + bp[l]);
      }
    }
    return c;
  }
  for (std::size_t k = 0; k < a.size() && k < out_len; ++k) {
    if (a[k] == kNegInf) continue;
    const std::size_t lim = std::min(b.size(), out_len - k);
    for (std::size_t l = 0; l < lim; ++l) {
      c[k + l] = std::max(c[k + l], add_maxplus(a[k], b[l]));
    }
  }
  return c;
}

std::optional<std::size_t> first_sstep_violation(std::span<const Value> b,
                                                 std::size_t step,
                                                 StepAlignment alignment) {
  if (step == 0) throw PreconditionError("step must be positive");
  if (b.empty()) return 0;
  std::optional<std::size_t> first;
  auto note = [&](std::size_t idx) {
    if (!first || idx < *first) first = idx;
  };
  for (std::size_t l = 0; l < b.size(); ++l) {
    if (b[l] == kNegInf || b[l] == kPosInf) {
      note(l);
      break;
    }
  }
  const std::size_t last = b.size() - 1;
  if (alignment == StepAlignment::kCeil && last % step != 0) note(last);
  for (std::size_t l = 1; l < b.size(); ++l) {
    if (l % step == 0) continue;
    if (alignment == StepAlignment::kFloor) {
      if (b[l] != b[l - 1]) { note(l); break; }
    } else if (l + 1 < b.size() && b[l] != b[l + 1]) {
      note(l);
      break;
    }
  }
  for (std::size_t m = 2 * step; m < b.size(); m += step) {
    const Wide left = Wide(b[m - step]) - Wide(b[m - 2 * step]);
    const Wide right = Wide(b[m]) - Wide(b[m - step]);
    if (right > left) {
      note(m);
      break;
    }
  }
  return first;
}

bool is_sstep_concave(std::span<const Value> b, std::size_t step,
                      StepAlignment alignment) {
  return !first_sstep_violation(b, step, alignment).has_value();
}

std::vector<Value> maxplus_sstep(std::span<const Value> a,
                                 std::span<const Value> b, std::size_t step,
                                 StepAlignment alignment, std::size_t out_len) {
  require_nonempty(a, b);
  if (auto bad = first_sstep_violation(b, step, alignment)) {
    throw PreconditionError("right operand is not " + std::to_string(step) +
                            "-step concave at index " + std::to_string(*bad));
  }
  const std::size_t s = step;
  const std::size_t last = b.size() - 1;
  const auto ss = static_cast<std::ptrdiff_t>(s);

  if (alignment == StepAlignment::kFloor) {
    // Full blocks [s*q, s*q + s - 1] map to g[q]; a trailing partial block
    // [s*full, last] is handled as a plain window maximum over a.
    const std::size_t full = (last + 1) / s;
    std::vector<Value> g(full);
    for (std::size_t q = 0; q < full; ++q) g[q] = b[q * s];
    const auto e = residue_concave(a, g, s, out_len);
    auto c = sliding_max(
        e, out_len,
        [&](std::size_t t) { return static_cast<std::ptrdiff_t>(t) - ss + 1; },
        [](std::size_t t) { return static_cast<std::ptrdiff_t>(t); });
    if (full * s <= last) {
      const Value tail = b[full * s];
      const auto lastp = static_cast<std::ptrdiff_t>(last);
      const auto startp = static_cast<std::ptrdiff_t>(full * s);
      const auto p = sliding_max(
          a, out_len,
          [&](std::size_t t) { return static_cast<std::ptrdiff_t>(t) - lastp; },
          [&](std::size_t t) { return static_cast<std::ptrdiff_t>(t) - startp; });
      for (std::size_t t = 0; t < out_len; ++t) {
        c[t] = std::max(c[t], add_maxplus(p[t], tail));
      }
    }
    return c;
  }

  // Ceil: offsets in (s*(q-1), s*q] map to b[s*q]; offset 0 maps to b[0].
  const std::size_t blocks = last / s;
  std::vector<Value> g(blocks);
  for (std::size_t q = 0; q < blocks; ++q) g[q] = b[(q + 1) * s];
  const auto e = residue_concave(a, g, s, out_len);
  auto c = sliding_max(
      e, out_len,
      [&](std::size_t t) { return static_cast<std::ptrdiff_t>(t) - ss; },
      [](std::size_t t) { return static_cast<std::ptrdiff_t>(t) - 1; });
  for (std::size_t t = 0; t < out_len && t < a.size(); ++t) {
    c[t] = std::max(c[t], add_maxplus(a[t], b[0]));
  }
  return c;
}

void check_range_intervals_shape(const RangeIntervals& ranges,
                                 std::size_t a_size, std::size_t b_size) {
  const auto& iv = ranges.intervals;
  if (iv.size() != a_size) {
    throw PreconditionError("expected " + std::to_string(a_size) +
                            " range intervals, got " + std::to_string(iv.size()));
  }
  for (std::size_t k = 0; k < iv.size(); ++k) {
    if (iv[k].lo > iv[k].hi) {
      throw PreconditionError("empty range interval at " + std::to_string(k));
    }
    if (iv[k].hi >= b_size) {
      throw PreconditionError("range interval out of bounds at " +
                              std::to_string(k));
    }
    if (k > 0 && (iv[k].lo < iv[k - 1].lo || iv[k].hi < iv[k - 1].hi)) {
      throw PreconditionError("range interval endpoints decrease at " +
                              std::to_string(k));
    }
  }
}

std::vector<Value> maxplus_ranges(std::span<const Value> a,
                                  std::span<const Value> b,
                                  const RangeIntervals& ranges,
                                  std::size_t out_len) {
  require_nonempty(a, b);
  check_range_intervals_shape(ranges, a.size(), b.size());
  std::vector<Value> c(out_len, kNegInf);
  for (std::size_t k = 0; k < a.size() && k < out_len; ++k) {
    if (a[k] == kNegInf) continue;
    const Interval iv = ranges.intervals[k];
    const std::size_t hi = std::min(iv.hi, out_len - 1 - k);
    for (std::size_t l = iv.lo; l <= hi; ++l) {
      c[k + l] = std::max(c[k + l], add_maxplus(a[k], b[l]));
    }
  }
  return c;
}

bool is_bounded_monotone(std::span<const Value> a, Value bound) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > bound) return false;
    if (k > 0 && a[k] < a[k - 1]) return false;
  }
  return true;
}

std::vector<Value> maxplus_with_engine(std::span<const Value> a,
                                       std::span<const Value> b,
                                       const ConvolutionEngine& engine,
                                       std::size_t out_len) {
  struct Dispatch {
    std::span<const Value> a, b;
    std::size_t out_len;
    std::vector<Value> operator()(const NaiveEngine&) const {
      return maxplus_naive(a, b, out_len);
    }
    std::vector<Value> operator()(const SStepConcaveEngine& e) const {
      return maxplus_sstep(a, b, e.step, e.alignment, out_len);
    }
    std::vector<Value> operator()(const RangeGuidedEngine& e) const {
      return maxplus_ranges(a, b, e.ranges, out_len);
    }
    std::vector<Value> operator()(const BoundedMonotoneEngine& e) const {
      require_nonempty(a, b);
      if (!is_bounded_monotone(a, e.bound) || !is_bounded_monotone(b, e.bound)) {
        throw PreconditionError("operands are not " + std::to_string(e.bound) +
                                "-bounded monotone");
      }
      if (e.kernel) {
        auto c = e.kernel(a, b, out_len);
        if (c.size() != out_len) {
          throw InconsistencyError("bounded-monotone kernel returned wrong length");
        }
        return c;
      }
      return maxplus_naive(a, b, out_len);
    }
  };
  return std::visit(Dispatch{a, b, out_len}, engine);
}

SolutionVector convolve_naive(const SolutionVector& a, const SolutionVector& b) {
  return SolutionVector(
      maxplus_naive(a.entries, b.entries, std::max(a.size(), b.size())));
}

SolutionVector convolve_sstep_concave(const SolutionVector& a,
                                      const SolutionVector& b, std::size_t step) {
  return SolutionVector(maxplus_sstep(a.entries, b.entries, step,
                                      StepAlignment::kFloor,
                                      std::max(a.size(), b.size())));
}

SolutionVector convolve_with_ranges(const SolutionVector& a,
                                    const SolutionVector& b,
                                    const RangeIntervals& ranges) {
  return SolutionVector(maxplus_ranges(a.entries, b.entries, ranges,
                                       std::max(a.size(), b.size())));
}

SolutionVector convolve_bounded_monotone(const SolutionVector& a,
                                         const SolutionVector& b, Value bound,
                                         const BoundedMonotoneKernel& kernel) {
  return convolve(a, b, BoundedMonotoneEngine{bound, kernel});
}

SolutionVector convolve(const SolutionVector& a, const SolutionVector& b,
                        const ConvolutionEngine& engine) {
  return SolutionVector(maxplus_with_engine(a.entries, b.entries, engine,
                                            std::max(a.size(), b.size())));
}

InverseSolutionVector minplus_convolve(const InverseSolutionVector& a,
                                       const InverseSolutionVector& b,
                                       const ConvolutionEngine& engine) {
  auto negate = [](std::span<const Value> v) {
    std::vector<Value> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(),
                   [](Value x) { return x == kPosInf ? kNegInf : -x; });
    return out;
  };
  const auto na = negate(a.entries);
  const auto nb = negate(b.entries);
  require_nonempty(na, nb);
  auto c = maxplus_with_engine(na, nb, engine, a.size() + b.size() - 1);
  for (Value& x : c) x = (x == kNegInf) ? kPosInf : -x;
  return InverseSolutionVector(std::move(c));
}

}  // namespace wtardy
