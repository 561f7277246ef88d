// Deterministic random instances.
//
// Everything is driven by one std::mt19937_64 seeded with `seed`. A draw in
// [lo, hi] is lo + (next() mod (hi - lo + 1)). Draw order:
//   1. Due dates: start from {d_max}; while fewer than d_hash distinct values,
//      draw one in [1, d_max - 1] and insert it. Sort ascending.
//   2. For job j = 0..n-1: due date is sorted[j] if j < d_hash, else
//      sorted[draw(0, d_hash - 1)]; then p = draw(1, p_max); then the weight:
//        uniform:        w = draw(1, w_max)
//        correlated:     w = clamp(base + draw(0, 2) - 1, 1, w_max) with
//                        base = 1 + (p - 1) * (w_max - 1) / max(1, p_max - 1)
//        anticorrelated: same with base = w_max - (p - 1) * (w_max - 1) / max(1, p_max - 1)
//   3. Fisher-Yates: for i = n-1 down to 1, swap jobs i and draw(0, i).
//   4. Ids are the final positions 0..n-1.
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "wtardy/core.hpp"

namespace wtardy {

enum class Distribution { kUniform, kCorrelated, kAntiCorrelated };

std::string_view distribution_name(Distribution d);
std::optional<Distribution> parse_distribution(std::string_view name);

struct GeneratorParams {
  std::uint64_t seed = 1;
  std::size_t n = 10;
  std::size_t d_hash = 1;
  Value d_max = 10;
  Value p_max = 10;
  Value w_max = 10;
  Distribution distribution = Distribution::kUniform;
};

/// Exactly d_hash distinct due dates, the largest being d_max. Throws
/// InvalidInput unless 1 <= d_hash <= min(n, d_max) and all maxima are >= 1.
Instance generate_instance(const GeneratorParams& params);

}  // namespace wtardy
