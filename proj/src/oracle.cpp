#include "wtardy/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

namespace wtardy {

namespace {

bool edd_order(const Job& a, const Job& b) {
  return a.d != b.d ? a.d < b.d : a.id < b.id;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw InvalidInput("brute force limited to " + std::to_string(cap) +
                       " jobs, got " + std::to_string(n));
  }
}

// Visits every subset of the EDD-sorted jobs in Gray-code order, keeping the
// running weight and processing time incrementally. visit(mask, p, w).
template <class Visit>
void for_each_subset(const std::vector<Job>& sorted, Visit&& visit) {
  const std::size_t n = sorted.size();
  std::uint64_t mask = 0;
  Value p = 0, w = 0;
  visit(mask, p, w);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
    const auto bit = static_cast<std::size_t>(__builtin_ctzll(i));
    mask ^= std::uint64_t{1} << bit;
    const Value sign = (mask >> bit) & 1 ? 1 : -1;
    p += sign * sorted[bit].p;
    w += sign * sorted[bit].w;
    visit(mask, p, w);
  }
}

bool mask_feasible(const std::vector<Job>& sorted, std::uint64_t mask) {
  Value t = 0;
  for (std::size_t j = 0; mask != 0; ++j, mask >>= 1) {
    if (!(mask & 1)) continue;
    t += sorted[j].p;
    if (t > sorted[j].d) return false;
  }
  return true;
}

}  // namespace

bool edd_feasible(std::span<const Job> early) {
  std::vector<Job> sorted(early.begin(), early.end());
  std::sort(sorted.begin(), sorted.end(), edd_order);
  Value t = 0;
  for (const Job& j : sorted) {
    t += j.p;
    if (t > j.d) return false;
  }
  return true;
}

SolveResult brute_force(const Instance& instance, std::size_t cap) {
  check_cap(instance.size(), std::min<std::size_t>(cap, 62));
  std::vector<Job> sorted = instance.jobs();
  std::sort(sorted.begin(), sorted.end(), edd_order);

  Value best = 0;
  std::uint64_t best_mask = 0;
  for_each_subset(sorted, [&](std::uint64_t mask, Value, Value w) {
    if (w > best && mask_feasible(sorted, mask)) {
      best = w;
      best_mask = mask;
    }
  });

  SolveResult r;
  r.max_early_weight = best;
  r.min_tardy_weight = instance.stats().w_total - best;
  std::vector<JobId> ids;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    if ((best_mask >> j) & 1) ids.push_back(sorted[j].id);
  }
  std::sort(ids.begin(), ids.end());
  r.early_set = std::move(ids);
  return r;
}

Value brute_force_all_orders(const Instance& instance, std::size_t cap) {
  check_cap(instance.size(), cap);
  std::vector<std::size_t> perm(instance.size());
  std::iota(perm.begin(), perm.end(), 0);
  const auto& jobs = instance.jobs();
  Value best = 0;
  do {
    Value t = 0, w = 0;
    for (std::size_t idx : perm) {
      t += jobs[idx].p;
      if (t <= jobs[idx].d) w += jobs[idx].w;
    }
    best = std::max(best, w);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SolutionVector brute_force_vector(std::span<const Job> jobs, Value horizon,
                                  std::size_t cap) {
  if (horizon < 0) throw PreconditionError("horizon must be non-negative");
  check_cap(jobs.size(), std::min<std::size_t>(cap, 62));
  std::vector<Job> sorted(jobs.begin(), jobs.end());
  std::sort(sorted.begin(), sorted.end(), edd_order);

  auto out = SolutionVector::zeros(static_cast<std::size_t>(horizon));
  for_each_subset(sorted, [&](std::uint64_t mask, Value p, Value w) {
    if (p > horizon) return;
    const auto k = static_cast<std::size_t>(p);
    if (w > out[k] && mask_feasible(sorted, mask)) out[k] = w;
  });
  for (std::size_t k = 1; k < out.size(); ++k) {
    out[k] = std::max(out[k], out[k - 1]);
  }
  return out;
}

bool prefix_vector_semantics_check(const Instance& instance,
                                   std::size_t iteration, const SolutionVector& a) {
  const auto grouping = group_by_due_date(instance);
  if (iteration == 0 || iteration > grouping.groups.size()) return false;
  std::vector<Job> prefix;
  for (std::size_t i = 0; i < iteration; ++i) {
    prefix.insert(prefix.end(), grouping.groups[i].begin(),
                  grouping.groups[i].end());
  }
  return brute_force_vector(prefix, grouping.due_dates[iteration - 1]) == a;
}

}  // namespace wtardy
