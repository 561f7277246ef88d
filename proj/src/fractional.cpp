#include "wtardy/fractional.hpp"

#include <algorithm>
#include <string>

namespace wtardy {

namespace {
__extension__ using Wide = __int128;
}  // namespace

bool wspt_before(const Job& a, const Job& b) {
  const Wide lhs = static_cast<Wide>(a.w) * b.p;
  const Wide rhs = static_cast<Wide>(b.w) * a.p;
  if (lhs != rhs) return lhs > rhs;
  return a.id < b.id;
}

std::vector<Job> wspt_sort(std::vector<Job> jobs) {
  std::sort(jobs.begin(), jobs.end(), wspt_before);
  return jobs;
}

FractionalRun fractional_run(std::span<const Job> jobs) {
  FractionalRun run;
  run.order = wspt_sort(std::vector<Job>(jobs.begin(), jobs.end()));
  const auto& order = run.order;
  const std::size_t n = order.size();
  run.processed.assign(n, 0);

  std::vector<Value> dates;
  for (const Job& j : order) dates.push_back(j.d);
  std::sort(dates.begin(), dates.end());
  dates.erase(std::unique(dates.begin(), dates.end()), dates.end());
  const std::size_t groups = dates.size();
  const Value horizon = dates.empty() ? 0 : dates.back();

  std::vector<std::size_t> group_of(n);
  for (std::size_t j = 0; j < n; ++j) {
    group_of[j] = static_cast<std::size_t>(
        std::lower_bound(dates.begin(), dates.end(), order[j].d) - dates.begin());
  }

  // slack[i] = d^(i) - p^(i); suffix[i] = min over i' >= i of slack[i'].
  std::vector<Value> slack(dates);
  std::vector<Value> suffix(groups);
  for (std::size_t i = groups; i-- > 0;) {
    suffix[i] = (i + 1 < groups) ? std::min(slack[i], suffix[i + 1]) : slack[i];
  }

  auto& values = run.vector.entries;
  values.resize(static_cast<std::size_t>(horizon) + 1);
  values[0] = 0;
  std::size_t j = 0;
  Value done = 0;  // units of order[j] already scheduled
  for (std::size_t k = 1; k < values.size(); ++k) {
    while (j < n) {
      if (order[j].p - done > 0 && suffix[group_of[j]] > 0) break;
      run.processed[j] = done;
      ++j;
      done = 0;
    }
    if (j == n) {
      values[k] = values[k - 1];
      continue;
    }
    values[k] = values[k - 1] + Rational(order[j].w, order[j].p);
    values[k].canonicalize();
    ++done;
    const std::size_t gi = group_of[j];
    for (std::size_t i = gi; i < groups; ++i) {
      --slack[i];
      --suffix[i];
    }
    for (std::size_t i = gi; i-- > 0;) {
      suffix[i] = std::min(slack[i], suffix[i + 1]);
    }
  }
  if (j < n) run.processed[j] = done;
  return run;
}

FractionalSolutionVector fractional_solution_vector(std::span<const Job> jobs) {
  return fractional_run(jobs).vector;
}

bool fractional_gap_check(const FractionalSolutionVector& frac,
                          const SolutionVector& integral, std::size_t d_hash,
                          Value w_max) {
  if (frac.size() != integral.size()) {
    throw PreconditionError("fractional vector has length " +
                            std::to_string(frac.size()) + ", integral has " +
                            std::to_string(integral.size()));
  }
  const Rational bound(static_cast<long>(d_hash) * w_max);
  for (std::size_t k = 0; k < frac.size(); ++k) {
    const Rational gap = frac[k] - Rational(integral[k]);
    if (gap < 0 || gap > bound) return false;
  }
  return true;
}

}  // namespace wtardy
