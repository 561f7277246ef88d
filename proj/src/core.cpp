#include "wtardy/core.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wtardy {

namespace {

Value checked_add(Value a, Value b, const char* what) {
  Value out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw InvalidInput(std::string("instance total overflows 64 bits: ") + what);
  }
  return out;
}

}  // namespace

Instance::Instance(std::vector<Job> jobs) : jobs_(std::move(jobs)) {
  if (jobs_.empty()) {
    throw InvalidInput("instance has no jobs");
  }
  std::set<JobId> seen;
  std::set<Value> due_dates;
  stats_.n = jobs_.size();
  for (const Job& j : jobs_) {
    if (!seen.insert(j.id).second) {
      throw InvalidInput("duplicate job id " + std::to_string(j.id));
    }
    if (j.p < 1 || j.w < 1 || j.d < 1) {
      throw InvalidInput("job " + std::to_string(j.id) +
                         ": p, w and d must be positive");
    }
    due_dates.insert(j.d);
    stats_.d_max = std::max(stats_.d_max, j.d);
    stats_.p_max = std::max(stats_.p_max, j.p);
    stats_.w_max = std::max(stats_.w_max, j.w);
    stats_.w_total = checked_add(stats_.w_total, j.w, "weights");
    stats_.p_total = checked_add(stats_.p_total, j.p, "processing times");
  }
  stats_.d_hash = due_dates.size();
}

DueDateGrouping group_by_due_date(const Instance& instance) {
  std::map<Value, std::vector<Job>> by_date;
  for (const Job& j : instance.jobs()) {
    by_date[j.d].push_back(j);
  }
  DueDateGrouping out;
  out.due_dates.reserve(by_date.size());
  out.groups.reserve(by_date.size());
  for (auto& [date, group] : by_date) {
    std::sort(group.begin(), group.end(),
              [](const Job& a, const Job& b) { return a.id < b.id; });
    out.due_dates.push_back(date);
    out.groups.push_back(std::move(group));
  }
  return out;
}

std::size_t InverseSolutionVector::max_finite_index() const {
  std::size_t best = 0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k] != kPosInf) best = k;
  }
  return best;
}

std::vector<Violation> validate_solution_vector(const SolutionVector& v) {
  std::vector<Violation> out;
  if (v.entries.empty()) {
    out.push_back({ViolationKind::kEmpty, 0, "vector is empty"});
    return out;
  }
  if (v[0] != 0) {
    out.push_back({ViolationKind::kNonzeroOrigin, 0, "entry 0 is not zero"});
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == kNegInf || v[k] == kPosInf) {
      out.push_back({ViolationKind::kSentinel, k,
                     "sentinel at " + std::to_string(k)});
    }
  }
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] < v[k - 1]) {
      out.push_back({ViolationKind::kNonMonotone, k,
                     "non-monotone at " + std::to_string(k)});
    }
  }
  return out;
}

std::vector<Violation> validate_inverse_solution_vector(
    const InverseSolutionVector& v) {
  std::vector<Violation> out;
  if (v.entries.empty()) {
    out.push_back({ViolationKind::kEmpty, 0, "vector is empty"});
    return out;
  }
  if (v[0] != 0) {
    out.push_back({ViolationKind::kNonzeroOrigin, 0, "entry 0 is not zero"});
  }
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] < v[k - 1]) {
      out.push_back({ViolationKind::kNonMonotone, k,
                     "non-monotone at " + std::to_string(k)});
    }
  }
  // Monotone already forces +inf to be a suffix.
  return out;
}

SolutionVector resize_to_horizon(const SolutionVector& v, std::size_t horizon) {
  std::vector<Value> out(v.entries.begin(),
                         v.entries.begin() +
                             static_cast<std::ptrdiff_t>(
                                 std::min(v.size(), horizon + 1)));
  out.resize(horizon + 1, v.entries.back());
  return SolutionVector(std::move(out));
}

Value total_weight(std::span<const Job> jobs) {
  Value s = 0;
  for (const Job& j : jobs) s += j.w;
  return s;
}

}  // namespace wtardy
