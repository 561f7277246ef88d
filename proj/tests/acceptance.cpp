// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "test_support.hpp"
#include "wtardy/bench.hpp"
#include "wtardy/builders.hpp"
#include "wtardy/oracle.hpp"
#include "wtardy/prediction.hpp"
#include "wtardy/solvers.hpp"

using namespace wtardy;
using testing::Gen;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const Outcome& o) {
  std::printf("criterion %d (%s): %s  %s\n", id, name, o.pass ? "PASS" : "FAIL",
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::vector<Job> jobs_with_ids(const Instance& in, const std::vector<JobId>& ids) {
  std::vector<Job> out;
  for (JobId id : ids) out.push_back(in.jobs()[static_cast<std::size_t>(id)]);
  return out;
}

/// Exact accumulator pairs (A, B) and fractional vectors for every merge of
/// the due-date fold, iteration index included.
struct Merge {
  SolutionVector a, b;
  FractionalSolutionVector a_frac, b_frac, c_frac;
  std::size_t iteration;
};

std::vector<Merge> merges_of(const Instance& in) {
  const auto grouping = group_by_due_date(in);
  std::vector<Merge> out;
  std::vector<Job> prefix = grouping.groups[0];
  SolutionVector acc = build_solution_vector_dp(prefix, grouping.due_dates[0]);
  for (std::size_t i = 1; i < grouping.groups.size(); ++i) {
    const auto& group = grouping.groups[i];
    std::vector<Job> all(prefix);
    all.insert(all.end(), group.begin(), group.end());
    Merge m{acc,
            build_solution_vector_dp(group, grouping.due_dates[i]),
            fractional_solution_vector(prefix),
            fractional_solution_vector(group),
            fractional_solution_vector(all),
            i + 1};
    acc = convolve_naive(m.a, m.b);
    out.push_back(std::move(m));
    prefix = std::move(all);
  }
  return out;
}

Instance small_instance(Gen& g, std::size_t n_max, Value d_max, Value p_max, Value w_max) {
  return testing::random_instance(g, n_max, d_max, p_max, w_max);
}

// Criteria 1 and 8 share the same runs.
std::pair<Outcome, Outcome> oracle_and_reconstruction() {
  Gen g(1001);
  Outcome eq, rec;
  std::size_t instances = 0, reconstructions = 0;
  for (; instances < 10000; ++instances) {
    const Instance in = small_instance(g, 12, 30, 10, 10);
    const Value expected = brute_force(in).min_tardy_weight;
    for (SolverPolicy p : kConcretePolicies) {
      SolveOptions opt;
      opt.policy = p;
      opt.reconstruct = true;
      opt.inverse_fallback = false;
      const SolveResult r = solve(in, opt);
      if (r.min_tardy_weight != expected && eq.pass) {
        eq.pass = false;
        eq.detail = "first mismatch: policy " + std::string(policy_name(p)) +
                    " on instance " + std::to_string(instances);
      }
      ++reconstructions;
      const auto early = jobs_with_ids(in, r.early_set.value());
      if ((!edd_feasible(early) || total_weight(early) != r.max_early_weight) && rec.pass) {
        rec.pass = false;
        rec.detail = "invalid early set on instance " + std::to_string(instances);
      }
    }
  }
  if (eq.pass) eq.detail = std::to_string(instances) + " instances x 5 policies";
  if (rec.pass) rec.detail = std::to_string(reconstructions) + " early sets checked";
  return {eq, rec};
}

Outcome engine_equivalence() {
  Gen g(1002);
  std::size_t sstep = 0, full = 0, predicted = 0;
  Outcome o;
  auto fail = [&](const std::string& what) {
    if (o.pass) o.detail = "first mismatch: " + what;
    o.pass = false;
  };

  while (sstep < 4000) {
    const std::size_t s = g.index(16) + 1;
    const auto alignment = g.coin() ? StepAlignment::kFloor : StepAlignment::kCeil;
    std::size_t blen = g.index(256) + 1;
    if (alignment == StepAlignment::kCeil) blen = s * g.index(255 / s + 1) + 1;
    auto b = testing::random_sstep_concave(g, blen, s, 50);
    if (alignment == StepAlignment::kCeil) {
      std::vector<Value> c(blen);
      for (std::size_t l = 0; l < blen; ++l) c[l] = b[((l + s - 1) / s) * s];
      b = c;
    }
    b[0] = 0;
    for (std::size_t l = 1; l < blen; ++l) b[l] = std::max(b[l], b[l - 1]);
    if (!is_sstep_concave(b, s, alignment)) continue;
    const auto a = testing::random_solution_vector(g, g.index(256) + 1, 20);
    const SolutionVector bv(b);
    const auto got = alignment == StepAlignment::kFloor
                         ? convolve_sstep_concave(a, bv, s)
                         : convolve(a, bv, SStepConcaveEngine{s, alignment});
    if (got != convolve_naive(a, bv)) fail("s-step, s=" + std::to_string(s));
    ++sstep;
  }

  for (; full < 3000; ++full) {
    const auto a = testing::random_solution_vector(g, g.index(256) + 1, 20);
    const auto b = testing::random_solution_vector(g, g.index(256) + 1, 20);
    RangeIntervals r;
    r.intervals.assign(a.size(), Interval{0, b.size() - 1});
    if (convolve_with_ranges(a, b, r) != convolve_naive(a, b)) fail("full-width ranges");
  }

  while (predicted < 3000) {
    const Instance in = small_instance(g, 20, 255, 30, 10);
    for (const Merge& m : merges_of(in)) {
      const auto r = compute_range_intervals(m.a_frac, m.b_frac, m.c_frac, m.iteration,
                                             in.stats().w_max);
      if (convolve_with_ranges(m.a, m.b, r) != convolve_naive(m.a, m.b)) {
        fail("predicted ranges, iteration " + std::to_string(m.iteration));
      }
      ++predicted;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(sstep + full + predicted) + " pairs (" +
               std::to_string(sstep) + " s-step, " + std::to_string(full) +
               " full-width, " + std::to_string(predicted) + " predicted ranges)";
  }
  return o;
}

Outcome fractional_gap() {
  Gen g(1003);
  Outcome o;
  std::size_t i = 0;
  for (; i < 1000; ++i) {
    const Instance in = small_instance(g, 10, 30, 10, 10);
    const auto integral = brute_force_vector(in.jobs(), in.stats().d_max);
    if (!fractional_gap_check(fractional_solution_vector(in), integral, in.stats().d_hash,
                              in.stats().w_max)) {
      o.pass = false;
      o.detail = "bound fails on instance " + std::to_string(i);
      return o;
    }
  }
  o.detail = std::to_string(i) + " instances";
  return o;
}

Outcome range_conditions() {
  Gen g(1004);
  Outcome o;
  std::size_t iterations = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    const Instance in = small_instance(g, 12, 40, 10, 10);
    for (const Merge& m : merges_of(in)) {
      const auto r = compute_range_intervals(m.a_frac, m.b_frac, m.c_frac, m.iteration,
                                             in.stats().w_max);
      const auto v = validate_range_intervals(m.a, m.b, r);
      ++iterations;
      if (!v.empty() && o.pass) {
        o.pass = false;
        o.detail = "instance " + std::to_string(i) + ", iteration " +
                   std::to_string(m.iteration) + ": " + v.front().message;
      }
    }
  }
  if (o.pass) {
    o.detail = "1000 instances, " + std::to_string(iterations) + " merge iterations";
  }
  return o;
}

Outcome edd_sufficiency() {
  Gen g(1005);
  Outcome o;
  for (std::size_t i = 0; i < 500; ++i) {
    const Instance in = small_instance(g, 8, 30, 10, 10);
    if (brute_force_all_orders(in, 8) != brute_force(in).max_early_weight) {
      o.pass = false;
      o.detail = "orders beat EDD on instance " + std::to_string(i);
      return o;
    }
  }
  o.detail = "500 instances";
  return o;
}

Outcome scaling() {
  BenchConfig cfg;
  cfg.policies = {SolverPolicy::kMaxPlusNaive};
  cfg.repetitions = 5;
  // Where the random due dates land moves the work by up to 2x per instance,
  // so the per-seed medians need a wide enough pool of seeds.
  cfg.seeds.clear();
  for (std::uint64_t s = 101; s <= 120; ++s) cfg.seeds.push_back(s);
  cfg.n = {200};
  cfg.d_hash = {4, 8, 16};
  cfg.d_max = {2000};
  cfg.p_max = {100};
  cfg.w_max = {10};

  BenchConfig warmup = cfg;
  warmup.seeds = {1};
  warmup.repetitions = 1;
  run_bench(warmup);

  const auto rows = run_bench(cfg);

  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
  };
  std::map<std::pair<std::size_t, std::uint64_t>, std::vector<double>> runs;
  for (const auto& r : rows) {
    runs[{r.params.d_hash, r.params.seed}].push_back(static_cast<double>(r.nanos));
  }
  std::map<std::size_t, std::vector<double>> per_dhash;
  for (const auto& [key, times] : runs) per_dhash[key.first].push_back(median(times));

  Outcome o;
  std::vector<double> medians;
  for (std::size_t dh : cfg.d_hash) medians.push_back(median(per_dhash[dh]));
  char buf[200];
  std::snprintf(buf, sizeof buf, "%zu seeds, medians %.2f / %.2f / %.2f ms",
                cfg.seeds.size(), medians[0] / 1e6,
                medians[1] / 1e6, medians[2] / 1e6);
  o.detail = buf;
  for (std::size_t i = 1; i < medians.size(); ++i) {
    const double ratio = medians[i] / medians[i - 1];
    std::snprintf(buf, sizeof buf, ", x%.2f", ratio);
    o.detail += buf;
    if (ratio < 1.5 || ratio > 3.0) o.pass = false;
  }
  return o;
}

Outcome builder_equivalence() {
  Gen g(1007);
  Outcome o;
  for (std::size_t i = 0; i < 5000; ++i) {
    const Value d = g.uniform(1, 64);
    const auto jobs = testing::random_group(g, g.index(32) + 1, d, 20, 10);
    const auto dp = build_solution_vector_dp(jobs, d);
    if (build_solution_vector_concave(jobs, d) != dp ||
        inverse_to_direct(build_inverse_solution_vector(jobs), d) != dp) {
      o.pass = false;
      o.detail = "builders disagree on group " + std::to_string(i);
      return o;
    }
  }
  o.detail = "5000 groups";
  return o;
}

template <class F>
Outcome guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return Outcome{false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

int main() {
  Outcome c1, c8;
  try {
    std::tie(c1, c8) = oracle_and_reconstruction();
  } catch (const std::exception& e) {
    c1 = c8 = Outcome{false, std::string("exception: ") + e.what()};
  }
  report(1, "oracle equivalence", c1);
  report(2, "engine equivalence", guarded(engine_equivalence));
  report(3, "fractional gap bound", guarded(fractional_gap));
  report(4, "range interval conditions", guarded(range_conditions));
  report(5, "EDD sufficiency", guarded(edd_sufficiency));
  report(6, "scaling in d_hash", guarded(scaling));
  report(7, "builder equivalence", guarded(builder_equivalence));
  report(8, "reconstruction validity", c8);
  return failures == 0 ? 0 : 1;
}
