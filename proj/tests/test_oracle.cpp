#include "doctest.h"
#include "test_support.hpp"
#include "wtardy/oracle.hpp"

using namespace wtardy;

TEST_CASE("edd_feasible") {
  const std::vector<Job> ok{{0, 2, 1, 2}, {1, 2, 1, 4}};
  CHECK(edd_feasible(ok));
  const std::vector<Job> late{{0, 2, 1, 2}, {1, 2, 1, 3}};
  CHECK_FALSE(edd_feasible(late));
  // Input order does not matter.
  const std::vector<Job> shuffled{{1, 2, 1, 4}, {0, 2, 1, 2}};
  CHECK(edd_feasible(shuffled));
  CHECK(edd_feasible(std::vector<Job>{}));
}

TEST_CASE("brute_force examples") {
  const Instance a({{0, 2, 3, 2}, {1, 2, 5, 3}});
  const auto ra = brute_force(a);
  CHECK(ra.min_tardy_weight == 3);
  CHECK(ra.max_early_weight == 5);
  REQUIRE(ra.early_set);
  CHECK(*ra.early_set == std::vector<JobId>{1});

  const Instance b({{0, 1, 2, 1}, {1, 1, 2, 2}});
  CHECK(brute_force(b).min_tardy_weight == 0);

  const Instance c({{0, 5, 4, 3}});
  CHECK(brute_force(c).min_tardy_weight == 4);
}

TEST_CASE("brute_force respects the cap") {
  testing::Gen g(51);
  const Instance in(testing::random_jobs(g, 6, 10, 3, 3));
  CHECK_THROWS_AS(brute_force(in, 5), InvalidInput);
  CHECK_THROWS_AS(brute_force_all_orders(in, 5), InvalidInput);
  CHECK_NOTHROW(brute_force(in, 6));
}

TEST_CASE("early sets from brute force are feasible and optimal in weight") {
  testing::Gen g(52);
  for (int rep = 0; rep < 300; ++rep) {
    const auto in = testing::random_instance(g, 10, 25, 8, 8);
    const auto r = brute_force(in);
    REQUIRE(r.early_set);
    std::vector<Job> early;
    for (JobId id : *r.early_set) early.push_back(in.jobs()[static_cast<std::size_t>(id)]);
    CHECK(edd_feasible(early));
    CHECK(total_weight(early) == r.max_early_weight);
    CHECK(r.max_early_weight + r.min_tardy_weight == in.stats().w_total);
  }
}

TEST_CASE("EDD restriction loses nothing") {
  testing::Gen g(53);
  for (int rep = 0; rep < 100; ++rep) {
    const auto in = testing::random_instance(g, 6, 15, 6, 6);
    CHECK(brute_force_all_orders(in) == brute_force(in).max_early_weight);
  }
}

TEST_CASE("brute_force_vector") {
  const std::vector<Job> jobs{{0, 2, 3, 2}, {1, 2, 5, 3}};
  // Both jobs early needs length 4 > 3.
  CHECK(brute_force_vector(jobs, 4) == SolutionVector({0, 0, 5, 5, 5}));
  const Instance in(jobs);
  CHECK(prefix_vector_semantics_check(in, 1, SolutionVector({0, 0, 3})));
  CHECK_FALSE(prefix_vector_semantics_check(in, 1, SolutionVector({0, 0, 4})));
  CHECK(prefix_vector_semantics_check(in, 2, SolutionVector({0, 0, 5, 5})));
  CHECK_FALSE(prefix_vector_semantics_check(in, 3, SolutionVector({0})));
}
