#include "doctest.h"
#include "test_support.hpp"
#include "wtardy/core.hpp"

using namespace wtardy;

TEST_CASE("instance statistics") {
  Instance in({{0, 2, 3, 5}, {1, 4, 1, 5}, {2, 1, 7, 2}});
  const auto& s = in.stats();
  CHECK(s.n == 3);
  CHECK(s.d_max == 5);
  CHECK(s.d_hash == 2);
  CHECK(s.p_max == 4);
  CHECK(s.w_max == 7);
  CHECK(s.w_total == 11);
  CHECK(s.d_hash <= std::min<std::size_t>(s.n, static_cast<std::size_t>(s.d_max)));
}

TEST_CASE("instance rejects invalid jobs") {
  CHECK_THROWS_AS(Instance(std::vector<Job>{}), InvalidInput);
  CHECK_THROWS_AS(Instance({{0, 0, 1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Instance({{0, 1, 0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Instance({{0, 1, 1, -3}}), InvalidInput);
  CHECK_THROWS_AS(Instance({{4, 1, 1, 1}, {4, 2, 2, 2}}), InvalidInput);
  CHECK_THROWS_AS(Instance({{0, 1, kPosInf, 1}, {1, 1, kPosInf, 1}}), InvalidInput);
  // p > d is allowed; such a job is simply never early.
  CHECK_NOTHROW(Instance({{0, 9, 1, 2}}));
}

TEST_CASE("group_by_due_date") {
  SUBCASE("mixed") {
    Instance in({{1, 1, 1, 3}, {2, 1, 1, 1}, {3, 1, 1, 3}});
    const auto g = group_by_due_date(in);
    REQUIRE(g.due_dates == std::vector<Value>{1, 3});
    REQUIRE(g.groups.size() == 2);
    CHECK(g.groups[0].size() == 1);
    CHECK(g.groups[0][0].id == 2);
    CHECK(g.groups[1][0].id == 1);
    CHECK(g.groups[1][1].id == 3);
  }
  SUBCASE("single due date") {
    Instance in({{0, 1, 1, 4}, {1, 2, 2, 4}, {2, 3, 3, 4}});
    const auto g = group_by_due_date(in);
    CHECK(g.due_dates.size() == 1);
    CHECK(g.groups[0].size() == 3);
  }
  SUBCASE("all distinct") {
    Instance in({{0, 1, 1, 9}, {1, 1, 1, 2}, {2, 1, 1, 5}});
    const auto g = group_by_due_date(in);
    CHECK(g.due_dates == std::vector<Value>{2, 5, 9});
    for (const auto& grp : g.groups) CHECK(grp.size() == 1);
  }
  SUBCASE("partition property") {
    testing::Gen gen(17);
    for (int rep = 0; rep < 200; ++rep) {
      const auto in = testing::random_instance(gen, 15, 20, 6, 6);
      const auto g = group_by_due_date(in);
      std::vector<Job> all;
      for (std::size_t i = 0; i < g.groups.size(); ++i) {
        if (i > 0) CHECK(g.due_dates[i - 1] < g.due_dates[i]);
        for (const Job& j : g.groups[i]) {
          CHECK(j.d == g.due_dates[i]);
          all.push_back(j);
        }
      }
      std::sort(all.begin(), all.end(),
                [](const Job& a, const Job& b) { return a.id < b.id; });
      CHECK(all == in.jobs());
    }
  }
}

TEST_CASE("validate_solution_vector") {
  CHECK(validate_solution_vector(SolutionVector({0, 2, 5})).empty());

  auto v = validate_solution_vector(SolutionVector({1, 2}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::kNonzeroOrigin);

  v = validate_solution_vector(SolutionVector({0, 3, 2}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::kNonMonotone);
  CHECK(v[0].index == 2);

  CHECK(validate_solution_vector(SolutionVector()).at(0).kind == ViolationKind::kEmpty);
}

TEST_CASE("inverse vector shape") {
  InverseSolutionVector ok({0, 2, 5, kPosInf, kPosInf});
  CHECK(validate_inverse_solution_vector(ok).empty());
  CHECK(ok.max_finite_index() == 2);
  CHECK_FALSE(validate_inverse_solution_vector(InverseSolutionVector({0, kPosInf, 3})).empty());
}

TEST_CASE("resize_to_horizon repeats the last entry") {
  const SolutionVector v({0, 1, 4});
  CHECK(resize_to_horizon(v, 4) == SolutionVector({0, 1, 4, 4, 4}));
  CHECK(resize_to_horizon(v, 1) == SolutionVector({0, 1}));
}

TEST_CASE("sentinel arithmetic saturates") {
  CHECK(add_maxplus(kNegInf, 5) == kNegInf);
  CHECK(add_maxplus(3, 5) == 8);
  CHECK(add_minplus(kPosInf, -2) == kPosInf);
  CHECK(add_minplus(1, 2) == 3);
}
