#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "tardy/model.hpp"
#include "tardy/rng.hpp"
#include "tardy/selftest.hpp"

using namespace tardy;

TEST_CASE("build_instance groups by due date") {
  JobInstance inst = build_instance({{2, 2}, {2, 2}, {3, 7}});
  CHECK(inst.n() == 3);
  CHECK(inst.total_p == 7);
  CHECK(inst.d_sharp() == 2);
  CHECK(inst.distinct_due_sum == 9);
  CHECK(inst.groups[0].due == 2);
  CHECK(inst.groups[0].proc_times == std::vector<std::int64_t>{2, 2});
  CHECK(inst.groups[1].due == 7);
  CHECK(inst.groups[1].proc_times == std::vector<std::int64_t>{3});
}

TEST_CASE("build_instance singleton") {
  JobInstance inst = build_instance({{5, 9}});
  CHECK(inst.total_p == 5);
  CHECK(inst.d_sharp() == 1);
  CHECK(inst.groups[0].due == 9);
}

TEST_CASE("build_instance keeps duplicate processing times and sorts groups") {
  JobInstance inst = build_instance({{1, 3}, {4, 3}, {2, 8}});
  CHECK(inst.total_p == 7);
  CHECK(inst.distinct_due_sum == 11);
  CHECK(inst.groups[0].proc_times == std::vector<std::int64_t>{1, 4});
  CHECK(inst.groups[1].proc_times == std::vector<std::int64_t>{2});
}

TEST_CASE("build_instance rejects invalid jobs") {
  CHECK_THROWS_AS(build_instance({}), std::invalid_argument);
  CHECK_THROWS_AS(build_instance({{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_instance({{-2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_instance({{2, -1}}), std::invalid_argument);
  const std::int64_t big = std::int64_t{1} << 62;
  CHECK_THROWS_AS(build_instance({{big, 3}, {big, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(build_instance({{2, big + 1}}), std::invalid_argument);
}

TEST_CASE("edd schedule from early set") {
  JobInstance inst = build_instance({{2, 2}, {2, 2}, {3, 7}});
  CHECK(edd_schedule_from_early_set(inst, {1, 3}) == std::pair{true, std::int64_t{2}});
  CHECK(edd_schedule_from_early_set(inst, {1, 2, 3}) == std::pair{false, std::int64_t{0}});
  CHECK(edd_schedule_from_early_set(inst, {}) == std::pair{true, std::int64_t{7}});
}

TEST_CASE("verify_result") {
  JobInstance inst = build_instance({{2, 2}, {2, 2}, {3, 7}});
  ScheduleResult good{2, std::vector<std::size_t>{1, 3}, "x", 0.0};
  CHECK(verify_result(inst, good));
  ScheduleResult bad_objective{3, std::vector<std::size_t>{1, 3}, "x", 0.0};
  CHECK_FALSE(verify_result(inst, bad_objective));
  ScheduleResult all_tardy{7, std::vector<std::size_t>{}, "x", 0.0};
  CHECK(verify_result(inst, all_tardy));
  ScheduleResult no_cert{2, std::nullopt, "x", 0.0};
  CHECK_FALSE(verify_result(inst, no_cert));
}

TEST_CASE("grouping round-trip reproduces the job multiset") {
  SplitMix64 rng(31);
  for (int t = 0; t < 50; ++t) {
    std::vector<Job> jobs = random_tiny_instance(rng, 12, 9, 30);
    JobInstance inst = build_instance(jobs);
    std::vector<std::pair<std::int64_t, std::int64_t>> original, regrouped;
    for (const Job& j : jobs) original.push_back({j.p, j.d});
    for (const DueGroup& g : inst.groups)
      for (std::int64_t p : g.proc_times) regrouped.push_back({p, g.due});
    std::sort(original.begin(), original.end());
    std::sort(regrouped.begin(), regrouped.end());
    CHECK(original == regrouped);
    for (std::size_t i = 1; i < inst.groups.size(); ++i)
      CHECK(inst.groups[i - 1].due < inst.groups[i].due);
  }
}

namespace {

// Minimum objective over all n! permutations, simulated directly.
std::int64_t permutation_optimum(const JobInstance& inst) {
  std::vector<std::size_t> perm(inst.n());
  std::iota(perm.begin(), perm.end(), std::size_t{1});
  std::int64_t best = inst.total_p;
  do {
    std::int64_t clock = 0, tardy = 0;
    for (std::size_t idx : perm) {
      const Job& j = inst.jobs[idx - 1];
      clock += j.p;
      if (clock > j.d) tardy += j.p;
    }
    best = std::min(best, tardy);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::int64_t early_set_optimum(const JobInstance& inst) {
  std::int64_t best = inst.total_p;
  for (std::uint32_t mask = 0; mask < (1u << inst.n()); ++mask) {
    std::vector<std::size_t> early;
    for (std::size_t i = 1; i <= inst.n(); ++i)
      if (mask >> (i - 1) & 1u) early.push_back(i);
    auto [feasible, objective] = edd_schedule_from_early_set(inst, early);
    if (feasible) best = std::min(best, objective);
  }
  return best;
}

}  // namespace

TEST_CASE("early-set optimum matches the permutation optimum") {
  SplitMix64 rng(77);
  for (int t = 0; t < 60; ++t) {
    std::vector<Job> jobs = random_tiny_instance(rng, 7, 9, 25);
    JobInstance inst = build_instance(jobs);
    CHECK(early_set_optimum(inst) == permutation_optimum(inst));
  }
  // A handful of full n = 8 sweeps.
  for (int t = 0; t < 8; ++t) {
    std::vector<Job> jobs = random_tiny_instance(rng, 8, 9, 30);
    while (jobs.size() < 8) jobs.push_back({rng.range(1, 9), rng.range(0, 30)});
    JobInstance inst = build_instance(jobs);
    CHECK(early_set_optimum(inst) == permutation_optimum(inst));
  }
}

TEST_CASE("objective accounting on feasible early sets") {
  SplitMix64 rng(123);
  for (int t = 0; t < 40; ++t) {
    std::vector<Job> jobs = random_tiny_instance(rng, 8, 9, 40);
    JobInstance inst = build_instance(jobs);
    const std::uint32_t mask = static_cast<std::uint32_t>(rng.below(1u << inst.n()));
    std::vector<std::size_t> early;
    std::int64_t early_p = 0;
    for (std::size_t i = 1; i <= inst.n(); ++i) {
      if (mask >> (i - 1) & 1u) {
        early.push_back(i);
        early_p += inst.jobs[i - 1].p;
      }
    }
    auto [feasible, objective] = edd_schedule_from_early_set(inst, early);
    CHECK(objective == inst.total_p - early_p);
    auto again = edd_schedule_from_early_set(inst, early);
    CHECK(again.first == feasible);
    CHECK(again.second == objective);
  }
}
