// Acceptance suite: one pass/fail line per criterion, exit 0 only if
// every gating criterion holds.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "tardy/baseline.hpp"
#include "tardy/bench.hpp"
#include "tardy/instance_io.hpp"
#include "tardy/sched.hpp"
#include "tardy/selftest.hpp"

using namespace tardy;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string suite_summary(const std::vector<SuiteResult>& suites) {
  std::string s;
  for (const SuiteResult& r : suites) {
    if (!s.empty()) s += "; ";
    s += r.name + " " + std::to_string(r.passed) + "/" +
         std::to_string(r.passed + r.failed);
    if (!r.ok()) s += " (first failing seed " + std::to_string(r.first_failing_seed) + ")";
  }
  return s;
}

bool all_ok(const std::vector<SuiteResult>& suites) {
  for (const SuiteResult& r : suites)
    if (!r.ok()) return false;
  return true;
}

JobInstance desk_scale_instance() {
  GenParams params;
  params.n = 3125;
  params.pmax = 63;
  params.dsharp = 32;
  params.seed = 20240807;
  params.family = GenFamily::kUniform;
  std::vector<Job> jobs = generate_instance(params);
  std::int64_t total = 0;
  for (const Job& j : jobs) total += j.p;
  // Patch the final job so P is exactly 10^5.
  const std::int64_t target = 100000;
  while (total > target - 1) {
    total -= jobs.back().p;
    jobs.pop_back();
  }
  jobs.push_back(Job{target - total, jobs.front().d});
  JobInstance inst = build_instance(jobs);
  return inst;
}

}  // namespace

int main() {
  // 1. Four-way solver agreement on 1000 seeded tiny instances.
  {
    const auto start = Clock::now();
    std::vector<SuiteResult> suites = {selftest_fourway(1000)};
    const double secs = seconds_since(start);
    report(1, all_ok(suites) && secs < 60.0,
           suite_summary(suites) + ", " + std::to_string(secs) + " s (limit 60)");
  }

  // 2. Mid-scale three-way agreement on 200 instances.
  {
    const auto start = Clock::now();
    std::vector<SuiteResult> suites = {selftest_midscale(200)};
    const double secs = seconds_since(start);
    report(2, all_ok(suites) && secs < 120.0,
           suite_summary(suites) + ", " + std::to_string(secs) + " s (limit 120)");
  }

  // 3. Sumset and subset-sum differential oracles.
  {
    std::vector<SuiteResult> suites = {selftest_sumset(500, 4096),
                                       selftest_subset_sums(500, 16, 50)};
    report(3, all_ok(suites), suite_summary(suites));
  }

  // 4. (max,min)-convolution oracle: exhaustive tiny + 300 seeded pairs
  //    up to length 4097.
  {
    std::vector<SuiteResult> suites = {selftest_maxmin_exhaustive(4, 6, 100),
                                       selftest_maxmin_random(300, 4097)};
    report(4, all_ok(suites), suite_summary(suites));
  }

  // 5. Skewed-convolution oracle: exhaustive tiny + 300 seeded pairs up
  //    to length 2049; level-approximation assertions are live in this
  //    build and run on every fast call.
  {
    std::vector<SuiteResult> suites = {selftest_skewed_exhaustive(4, 5, 100),
                                       selftest_skewed_random(300, 2049),
                                       selftest_refine_robustness(60, 160)};
    report(5, all_ok(suites), suite_summary(suites));
  }

  // 6. Reduction bridges.
  {
    std::vector<SuiteResult> suites = {selftest_maxmin_bridge(100, 512),
                                       selftest_skew_combine(200, 512)};
    report(6, all_ok(suites), suite_summary(suites));
  }

  // 7. Single due date special case against an independent route.
  {
    std::vector<SuiteResult> suites = {selftest_single_due(100)};
    report(7, all_ok(suites), suite_summary(suites));
  }

  // 8. Scaling evidence (informational, never gates).
  {
    std::vector<std::size_t> lengths = {1 << 10, 1 << 11, 1 << 12, 1 << 13, 1 << 14};
    std::vector<ScalingSeries> series = run_conv_scaling(lengths, 1234);
    std::string detail;
    double maxmin_fast = 0, skewed_fast = 0;
    for (const ScalingSeries& s : series) {
      if (s.algorithm == "maxmin_fast") maxmin_fast = s.slope;
      if (s.algorithm == "skewed_fast") skewed_fast = s.slope;
      detail += s.algorithm + " slope " + std::to_string(s.slope) + "; ";
    }
    const bool within = maxmin_fast <= 1.8 && skewed_fast <= 1.85;
    std::printf("[INFO] criterion 8 (non-gating): %s%s\n", detail.c_str(),
                within ? "within bounds" : "outside bounds");
    std::fflush(stdout);
  }

  // 9. Desk-scale smoke: P = 10^5, D# = 32, each fast scheduler under
  //    five minutes with objectives matching the baseline.
  {
    JobInstance inst = desk_scale_instance();
    const auto t0 = Clock::now();
    ScheduleResult lm = lawler_moore(inst, /*want_certificate=*/false);
    const double lm_secs = seconds_since(t0);
    const auto t1 = Clock::now();
    ScheduleResult su = sumset_scheduler(inst);
    const double su_secs = seconds_since(t1);
    const auto t2 = Clock::now();
    ScheduleResult cv = conv_scheduler(inst);
    const double cv_secs = seconds_since(t2);

    const bool pass = inst.total_p == 100000 && inst.d_sharp() == 32 &&
                      su.objective == lm.objective && cv.objective == lm.objective &&
                      su_secs < 300.0 && cv_secs < 300.0;
    report(9, pass,
           "P=" + std::to_string(inst.total_p) + " D#=" + std::to_string(inst.d_sharp()) +
               " objective=" + std::to_string(lm.objective) + " lm " +
               std::to_string(lm_secs) + " s, sumset " + std::to_string(su_secs) +
               " s, conv " + std::to_string(cv_secs) + " s (limit 300 each)");
  }

  if (g_failures == 0) {
    std::printf("acceptance: all gating criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
