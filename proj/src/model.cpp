#include "tardy/model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tardy {

namespace {
constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 62;
}

JobInstance build_instance(std::vector<Job> jobs) {
  if (jobs.empty()) throw std::invalid_argument("build_instance: no jobs");
  JobInstance inst;
  std::int64_t total = 0;
  for (const Job& j : jobs) {
    if (j.p < 1) throw std::invalid_argument("build_instance: processing time must be >= 1");
    if (j.d < 0) throw std::invalid_argument("build_instance: due date must be >= 0");
    if (j.d > kMaxMagnitude) throw std::invalid_argument("build_instance: due date exceeds 2^62");
    if (j.p > kMaxMagnitude || total > kMaxMagnitude - j.p)
      throw std::invalid_argument("build_instance: total processing time exceeds 2^62");
    total += j.p;
  }

  std::map<std::int64_t, DueGroup> by_due;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    DueGroup& g = by_due[jobs[i].d];
    g.due = jobs[i].d;
    g.proc_times.push_back(jobs[i].p);
    g.job_indices.push_back(i + 1);
  }

  inst.jobs = std::move(jobs);
  inst.total_p = total;
  for (auto& [due, group] : by_due) {
    inst.distinct_due_sum += due;
    inst.groups.push_back(std::move(group));
  }
  return inst;
}

std::pair<bool, std::int64_t> edd_schedule_from_early_set(
    const JobInstance& inst, const std::vector<std::size_t>& early) {
  std::vector<std::size_t> order = early;
  for (std::size_t idx : order)
    if (idx < 1 || idx > inst.n())
      throw std::invalid_argument("edd_schedule_from_early_set: job index out of range");
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Job& ja = inst.jobs[a - 1];
    const Job& jb = inst.jobs[b - 1];
    return ja.d != jb.d ? ja.d < jb.d : a < b;
  });

  bool feasible = true;
  std::int64_t clock = 0;
  std::int64_t early_total = 0;
  for (std::size_t idx : order) {
    const Job& j = inst.jobs[idx - 1];
    clock += j.p;
    early_total += j.p;
    if (clock > j.d) feasible = false;
  }
  return {feasible, inst.total_p - early_total};
}

bool verify_result(const JobInstance& inst, const ScheduleResult& result) {
  if (!result.early_set) return false;
  auto [feasible, objective] = edd_schedule_from_early_set(inst, *result.early_set);
  return feasible && objective == result.objective;
}

}  // namespace tardy
