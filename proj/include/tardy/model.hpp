#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tardy {

// One job: processing time p >= 1 and due date d >= 0, in time units.
struct Job {
  std::int64_t p = 0;
  std::int64_t d = 0;

  friend bool operator==(const Job&, const Job&) = default;
};

// Jobs sharing one due date, with the multiset of their processing
// times (duplicates preserved).
struct DueGroup {
  std::int64_t due = 0;
  std::vector<std::int64_t> proc_times;        // multiset X_i
  std::vector<std::size_t> job_indices;        // 1-based, ascending
};

// A validated problem instance plus the derived quantities every
// solver needs: P (total processing time), the due-date groups sorted
// ascending, and D (sum of the distinct due dates).
struct JobInstance {
  std::vector<Job> jobs;
  std::vector<DueGroup> groups;
  std::int64_t total_p = 0;      // P
  std::int64_t distinct_due_sum = 0;  // D

  std::size_t n() const { return jobs.size(); }
  std::size_t d_sharp() const { return groups.size(); }
  std::int64_t max_due() const { return groups.empty() ? 0 : groups.back().due; }
};

struct ScheduleResult {
  std::int64_t objective = 0;                       // total p of tardy jobs
  std::optional<std::vector<std::size_t>> early_set;  // 1-based job indices
  std::string algorithm;
  double wall_time_ms = 0.0;
};

// Groups the jobs by due date and validates the instance. Throws
// std::invalid_argument on an empty job list, p < 1, d < 0, or totals
// beyond 2^62 (P and max d must leave headroom for downstream
// arithmetic).
JobInstance build_instance(std::vector<Job> jobs);

// Schedules `early` (1-based indices) in non-decreasing due-date
// order, ties by index, starting at time 0. Returns whether every
// early job completes by its due date, and the objective
// P - sum of early processing times (reported even when infeasible).
std::pair<bool, std::int64_t> edd_schedule_from_early_set(
    const JobInstance& inst, const std::vector<std::size_t>& early);

// True iff result.early_set is present, feasible, and its objective
// matches result.objective.
bool verify_result(const JobInstance& inst, const ScheduleResult& result);

}  // namespace tardy
