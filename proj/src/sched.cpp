#include "tardy/sched.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "tardy/baseline.hpp"
#include "tardy/skewed.hpp"

namespace tardy {

namespace {

MVector trimmed_singleton_m(const DueGroup& g, std::int64_t total_p) {
  // A due date beyond P never binds (completions cannot exceed P), so
  // clamping keeps every convolution operand within P without changing
  // the sign of any start time, hence the objective.
  const std::int64_t due = std::min(g.due, total_p);
  SumSet ss = subset_sums(g.proc_times);
  const std::int64_t cap = std::min({ss.cap, due, total_p});
  MVector m(static_cast<std::size_t>(cap) + 1, ExtInt::neg_inf());
  for (std::int64_t x = 0; x <= cap; ++x)
    if (ss.contains(x)) m[static_cast<std::size_t>(x)] = ExtInt::finite(due - x);
  return m;
}

void drop_trailing_neg_inf(MVector& m) {
  std::size_t len = m.size();
  while (len > 1 && m[len - 1].is_neg_inf()) --len;
  m.resize(len);
}

}  // namespace

MVector singleton_m(const std::vector<std::int64_t>& proc_times, std::int64_t due,
                    std::int64_t total_p) {
  if (due < 0) throw std::invalid_argument("singleton_m: negative due date");
  SumSet ss = subset_sums(proc_times);
  MVector m(static_cast<std::size_t>(total_p) + 1, ExtInt::neg_inf());
  for (std::int64_t x = 0; x <= std::min(total_p, ss.cap); ++x)
    if (x <= due && ss.contains(x)) m[static_cast<std::size_t>(x)] = ExtInt::finite(due - x);
  return m;
}

ScheduleResult sumset_scheduler(const JobInstance& inst) {
  SumSet s = SumSet::of({0});
  for (const DueGroup& g : inst.groups) {
    s = sumset(s, subset_sums(g.proc_times));
    s.prune_above(std::min(g.due, inst.total_p));
  }
  ScheduleResult res;
  res.objective = inst.total_p - s.max_value();
  res.algorithm = "sumset";
  return res;
}

std::vector<SumSet> sumset_scheduler_trace(const JobInstance& inst) {
  std::vector<SumSet> states;
  SumSet s = SumSet::of({0});
  for (const DueGroup& g : inst.groups) {
    s = sumset(s, subset_sums(g.proc_times));
    s.prune_above(std::min(g.due, inst.total_p));
    states.push_back(s);
  }
  return states;
}

ScheduleResult conv_scheduler(const JobInstance& inst) {
  // Trailing -inf entries can never contribute a finite combination, so
  // vectors are kept trimmed to their achievable support; results are
  // still truncated to sums <= P.
  std::vector<MVector> vectors;
  for (const DueGroup& g : inst.groups) vectors.push_back(trimmed_singleton_m(g, inst.total_p));

  std::size_t padded = 1;
  while (padded < vectors.size()) padded <<= 1;
  while (vectors.size() < padded)
    vectors.push_back(MVector{ExtInt::pos_inf()});  // identity of the combine operator

  while (vectors.size() > 1) {
    std::vector<MVector> next;
    next.reserve(vectors.size() / 2);
    for (std::size_t i = 0; i + 1 < vectors.size(); i += 2) {
      MVector combined = skew_combine(vectors[i], vectors[i + 1]);
      if (combined.size() > static_cast<std::size_t>(inst.total_p) + 1)
        combined.resize(static_cast<std::size_t>(inst.total_p) + 1);
      drop_trailing_neg_inf(combined);
      next.push_back(std::move(combined));
    }
    vectors = std::move(next);
  }

  const MVector& m = vectors.front();
  std::int64_t best = 0;
  for (std::size_t x = 0; x < m.size(); ++x)
    if (m[x] >= ExtInt::finite(0)) best = static_cast<std::int64_t>(x);

  ScheduleResult res;
  res.objective = inst.total_p - best;
  res.algorithm = "conv";
  return res;
}

SolverChoice auto_choice(const JobInstance& inst, const CostModel& model) {
  const double p = static_cast<double>(inst.total_p);
  const double cost_lm = model.lawler_moore * p * static_cast<double>(inst.n());
  const double cost_sumset =
      model.sumset * std::min(p * static_cast<double>(inst.d_sharp()),
                              p + static_cast<double>(inst.distinct_due_sum));
  const double cost_conv = model.conv * std::pow(p, 1.75);

  SolverChoice best = SolverChoice::kSumset;
  double best_cost = cost_sumset;
  if (cost_lm < best_cost) {
    best = SolverChoice::kLawlerMoore;
    best_cost = cost_lm;
  }
  if (cost_conv < best_cost) best = SolverChoice::kConv;
  return best;
}

const char* solver_name(SolverChoice choice) {
  switch (choice) {
    case SolverChoice::kBrute: return "brute_force";
    case SolverChoice::kLawlerMoore: return "lawler_moore";
    case SolverChoice::kSumset: return "sumset";
    case SolverChoice::kConv: return "conv";
    case SolverChoice::kAuto: return "auto";
  }
  return "unknown";
}

ScheduleResult solve(const JobInstance& inst, SolverChoice choice, const CostModel& model) {
  if (choice == SolverChoice::kAuto) choice = auto_choice(inst, model);
  const auto start = std::chrono::steady_clock::now();
  ScheduleResult res;
  switch (choice) {
    case SolverChoice::kBrute: res = brute_force(inst); break;
    case SolverChoice::kLawlerMoore: res = lawler_moore(inst); break;
    case SolverChoice::kSumset: res = sumset_scheduler(inst); break;
    case SolverChoice::kConv: res = conv_scheduler(inst); break;
    case SolverChoice::kAuto: break;  // unreachable
  }
  const auto stop = std::chrono::steady_clock::now();
  res.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return res;
}

}  // namespace tardy
