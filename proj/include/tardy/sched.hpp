#pragma once

#include <cstdint>
#include <vector>

#include "tardy/extint.hpp"
#include "tardy/model.hpp"
#include "tardy/numseq.hpp"

namespace tardy {

// M-vector over total early processing time x: entry x is the latest
// start time from which some subset of the covered groups' jobs with
// total processing time exactly x runs early in an EDD schedule;
// -inf when no such subset exists.
using MVector = ExtVec;

// M-vector of a single due-date group, length total_p + 1:
// entry x = due - x when x is a subset sum of proc_times and x <= due.
MVector singleton_m(const std::vector<std::int64_t>& proc_times, std::int64_t due,
                    std::int64_t total_p);

// Sumset scheduler: S_0 = {0}; S_i = prune(S_{i-1} (+) SS(X_i), d^(i));
// objective P - max(S_last). Objective only, no certificate.
ScheduleResult sumset_scheduler(const JobInstance& inst);

// The pruned sets S_1..S_Dsharp, exposed for validation.
std::vector<SumSet> sumset_scheduler_trace(const JobInstance& inst);

// Convolution scheduler: singleton M-vectors per group, padded with
// identity vectors to a power of two, combined pairwise with
// skew_combine and truncated to sums <= P; objective P - max{x : M[x] >= 0}.
ScheduleResult conv_scheduler(const JobInstance& inst);

enum class SolverChoice { kBrute, kLawlerMoore, kSumset, kConv, kAuto };

// Calibration constants for the auto dispatcher's predicted costs.
struct CostModel {
  double lawler_moore = 1.0;
  double sumset = 1.0;
  double conv = 1.0;
};

// Predicted-cost argmin among {lawler_moore: P*n,
// sumset: min(P*D#, P+D), conv: P^(7/4)}; ties prefer sumset, then
// lawler_moore.
SolverChoice auto_choice(const JobInstance& inst, const CostModel& model = {});

// Dispatches to the chosen solver and records the algorithm id and
// wall time (solver execution only).
ScheduleResult solve(const JobInstance& inst, SolverChoice choice,
                     const CostModel& model = {});

const char* solver_name(SolverChoice choice);

}  // namespace tardy
