#pragma once

#include "tardy/model.hpp"

namespace tardy {

// Exhaustive search over early sets (EDD order within each set).
// Rejects n > 25. The certificate is the lexicographically smallest
// optimal early set.
ScheduleResult brute_force(const JobInstance& inst);

// Pseudo-polynomial DP over achievable early-processing-time totals:
// jobs in EDD order; S <- S union {s + p_j : s in S, s + p_j <= d_j};
// answer P - max(S).  When want_certificate is set, one bit per
// (job, sum) of back-pointer state is kept and an optimal early set is
// recovered; otherwise memory stays at O(P) bits.
ScheduleResult lawler_moore(const JobInstance& inst, bool want_certificate = true);

}  // namespace tardy
