#include "tardy/baseline.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tardy/bitvec.hpp"

namespace tardy {

namespace {

bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::size_t> edd_order(const JobInstance& inst) {
  std::vector<std::size_t> order(inst.n());
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Job& ja = inst.jobs[a - 1];
    const Job& jb = inst.jobs[b - 1];
    return ja.d != jb.d ? ja.d < jb.d : a < b;
  });
  return order;
}

}  // namespace

ScheduleResult brute_force(const JobInstance& inst) {
  const std::size_t n = inst.n();
  if (n > 25) throw std::invalid_argument("brute_force: instance too large (n > 25)");

  const std::vector<std::size_t> order = edd_order(inst);
  std::int64_t best = inst.total_p;
  std::vector<std::size_t> best_set;

  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::int64_t clock = 0;
    std::int64_t early_total = 0;
    bool feasible = true;
    for (std::size_t idx : order) {
      if (!(mask >> (idx - 1) & 1u)) continue;
      const Job& j = inst.jobs[idx - 1];
      clock += j.p;
      early_total += j.p;
      if (clock > j.d) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    std::int64_t objective = inst.total_p - early_total;
    if (objective < best) {
      best = objective;
      best_set.clear();
      for (std::size_t i = 1; i <= n; ++i)
        if (mask >> (i - 1) & 1u) best_set.push_back(i);
    } else if (objective == best) {
      std::vector<std::size_t> cand;
      for (std::size_t i = 1; i <= n; ++i)
        if (mask >> (i - 1) & 1u) cand.push_back(i);
      if (lex_less(cand, best_set)) best_set = std::move(cand);
    }
  }

  ScheduleResult res;
  res.objective = best;
  res.early_set = std::move(best_set);
  res.algorithm = "brute_force";
  return res;
}

ScheduleResult lawler_moore(const JobInstance& inst, bool want_certificate) {
  const std::vector<std::size_t> order = edd_order(inst);
  const std::size_t cap = static_cast<std::size_t>(inst.total_p);

  BitVec reachable(cap + 1);
  reachable.set(0);
  std::vector<BitVec> added;  // bits that first appeared at step t
  if (want_certificate) added.reserve(order.size());

  for (std::size_t idx : order) {
    const Job& j = inst.jobs[idx - 1];
    if (j.d < j.p) {
      if (want_certificate) added.emplace_back(BitVec(cap + 1));
      continue;  // no achievable sum can admit this job early
    }
    BitVec next = reachable;
    BitVec shifted(cap + 1);
    shifted.or_shifted(reachable, static_cast<std::size_t>(j.p));
    shifted.clear_above(static_cast<std::size_t>(std::min(j.d, inst.total_p)));
    next.or_shifted(shifted, 0);
    if (want_certificate) {
      BitVec delta(cap + 1);
      shifted.for_each_set([&](std::size_t s) {
        if (!reachable.test(s)) delta.set(s);
      });
      added.push_back(std::move(delta));
    }
    reachable = std::move(next);
  }

  std::int64_t best_sum = reachable.max_set();

  ScheduleResult res;
  res.objective = inst.total_p - best_sum;
  res.algorithm = "lawler_moore";

  if (want_certificate) {
    std::vector<std::size_t> early;
    std::int64_t x = best_sum;
    for (std::size_t t = order.size(); t-- > 0 && x > 0;) {
      if (added[t].test(static_cast<std::size_t>(x))) {
        early.push_back(order[t]);
        x -= inst.jobs[order[t] - 1].p;
      }
    }
    std::sort(early.begin(), early.end());
    res.early_set = std::move(early);
  }
  return res;
}

}  // namespace tardy
