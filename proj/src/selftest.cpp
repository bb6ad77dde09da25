#include "tardy/selftest.hpp"

#include <algorithm>
#include <stdexcept>

#include "tardy/baseline.hpp"
#include "tardy/bitvec.hpp"
#include "tardy/instance_io.hpp"
#include "tardy/maxmin.hpp"
#include "tardy/numseq.hpp"
#include "tardy/sched.hpp"
#include "tardy/skewed.hpp"

namespace tardy {

void SuiteResult::record(bool pass, std::uint64_t seed, const std::string& detail) {
  if (pass) {
    ++passed;
    return;
  }
  if (failed == 0) {
    first_failing_seed = seed;
    failure_detail = detail;
  }
  ++failed;
}

ExtVec random_ext_vec(SplitMix64& rng, std::size_t len, std::int64_t lo, std::int64_t hi,
                      double sentinel_density) {
  ExtVec v(len);
  const std::uint64_t cut = static_cast<std::uint64_t>(sentinel_density * 10000.0);
  for (std::size_t i = 0; i < len; ++i) {
    if (rng.below(10000) < cut)
      v[i] = rng.below(2) ? ExtInt::pos_inf() : ExtInt::neg_inf();
    else
      v[i] = ExtInt::finite(rng.range(lo, hi));
  }
  return v;
}

std::vector<Job> random_tiny_instance(SplitMix64& rng, std::size_t n_max, std::int64_t p_max,
                                      std::int64_t d_max) {
  const std::size_t n = 1 + rng.below(n_max);
  std::vector<Job> jobs(n);
  for (Job& j : jobs) {
    j.p = rng.range(1, p_max);
    j.d = rng.range(0, d_max);
  }
  return jobs;
}

ExtVec naive_level_conv(const ExtVec& a, const ExtVec& b, int level) {
  const ExtVec al = level_vector(a, level);
  const ExtVec bl = level_vector(b, level);
  ExtVec c(2 * a.size() - 1, ExtInt::neg_inf());
  for (std::size_t i = 0; i < al.size(); ++i) {
    for (std::size_t j = 0; j < bl.size(); ++j) {
      const std::size_t k = i + j;
      const std::int64_t q = level < 63 ? static_cast<std::int64_t>(k >> level) : 0;
      c[k] = ext_max(c[k], ext_min(al[i], ext_add(bl[j], q)));
    }
  }
  return c;
}

ExtVec skew_combine_direct(const ExtVec& a, const ExtVec& b) {
  const std::size_t len = std::max(a.size(), b.size());
  ExtVec ap(len, ExtInt::neg_inf()), bp(len, ExtInt::neg_inf());
  std::copy(a.begin(), a.end(), ap.begin());
  std::copy(b.begin(), b.end(), bp.begin());
  ExtVec c(2 * len - 1, ExtInt::neg_inf());
  for (std::size_t x1 = 0; x1 < len; ++x1)
    for (std::size_t x2 = 0; x2 < len; ++x2)
      c[x1 + x2] = ext_max(c[x1 + x2],
                           ext_min(ap[x1], ext_add(bp[x2], -static_cast<std::int64_t>(x1))));
  return c;
}

namespace {

constexpr std::uint64_t kSuiteSeedBase = 0x7061706572736F6CULL;

std::uint64_t trial_seed(std::uint64_t suite_tag, std::size_t trial) {
  SplitMix64 mix(kSuiteSeedBase ^ suite_tag);
  std::uint64_t s = mix.next();
  return s + 0x9E3779B97F4A7C15ULL * trial;
}

BitVec random_bits(SplitMix64& rng, std::size_t len, std::uint64_t density_pct) {
  BitVec v(len);
  for (std::size_t i = 0; i < len; ++i)
    if (rng.below(100) < density_pct) v.set(i);
  return v;
}

BitVec schoolbook_conv(const BitVec& u, const BitVec& v) {
  BitVec out(u.size() + v.size() - 1);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u.test(i)) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v.test(j)) out.set(i + j);
  }
  return out;
}

std::string describe_pair(const ExtVec& a, const ExtVec& b) {
  if (a.size() > 40) return "vectors of length " + std::to_string(a.size());
  return "A=" + to_string(a) + " B=" + to_string(b);
}

// Enumerates every vector of the given length over the alphabet.
bool next_vector(ExtVec& v, const std::vector<ExtInt>& alphabet) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t pos = 0;
    while (alphabet[pos] != v[i]) ++pos;
    if (pos + 1 < alphabet.size()) {
      v[i] = alphabet[pos + 1];
      return true;
    }
    v[i] = alphabet[0];
  }
  return false;
}

using ConvFn = ExtVec (*)(const ExtVec&, const ExtVec&);

SuiteResult exhaustive_conv_suite(const char* name, const std::vector<ExtInt>& alphabet,
                                  ConvFn fast, ConvFn naive, std::size_t pair_exhaustive_len,
                                  std::size_t sweep_len, std::size_t sampled_partners,
                                  std::int64_t sample_lo, std::int64_t sample_hi) {
  SuiteResult res;
  res.name = name;
  for (std::size_t len = 1; len <= pair_exhaustive_len; ++len) {
    ExtVec a(len, alphabet[0]);
    do {
      ExtVec b(len, alphabet[0]);
      do {
        res.record(fast(a, b) == naive(a, b), 0, describe_pair(a, b));
      } while (next_vector(b, alphabet));
    } while (next_vector(a, alphabet));
  }
  // Larger lengths: every A over the alphabet against seeded partners.
  for (std::size_t len = pair_exhaustive_len + 1; len <= sweep_len; ++len) {
    ExtVec a(len, alphabet[0]);
    std::size_t a_index = 0;
    do {
      for (std::size_t t = 0; t < sampled_partners; ++t) {
        const std::uint64_t seed = trial_seed(0xE0 + len, a_index * sampled_partners + t);
        SplitMix64 rng(seed);
        ExtVec b = random_ext_vec(rng, len, sample_lo, sample_hi, 0.2);
        res.record(fast(a, b) == naive(a, b), seed, describe_pair(a, b));
      }
      ++a_index;
    } while (next_vector(a, alphabet));
  }
  return res;
}

}  // namespace

SuiteResult selftest_bool_conv(std::size_t trials, std::size_t max_len, bool exhaustive_tiny) {
  SuiteResult res;
  res.name = "boolean_convolve";
  if (exhaustive_tiny) {
    // Every bit-pattern pair with both lengths <= 8.
    for (std::size_t lu = 1; lu <= 8; ++lu) {
      for (std::size_t lv = 1; lv <= 8; ++lv) {
        for (std::uint32_t mu = 0; mu < (1u << lu); ++mu) {
          for (std::uint32_t mv = 0; mv < (1u << lv); ++mv) {
            BitVec u(lu), v(lv);
            for (std::size_t i = 0; i < lu; ++i)
              if (mu >> i & 1u) u.set(i);
            for (std::size_t j = 0; j < lv; ++j)
              if (mv >> j & 1u) v.set(j);
            res.record(boolean_convolve(u, v) == schoolbook_conv(u, v), 0,
                       "exhaustive bit pattern lu=" + std::to_string(lu) +
                           " lv=" + std::to_string(lv));
          }
        }
      }
    }
  }
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t seed = trial_seed(0x01, t);
    SplitMix64 rng(seed);
    const std::size_t lu = 1 + rng.below(max_len);
    const std::size_t lv = 1 + rng.below(max_len);
    const std::uint64_t density = 1 + rng.below(99);
    BitVec u = random_bits(rng, lu, density);
    BitVec v = random_bits(rng, lv, density);
    res.record(boolean_convolve(u, v) == schoolbook_conv(u, v), seed,
               "random bit vectors lu=" + std::to_string(lu) + " lv=" + std::to_string(lv));
  }
  return res;
}

SuiteResult selftest_sumset(std::size_t pairs, std::int64_t max_cap) {
  SuiteResult res;
  res.name = "sumset";
  const double densities[] = {0.01, 0.1, 0.5, 1.0};
  for (std::size_t t = 0; t < pairs; ++t) {
    const std::uint64_t seed = trial_seed(0x02, t);
    SplitMix64 rng(seed);
    const double density = densities[t % 4];
    auto random_sumset = [&]() {
      const std::int64_t cap = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(max_cap))) + 1;
      SumSet s(cap);
      const std::uint64_t cut = static_cast<std::uint64_t>(density * 10000.0);
      for (std::int64_t v = 0; v <= cap; ++v)
        if (rng.below(10000) < cut) s.add(v);
      return s;
    };
    SumSet x1 = random_sumset();
    SumSet x2 = random_sumset();
    res.record(sumset(x1, x2) == sumset_naive(x1, x2), seed,
               "caps " + std::to_string(x1.cap) + "," + std::to_string(x2.cap) +
                   " density " + std::to_string(density));
  }
  return res;
}

SuiteResult selftest_subset_sums(std::size_t trials, std::size_t max_elems, std::int64_t max_val) {
  SuiteResult res;
  res.name = "subset_sums";
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t seed = trial_seed(0x03, t);
    SplitMix64 rng(seed);
    const std::size_t count = rng.below(max_elems + 1);
    std::vector<std::int64_t> xs(count);
    for (auto& x : xs) x = rng.range(1, max_val);
    SumSet fast = subset_sums(xs);
    SumSet slow = subset_sums_naive(xs);
    bool pass = fast == slow && fast.contains(0);
    if (!xs.empty()) {
      std::int64_t total = 0;
      for (auto x : xs) total += x;
      pass = pass && fast.max_value() == total &&
             fast.count() <= static_cast<std::size_t>(total) + 1;
    }
    res.record(pass, seed, "multiset of " + std::to_string(count) + " elements");
  }
  return res;
}

SuiteResult selftest_maxmin_exhaustive(std::size_t pair_exhaustive_len, std::size_t sweep_len,
                                       std::size_t sampled_partners) {
  const std::vector<ExtInt> alphabet = {ExtInt::neg_inf(), ExtInt::finite(0), ExtInt::finite(1),
                                        ExtInt::finite(2), ExtInt::pos_inf()};
  return exhaustive_conv_suite("maxmin_exhaustive", alphabet, maxmin_conv_fast,
                               maxmin_conv_naive, pair_exhaustive_len, sweep_len,
                               sampled_partners, 0, 2);
}

SuiteResult selftest_maxmin_random(std::size_t pairs, std::size_t max_len) {
  SuiteResult res;
  res.name = "maxmin_random";
  const std::int64_t ranges[] = {10, std::int64_t{1} << 40};
  const double densities[] = {0.0, 0.05, 0.1, 0.2};
  for (std::size_t t = 0; t < pairs; ++t) {
    const std::uint64_t seed = trial_seed(0x04, t);
    SplitMix64 rng(seed);
    const std::size_t len = 1 + rng.below(max_len);
    const std::int64_t hi = ranges[t % 2];
    const double density = densities[t % 4];
    ExtVec a = random_ext_vec(rng, len, 0, hi, density);
    ExtVec b = random_ext_vec(rng, len, 0, hi, density);
    res.record(maxmin_conv_fast(a, b) == maxmin_conv_naive(a, b), seed, describe_pair(a, b));
  }
  return res;
}

SuiteResult selftest_skewed_exhaustive(std::size_t pair_exhaustive_len, std::size_t sweep_len,
                                       std::size_t sampled_partners) {
  const std::vector<ExtInt> alphabet = {ExtInt::neg_inf(), ExtInt::finite(0), ExtInt::finite(1),
                                        ExtInt::finite(2), ExtInt::finite(3)};
  auto fast = [](const ExtVec& a, const ExtVec& b) { return skewed_conv_fast(a, b); };
  return exhaustive_conv_suite("skewed_exhaustive", alphabet, +fast, skewed_conv_naive,
                               pair_exhaustive_len, sweep_len, sampled_partners, 0, 3);
}

SuiteResult selftest_skewed_random(std::size_t pairs, std::size_t max_len) {
  SuiteResult res;
  res.name = "skewed_random";
  const std::int64_t ranges[] = {10, 1000, std::int64_t{1} << 40};
  const double densities[] = {0.0, 0.05, 0.1, 0.2};
  for (std::size_t t = 0; t < pairs; ++t) {
    const std::uint64_t seed = trial_seed(0x05, t);
    SplitMix64 rng(seed);
    const std::size_t len = 1 + rng.below(max_len);
    const std::int64_t hi = ranges[t % 3];
    const double density = densities[t % 4];
    ExtVec a = random_ext_vec(rng, len, 0, hi, density);
    ExtVec b = random_ext_vec(rng, len, 0, hi, density);
    res.record(skewed_conv_fast(a, b) == skewed_conv_naive(a, b), seed, describe_pair(a, b));
  }
  return res;
}

SuiteResult selftest_refine_robustness(std::size_t trials, std::size_t max_len) {
  SuiteResult res;
  res.name = "refine_robustness";
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t seed = trial_seed(0x06, t);
    SplitMix64 rng(seed);
    const std::size_t len = 1 + rng.below(max_len);
    const std::int64_t hi = static_cast<std::int64_t>(1 + rng.below(4 * max_len));
    ExtVec a = random_ext_vec(rng, len, 0, hi, 0.1);
    ExtVec b = random_ext_vec(rng, len, 0, hi, 0.1);
    bool pass = true;
    std::string detail;
    for (int level = 0; level < 3 && pass; ++level) {
      const ExtVec exact = naive_level_conv(a, b, level);
      for (std::int64_t shift = 0; shift <= 2 && pass; ++shift) {
        LevelState state;
        state.level = level;
        state.a = level_vector(a, level);
        state.b = level_vector(b, level);
        state.approx.resize(exact.size());
        for (std::size_t k = 0; k < exact.size(); ++k)
          state.approx[k] = ext_add(exact[k], -shift);
        if (refine_level(state) != exact) {
          pass = false;
          detail = "level " + std::to_string(level) + " shift " + std::to_string(shift) +
                   " " + describe_pair(a, b);
        }
      }
    }
    res.record(pass, seed, detail);
  }
  return res;
}

SuiteResult selftest_skew_combine(std::size_t pairs, std::size_t max_len) {
  SuiteResult res;
  res.name = "skew_combine";
  for (std::size_t t = 0; t < pairs; ++t) {
    const std::uint64_t seed = trial_seed(0x07, t);
    SplitMix64 rng(seed);
    const std::size_t la = 1 + rng.below(max_len);
    const std::size_t lb = 1 + rng.below(max_len);
    const std::int64_t hi = static_cast<std::int64_t>(1 + rng.below(4 * max_len));
    ExtVec a = random_ext_vec(rng, la, 0, hi, 0.15);
    ExtVec b = random_ext_vec(rng, lb, 0, hi, 0.15);
    res.record(skew_combine(a, b) == skew_combine_direct(a, b), seed, describe_pair(a, b));
  }
  return res;
}

SuiteResult selftest_maxmin_bridge(std::size_t pairs, std::size_t max_len) {
  SuiteResult res;
  res.name = "maxmin_via_skewed";
  for (std::size_t t = 0; t < pairs; ++t) {
    const std::uint64_t seed = trial_seed(0x08, t);
    SplitMix64 rng(seed);
    const std::size_t len = 1 + rng.below(max_len);
    const std::int64_t hi = static_cast<std::int64_t>(1 + rng.below(8 * max_len));
    ExtVec a = random_ext_vec(rng, len, 0, hi, 0.1);
    ExtVec b = random_ext_vec(rng, len, 0, hi, 0.1);
    res.record(maxmin_via_skewed(a, b) == maxmin_conv_naive(a, b), seed, describe_pair(a, b));
  }
  return res;
}

SuiteResult selftest_fourway(std::size_t instances) {
  SuiteResult res;
  res.name = "fourway_agreement";
  for (std::size_t t = 0; t < instances; ++t) {
    const std::uint64_t seed = trial_seed(0x09, t);
    SplitMix64 rng(seed);
    std::vector<Job> jobs = random_tiny_instance(rng, 10, 15, 40);
    JobInstance inst = build_instance(jobs);
    ScheduleResult bf = brute_force(inst);
    ScheduleResult lm = lawler_moore(inst);
    ScheduleResult su = sumset_scheduler(inst);
    ScheduleResult cv = conv_scheduler(inst);
    const bool agree = bf.objective == lm.objective && lm.objective == su.objective &&
                       su.objective == cv.objective;
    const bool certs = verify_result(inst, bf) && verify_result(inst, lm);
    res.record(agree && certs, seed,
               "objectives " + std::to_string(bf.objective) + "/" + std::to_string(lm.objective) +
                   "/" + std::to_string(su.objective) + "/" + std::to_string(cv.objective) +
                   "\n" + render_instance(jobs));
  }
  return res;
}

SuiteResult selftest_midscale(std::size_t instances) {
  SuiteResult res;
  res.name = "midscale_agreement";
  const std::size_t dsharps[] = {1, 2, 4, 8, 64};
  for (std::size_t t = 0; t < instances; ++t) {
    const std::uint64_t seed = trial_seed(0x0A, t);
    SplitMix64 rng(seed);
    GenParams params;
    params.dsharp = dsharps[t % 5];
    params.n = std::max<std::size_t>(params.dsharp, 1 + rng.below(64));
    params.pmax = std::max<std::int64_t>(1, static_cast<std::int64_t>(2000 / params.n));
    params.seed = rng.next();
    params.family = params.dsharp == 1 ? GenFamily::kSubsetSum
                                       : (t % 2 ? GenFamily::kTight : GenFamily::kUniform);
    JobInstance inst = build_instance(generate_instance(params));
    ScheduleResult lm = lawler_moore(inst, /*want_certificate=*/false);
    ScheduleResult su = sumset_scheduler(inst);
    ScheduleResult cv = conv_scheduler(inst);
    res.record(lm.objective == su.objective && su.objective == cv.objective, seed,
               "n=" + std::to_string(inst.n()) + " P=" + std::to_string(inst.total_p) +
                   " D#=" + std::to_string(inst.d_sharp()) + " objectives " +
                   std::to_string(lm.objective) + "/" + std::to_string(su.objective) + "/" +
                   std::to_string(cv.objective));
  }
  return res;
}

SuiteResult selftest_single_due(std::size_t instances) {
  SuiteResult res;
  res.name = "single_due_date";
  for (std::size_t t = 0; t < instances; ++t) {
    const std::uint64_t seed = trial_seed(0x0B, t);
    SplitMix64 rng(seed);
    const std::size_t n = 1 + rng.below(40);
    std::vector<Job> jobs(n);
    std::int64_t total = 0;
    for (Job& j : jobs) {
      j.p = rng.range(1, 50);
      total += j.p;
    }
    const std::int64_t due = rng.range(0, total);
    for (Job& j : jobs) j.d = due;
    JobInstance inst = build_instance(jobs);
    ScheduleResult su = sumset_scheduler(inst);

    // Independent route: best subset sum of all processing times <= due.
    std::vector<std::int64_t> ps;
    for (const Job& j : jobs) ps.push_back(j.p);
    SumSet ss = subset_sums_naive(ps);
    std::int64_t best = 0;
    for (std::int64_t s = 0; s <= std::min(due, ss.cap); ++s)
      if (ss.contains(s)) best = s;
    res.record(su.objective == total - best, seed,
               "n=" + std::to_string(n) + " due=" + std::to_string(due));
  }
  return res;
}

std::vector<std::string> selftest_group_names() {
  return {"numseq", "maxmin", "skewed", "sched"};
}

std::vector<SuiteResult> run_selftest_group(const std::string& group, bool full) {
  std::vector<SuiteResult> out;
  if (group == "numseq") {
    out.push_back(selftest_bool_conv(full ? 200 : 50, full ? 1024 : 256, full));
    out.push_back(selftest_sumset(full ? 500 : 100, full ? 4096 : 512));
    out.push_back(selftest_subset_sums(full ? 500 : 100, 16, 50));
  } else if (group == "maxmin") {
    out.push_back(selftest_maxmin_exhaustive(full ? 4 : 3, full ? 6 : 4, full ? 100 : 25));
    out.push_back(selftest_maxmin_random(full ? 300 : 60, full ? 4097 : 513));
  } else if (group == "skewed") {
    out.push_back(selftest_skewed_exhaustive(full ? 4 : 3, 5, full ? 100 : 25));
    out.push_back(selftest_skewed_random(full ? 300 : 60, full ? 2049 : 257));
    out.push_back(selftest_refine_robustness(full ? 60 : 15, full ? 160 : 64));
    out.push_back(selftest_skew_combine(full ? 200 : 40, full ? 512 : 128));
    out.push_back(selftest_maxmin_bridge(full ? 100 : 25, full ? 512 : 128));
  } else if (group == "sched") {
    out.push_back(selftest_fourway(full ? 1000 : 200));
    out.push_back(selftest_midscale(full ? 200 : 30));
    out.push_back(selftest_single_due(full ? 100 : 30));
  } else {
    throw std::invalid_argument("unknown selftest group: " + group);
  }
  return out;
}

}  // namespace tardy
