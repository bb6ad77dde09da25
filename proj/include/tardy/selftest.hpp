#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tardy/extint.hpp"
#include "tardy/model.hpp"
#include "tardy/rng.hpp"

namespace tardy {

// Differential validation suites. Every trial is driven by its own
// seed; a failure reports that seed plus a short reproduction detail.
struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::uint64_t first_failing_seed = 0;
  std::string failure_detail;

  bool ok() const { return failed == 0; }
  void record(bool pass, std::uint64_t seed, const std::string& detail);
};

// Random operand builders (deterministic in the seed).
ExtVec random_ext_vec(SplitMix64& rng, std::size_t len, std::int64_t lo, std::int64_t hi,
                      double sentinel_density);
std::vector<Job> random_tiny_instance(SplitMix64& rng, std::size_t n_max, std::int64_t p_max,
                                      std::int64_t d_max);

// Quadratic oracles used by the suites (independent of the fast paths
// they validate).
ExtVec naive_level_conv(const ExtVec& a, const ExtVec& b, int level);
ExtVec skew_combine_direct(const ExtVec& a, const ExtVec& b);

// numseq
SuiteResult selftest_bool_conv(std::size_t trials, std::size_t max_len, bool exhaustive_tiny);
SuiteResult selftest_sumset(std::size_t pairs, std::int64_t max_cap);
SuiteResult selftest_subset_sums(std::size_t trials, std::size_t max_elems, std::int64_t max_val);

// maxmin
SuiteResult selftest_maxmin_exhaustive(std::size_t pair_exhaustive_len,
                                       std::size_t sweep_len, std::size_t sampled_partners);
SuiteResult selftest_maxmin_random(std::size_t pairs, std::size_t max_len);

// skewed
SuiteResult selftest_skewed_exhaustive(std::size_t pair_exhaustive_len,
                                       std::size_t sweep_len, std::size_t sampled_partners);
SuiteResult selftest_skewed_random(std::size_t pairs, std::size_t max_len);
SuiteResult selftest_refine_robustness(std::size_t trials, std::size_t max_len);
SuiteResult selftest_skew_combine(std::size_t pairs, std::size_t max_len);
SuiteResult selftest_maxmin_bridge(std::size_t pairs, std::size_t max_len);

// schedulers
SuiteResult selftest_fourway(std::size_t instances);
SuiteResult selftest_midscale(std::size_t instances);
SuiteResult selftest_single_due(std::size_t instances);

// Named suite groups behind `selftest --quick|--full`.
std::vector<SuiteResult> run_selftest_group(const std::string& group, bool full);
std::vector<std::string> selftest_group_names();

}  // namespace tardy
