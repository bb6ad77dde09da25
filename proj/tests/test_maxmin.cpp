#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tardy/maxmin.hpp"
#include "tardy/rng.hpp"
#include "tardy/selftest.hpp"

using namespace tardy;

namespace {

ExtVec ev(std::initializer_list<std::int64_t> vals) {
  ExtVec v;
  for (std::int64_t x : vals) v.push_back(ExtInt::finite(x));
  return v;
}

const ExtInt kNeg = ExtInt::neg_inf();
const ExtInt kPos = ExtInt::pos_inf();

}  // namespace

TEST_CASE("maxmin_conv_naive examples") {
  CHECK(maxmin_conv_naive(ev({1, 5}), ev({2, 4})) == ev({1, 2, 4}));
  CHECK(maxmin_conv_naive(ev({7}), ev({3})) == ev({3}));
  CHECK(maxmin_conv_naive({kNeg, ExtInt::finite(7)}, {ExtInt::finite(3), kPos}) ==
        ExtVec{kNeg, ExtInt::finite(3), ExtInt::finite(7)});
}

TEST_CASE("maxmin_conv_fast examples") {
  CHECK(maxmin_conv_fast(ev({1, 5}), ev({2, 4})) == ev({1, 2, 4}));
  ExtVec all_neg(5, kNeg);
  CHECK(maxmin_conv_fast(all_neg, all_neg) == ExtVec(9, kNeg));
  ExtVec a = ev({0, 1, 2, 3});
  ExtVec b = ev({3, 2, 1, 0});
  CHECK(maxmin_conv_fast(a, b) == maxmin_conv_naive(a, b));
  CHECK_THROWS_AS(maxmin_conv_fast(ev({1}), ev({1, 2})), std::invalid_argument);
}

TEST_CASE("maxmin exhaustive tiny alphabet") {
  SuiteResult res = selftest_maxmin_exhaustive(3, 4, 20);
  INFO("seed ", res.first_failing_seed, ": ", res.failure_detail);
  CHECK(res.failed == 0);
}

TEST_CASE("maxmin random differential") {
  SuiteResult res = selftest_maxmin_random(80, 1025);
  INFO("seed ", res.first_failing_seed, ": ", res.failure_detail);
  CHECK(res.failed == 0);
}

TEST_CASE("maxmin differential on signed ranges") {
  // Negative values reach this path through level vectors of combined
  // schedules, so exercise them directly as well.
  SplitMix64 rng(21);
  for (int t = 0; t < 60; ++t) {
    const std::size_t len = 1 + rng.below(257);
    const std::int64_t hi = t % 2 ? 12 : 4000;
    ExtVec a = random_ext_vec(rng, len, -hi, hi, 0.1);
    ExtVec b = random_ext_vec(rng, len, -hi, hi, 0.1);
    CHECK(maxmin_conv_fast(a, b) == maxmin_conv_naive(a, b));
  }
}

TEST_CASE("maxmin commutativity") {
  SplitMix64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const std::size_t len = 1 + rng.below(128);
    ExtVec a = random_ext_vec(rng, len, 0, 50, 0.1);
    ExtVec b = random_ext_vec(rng, len, 0, 50, 0.1);
    CHECK(maxmin_conv_fast(a, b) == maxmin_conv_fast(b, a));
  }
}

TEST_CASE("raising one entry never lowers the output") {
  SplitMix64 rng(18);
  for (int t = 0; t < 40; ++t) {
    const std::size_t len = 2 + rng.below(48);
    ExtVec a = random_ext_vec(rng, len, 0, 30, 0.1);
    ExtVec b = random_ext_vec(rng, len, 0, 30, 0.1);
    ExtVec before = maxmin_conv_fast(a, b);
    const std::size_t i = rng.below(len);
    a[i] = a[i].is_finite() ? ExtInt::finite(a[i].value() + rng.range(1, 10))
                            : ExtInt::finite(rng.range(0, 40));
    ExtVec after = maxmin_conv_fast(a, b);
    for (std::size_t k = 0; k < before.size(); ++k) CHECK(after[k] >= before[k]);
  }
}
