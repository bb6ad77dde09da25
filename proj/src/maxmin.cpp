#include "tardy/maxmin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tardy/bitvec.hpp"
#include "tardy/numseq.hpp"

namespace tardy {

namespace {

void check_inputs(const ExtVec& a, const ExtVec& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("maxmin_conv: empty input");
  if (a.size() != b.size()) throw std::invalid_argument("maxmin_conv: length mismatch");
}

bool all_equal(const ExtVec& v) {
  for (const ExtInt& x : v)
    if (x != v.front()) return false;
  return true;
}

// Sentinels mapped just outside the finite range; order is preserved,
// which is all (max,min) depends on.
struct Clamped {
  std::vector<std::int64_t> a, b;
  std::int64_t neg, pos;

  ExtInt restore(std::int64_t v) const {
    if (v == neg) return ExtInt::neg_inf();
    if (v == pos) return ExtInt::pos_inf();
    return ExtInt::finite(v);
  }
};

Clamped clamp_plane(const ExtVec& a, const ExtVec& b) {
  std::int64_t lo = 0, hi = 0;
  bool have_finite = false;
  auto scan = [&](const ExtVec& v) {
    for (const ExtInt& x : v) {
      if (!x.is_finite()) continue;
      if (!have_finite) {
        lo = hi = x.value();
        have_finite = true;
      } else {
        lo = std::min(lo, x.value());
        hi = std::max(hi, x.value());
      }
    }
  };
  scan(a);
  scan(b);
  Clamped c;
  c.neg = have_finite ? lo - 1 : 0;
  c.pos = have_finite ? hi + 1 : 1;
  auto conv = [&](const ExtVec& v) {
    std::vector<std::int64_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      out[i] = v[i].is_neg_inf() ? c.neg : v[i].is_pos_inf() ? c.pos : v[i].value();
    return out;
  };
  c.a = conv(a);
  c.b = conv(b);
  return c;
}

}  // namespace

ExtVec maxmin_conv_naive(const ExtVec& a, const ExtVec& b) {
  check_inputs(a, b);
  const std::size_t n1 = a.size();
  ExtVec c(2 * n1 - 1, ExtInt::neg_inf());
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      c[i + j] = ext_max(c[i + j], ext_min(a[i], b[j]));
  return c;
}

ExtVec maxmin_conv_fast(const ExtVec& a, const ExtVec& b) {
  check_inputs(a, b);
  const std::size_t n1 = a.size();
  if (n1 == 1) return maxmin_conv_naive(a, b);
  if (all_equal(a) && all_equal(b)) {
    // Degenerate distribution; every pair attains the same min.
    return ExtVec(2 * n1 - 1, ext_min(a.front(), b.front()));
  }

  const Clamped cl = clamp_plane(a, b);
  const std::size_t out_len = 2 * n1 - 1;

  std::vector<std::int64_t> all_values;
  all_values.reserve(2 * n1);
  all_values.insert(all_values.end(), cl.a.begin(), cl.a.end());
  all_values.insert(all_values.end(), cl.b.begin(), cl.b.end());
  std::sort(all_values.begin(), all_values.end());

  const std::size_t group = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(all_values.size()))));

  // Group minima, deduplicated; equal boundary values merge so each
  // threshold is strictly larger than the previous one. The global
  // minimum needs no convolution (positivity is unconditional).
  std::vector<std::int64_t> thresholds;
  for (std::size_t r = 0; r < all_values.size(); r += group) {
    if (thresholds.empty() || all_values[r] > thresholds.back())
      thresholds.push_back(all_values[r]);
  }

  std::vector<BitVec> positive;  // aligned with thresholds[1..]
  positive.reserve(thresholds.size() - 1);
  for (std::size_t s = 1; s < thresholds.size(); ++s) {
    const std::int64_t t = thresholds[s];
    BitVec abits(n1), bbits(n1);
    for (std::size_t i = 0; i < n1; ++i) {
      if (cl.a[i] >= t) abits.set(i);
      if (cl.b[i] >= t) bbits.set(i);
    }
    positive.push_back(boolean_convolve(abits, bbits));
  }

  // Per-vector (value, position) arrays for the resolution scans.
  auto sorted_entries = [](const std::vector<std::int64_t>& v) {
    std::vector<std::pair<std::int64_t, std::size_t>> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = {v[i], i};
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto sa = sorted_entries(cl.a);
  const auto sb = sorted_entries(cl.b);

  ExtVec c(out_len);
  for (std::size_t k = 0; k < out_len; ++k) {
    // Highest threshold whose convolution is positive at k; monotone,
    // so binary search. Index 0 (the global minimum) always holds.
    std::size_t lo = 0, hi = thresholds.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi + 1) / 2;
      if (positive[mid - 1].test(k))
        lo = mid;
      else
        hi = mid - 1;
    }
    const std::int64_t base = thresholds[lo];
    const std::int64_t bound =
        lo + 1 < thresholds.size() ? thresholds[lo + 1] : cl.pos + 1;

    // C[k] >= base is guaranteed; only the few entries strictly inside
    // (base, bound) can raise it.
    std::int64_t best = base;
    auto scan = [&](const std::vector<std::pair<std::int64_t, std::size_t>>& entries,
                    const std::vector<std::int64_t>& partner) {
      auto it = std::lower_bound(entries.begin(), entries.end(),
                                 std::pair<std::int64_t, std::size_t>{base + 1, 0});
      for (; it != entries.end() && it->first < bound; ++it) {
        const std::size_t pos = it->second;
        if (k < pos || k - pos >= n1) continue;
        if (partner[k - pos] >= it->first) best = std::max(best, it->first);
      }
    };
    scan(sa, cl.b);
    scan(sb, cl.a);
    c[k] = cl.restore(best);
  }
  return c;
}

}  // namespace tardy
