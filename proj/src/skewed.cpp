#include "tardy/skewed.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "tardy/bitvec.hpp"
#include "tardy/maxmin.hpp"
#include "tardy/numseq.hpp"

#if !defined(NDEBUG)
#define TARDY_DEBUG_CHECKS 1
#endif

namespace tardy {

namespace {

void check_inputs(const ExtVec& a, const ExtVec& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("skewed_conv: empty input");
  if (a.size() != b.size()) throw std::invalid_argument("skewed_conv: length mismatch");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// Value-sorted view of the finite entries of one vector. Positions of
// one value are also grouped into maximal runs of consecutive indices;
// piecewise-structured inputs (the scheduler's M-vectors) have very few
// runs per value.
struct SideIndex {
  std::vector<std::pair<std::int64_t, std::size_t>> entries;  // (value, pos) ascending
  std::vector<std::int64_t> distinct;
  std::vector<std::pair<std::size_t, std::size_t>> slices;  // entry range per distinct value
  std::vector<std::pair<std::size_t, std::size_t>> runs;    // [first, last] position runs
  std::vector<std::pair<std::size_t, std::size_t>> run_ranges;  // run range per distinct value

  explicit SideIndex(const ExtVec& v) {
    entries.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i].is_finite()) entries.push_back({v[i].value(), i});
    std::sort(entries.begin(), entries.end());
    for (std::size_t e = 0; e < entries.size();) {
      std::size_t f = e;
      while (f < entries.size() && entries[f].first == entries[e].first) ++f;
      distinct.push_back(entries[e].first);
      slices.push_back({e, f});
      const std::size_t run_begin = runs.size();
      for (std::size_t r = e; r < f;) {
        std::size_t s = r;
        while (s + 1 < f && entries[s + 1].second == entries[s].second + 1) ++s;
        runs.push_back({entries[r].second, entries[s].second});
        r = s + 1;
      }
      run_ranges.push_back({run_begin, runs.size()});
      e = f;
    }
  }

  // Entry index range with value in [lo, hi].
  std::pair<std::size_t, std::size_t> window(std::int64_t lo, std::int64_t hi) const {
    auto first = std::lower_bound(entries.begin(), entries.end(),
                                  std::pair<std::int64_t, std::size_t>{lo, 0});
    auto last = std::lower_bound(first, entries.end(),
                                 std::pair<std::int64_t, std::size_t>{hi + 1, 0});
    return {static_cast<std::size_t>(first - entries.begin()),
            static_cast<std::size_t>(last - entries.begin())};
  }

  // Count of finite entries with value in [lo, hi].
  std::size_t count_in(std::int64_t lo, std::int64_t hi) const {
    auto [f, l] = window(lo, hi);
    return l - f;
  }

  // Slice index of an exact value, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t find(std::int64_t v) const {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), v);
    if (it == distinct.end() || *it != v) return npos;
    return static_cast<std::size_t>(it - distinct.begin());
  }
};

// Sparse-table range maximum over the raw encoding (the sentinel
// encoding preserves order, so raw comparisons are exact).
class RangeMax {
 public:
  explicit RangeMax(const ExtVec& v) : n_(v.size()) {
    int levels = 1;
    while ((std::size_t{1} << levels) <= n_) ++levels;
    table_.assign(static_cast<std::size_t>(levels), std::vector<std::int64_t>(n_));
    for (std::size_t i = 0; i < n_; ++i) table_[0][i] = v[i].raw;
    for (std::size_t l = 1; l < table_.size(); ++l) {
      const std::size_t half = std::size_t{1} << (l - 1);
      for (std::size_t i = 0; i + (std::size_t{1} << l) <= n_; ++i)
        table_[l][i] = std::max(table_[l - 1][i], table_[l - 1][i + half]);
    }
  }

  // Max over the inclusive index range [lo, hi].
  std::int64_t query(std::size_t lo, std::size_t hi) const {
    const std::size_t width = hi - lo + 1;
    const std::size_t l = static_cast<std::size_t>(63 - __builtin_clzll(width));
    return std::max(table_[l][lo], table_[l][hi + 1 - (std::size_t{1} << l)]);
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::int64_t>> table_;
};

// Exact boolean convolution positivity with a density-adaptive engine:
// shift-or over the sparser side's positions when that is cheaper than
// a transform. Both routes are exact.
BitVec positivity_conv(const BitVec& u, std::size_t pop_u, const BitVec& v,
                       std::size_t pop_v) {
  const std::size_t out_len = u.size() + v.size() - 1;
  const BitVec& sparse = pop_u <= pop_v ? u : v;
  const BitVec& dense = pop_u <= pop_v ? v : u;
  const std::size_t min_pop = std::min(pop_u, pop_v);

  std::size_t sz = 1;
  while (sz < out_len) sz <<= 1;
  const double ntt_cost = 2.0 * static_cast<double>(sz) * std::log2(static_cast<double>(sz) + 2);
  const double shift_cost =
      static_cast<double>(min_pop) * static_cast<double>(out_len / 64 + 2);
  if (shift_cost <= ntt_cost) {
    BitVec out(out_len);
    sparse.for_each_set([&](std::size_t i) { out.or_shifted(dense, i); });
    return out;
  }
  return boolean_convolve(u, v);
}

// Answers "is there a pair i+j=k with x[i] == v and y[j] >= v + sign*q"
// queries for one side of one level. Tiers, all exact: a range-max
// sweep over the value's position runs (covers piecewise inputs whose
// values sit in few runs), a capped positional scan with early exit, a
// memoized indicator-vs-threshold convolution, and a memoized full
// (max,min)-convolution against the indicator vector (one per value).
class HeavyResolver {
 public:
  HeavyResolver(const ExtVec& x, const ExtVec& y, const SideIndex& xi, int sign,
                std::size_t run_cap, std::size_t tier2_budget)
      : x_(x), y_(y), xi_(xi), partner_max_(y), sign_(sign), run_cap_(run_cap),
        tier2_left_(tier2_budget) {}

  bool test(std::int64_t v, std::int64_t q, std::size_t k) {
    const std::int64_t t = v + sign_ * q;
    const std::size_t slice = xi_.find(v);
    if (slice == SideIndex::npos) return false;
    auto [sb, se] = xi_.slices[slice];

    // Tier 0: per position run [a, b], the partners form the index
    // range [k-b, k-a]; one range-max query decides each run.
    auto [rb, re] = xi_.run_ranges[slice];
    if (re - rb <= run_cap_) {
      const std::size_t min_i = k >= y_.size() ? k - y_.size() + 1 : 0;
      for (std::size_t r = rb; r < re; ++r) {
        const auto [a, b] = xi_.runs[r];
        if (k < a || b < min_i) continue;
        const std::size_t hi_i = std::min(b, k);
        const std::size_t lo_i = std::max(a, min_i);
        if (lo_i > hi_i) continue;
        if (partner_max_.query(k - hi_i, k - lo_i) >= t) return true;
      }
      return false;
    }

    // Tier 1: scan the value's positions from the high end.
    const std::size_t probes = std::min<std::size_t>(kProbeCap, se - sb);
    for (std::size_t e = se; e-- > se - probes;) {
      const std::size_t i = xi_.entries[e].second;
      if (k < i || k - i >= y_.size()) continue;
      if (partner_ok(y_[k - i], t)) return true;
    }
    if (se - sb <= kProbeCap) return false;

    // Tier 2: one exact positivity convolution per (value, threshold).
    if (tier2_left_ > 0) {
      auto key = std::make_pair(v, t);
      auto it = conv_memo_.find(key);
      if (it == conv_memo_.end()) {
        --tier2_left_;
        it = conv_memo_.emplace(key, threshold_conv(t, sb, se)).first;
      }
      return it->second.test(k);
    }

    // Tier 3: full indicator convolution, shared across thresholds.
    auto it = full_memo_.find(v);
    if (it == full_memo_.end()) {
      ExtVec indicator(x_.size(), ExtInt::neg_inf());
      for (std::size_t e = sb; e < se; ++e)
        indicator[xi_.entries[e].second] = ExtInt::pos_inf();
      it = full_memo_.emplace(v, maxmin_conv_fast(indicator, y_)).first;
    }
    return it->second[k] >= ExtInt::finite(t);
  }

 private:
  static constexpr std::size_t kProbeCap = 64;

  static bool partner_ok(ExtInt partner, std::int64_t t) {
    if (partner.is_pos_inf()) return true;
    if (partner.is_neg_inf()) return false;
    return partner.value() >= t;
  }

  BitVec threshold_conv(std::int64_t t, std::size_t sb, std::size_t se) {
    BitVec xbits(x_.size());
    for (std::size_t e = sb; e < se; ++e) xbits.set(xi_.entries[e].second);
    BitVec ybits(y_.size());
    std::size_t pop_y = 0;
    for (std::size_t j = 0; j < y_.size(); ++j) {
      if (partner_ok(y_[j], t)) {
        ybits.set(j);
        ++pop_y;
      }
    }
    return positivity_conv(xbits, se - sb, ybits, pop_y);
  }

  const ExtVec& x_;
  const ExtVec& y_;
  const SideIndex& xi_;
  const RangeMax partner_max_;
  const int sign_;
  const std::size_t run_cap_;
  std::size_t tier2_left_;
  std::map<std::pair<std::int64_t, std::int64_t>, BitVec> conv_memo_;
  std::map<std::int64_t, ExtVec> full_memo_;
};

#ifdef TARDY_DEBUG_CHECKS
// Post-sparsification bound on distinct surviving values; values whose
// +-2 value neighbourhood is sparse can only matter for light indices.
void check_sparsification_bound(const SideIndex& si, std::size_t n1, std::size_t thr,
                                double delta) {
  std::size_t surviving = 0;
  for (std::size_t s = 0; s < si.distinct.size(); ++s) {
    const std::int64_t v = si.distinct[s];
    if (si.count_in(v - 2, v + 2) > thr) ++surviving;
  }
  const double bound = 5.0 * std::pow(static_cast<double>(n1), 1.0 - delta) + 1.0;
  assert(static_cast<double>(surviving) <= bound &&
         "sparsification: surviving distinct values exceed the n^(1-delta) bound");
  (void)surviving;
  (void)bound;
}
#endif

}  // namespace

ExtVec skewed_conv_naive(const ExtVec& a, const ExtVec& b) {
  check_inputs(a, b);
  const std::size_t n1 = a.size();
  ExtVec c(2 * n1 - 1, ExtInt::neg_inf());
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      const std::size_t k = i + j;
      c[k] = ext_max(c[k], ext_min(a[i], ext_add(b[j], static_cast<std::int64_t>(k))));
    }
  }
  return c;
}

ExtVec level_vector(const ExtVec& v, int level) {
  if (level < 0) throw std::invalid_argument("level_vector: negative level");
  ExtVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = ext_floor_div_pow2(v[i], level);
  return out;
}

LevelSides refine_level_sides(const LevelState& state, double delta) {
  check_inputs(state.a, state.b);
  if (state.approx.size() != 2 * state.a.size() - 1)
    throw std::invalid_argument("refine_level: approx length mismatch");

  const std::size_t n1 = state.a.size();
  const std::size_t out_len = 2 * n1 - 1;
  const int level = state.level;
  const std::size_t thr = static_cast<std::size_t>(
      std::ceil(std::pow(static_cast<double>(n1), delta)));

  const SideIndex ia(state.a);
  const SideIndex ib(state.b);
#ifdef TARDY_DEBUG_CHECKS
  check_sparsification_bound(ia, n1, thr, delta);
  check_sparsification_bound(ib, n1, thr, delta);
#endif

  const std::size_t tier2_budget = 8 * thr;
  HeavyResolver left(state.a, state.b, ia, /*sign=*/-1, thr, tier2_budget);
  HeavyResolver right(state.b, state.a, ib, /*sign=*/+1, thr, tier2_budget);

  LevelSides sides;
  sides.left.resize(out_len);
  sides.right.resize(out_len);
  for (std::size_t k = 0; k < out_len; ++k) {
    const ExtInt d = state.approx[k];
    if (!d.is_finite()) {
      sides.left[k] = sides.right[k] = d;  // sentinel approximations are exact
      continue;
    }
    const std::int64_t dv = d.value();
    const std::int64_t q = level < 63 ? static_cast<std::int64_t>(k >> level) : 0;

    // Left side: the answer is an A-value inside [D, D+2] whose partner
    // B[k-i] + q covers it.
    ExtInt lval = ExtInt::neg_inf();
    {
      auto [wb, we] = ia.window(dv, dv + 2);
      if (we - wb <= thr) {
        for (std::size_t e = we; e-- > wb;) {
          const auto [val, i] = ia.entries[e];
          if (k < i || k - i >= n1) continue;
          const ExtInt partner = state.b[k - i];
          if (partner.is_pos_inf() ||
              (partner.is_finite() && partner.value() + q >= val)) {
            lval = ExtInt::finite(val);
            break;
          }
        }
      } else {
        for (std::int64_t v = dv + 2; v >= dv; --v) {
          if (left.test(v, q, k)) {
            lval = ExtInt::finite(v);
            break;
          }
        }
      }
    }

    // Right side: the answer is B[j] + q inside [D, D+2] with
    // A[k-j] at least that large; the window over B-values is shifted
    // by -q.
    ExtInt rval = ExtInt::neg_inf();
    {
      auto [wb, we] = ib.window(dv - q, dv + 2 - q);
      if (we - wb <= thr) {
        for (std::size_t e = we; e-- > wb;) {
          const auto [val, j] = ib.entries[e];
          if (k < j || k - j >= n1) continue;
          const ExtInt partner = state.a[k - j];
          if (partner.is_pos_inf() ||
              (partner.is_finite() && partner.value() >= val + q)) {
            rval = ExtInt::finite(val + q);
            break;
          }
        }
      } else {
        for (std::int64_t w = dv + 2; w >= dv; --w) {
          if (right.test(w - q, q, k)) {
            rval = ExtInt::finite(w);
            break;
          }
        }
      }
    }

    sides.left[k] = lval;
    sides.right[k] = rval;
  }
  return sides;
}

ExtVec refine_level(const LevelState& state, double delta) {
  LevelSides sides = refine_level_sides(state, delta);
  ExtVec c(sides.left.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = ext_max(sides.left[k], sides.right[k]);
#ifdef TARDY_DEBUG_CHECKS
    if (state.approx[k].is_finite()) {
      assert(c[k].is_finite() && c[k].value() >= state.approx[k].value() &&
             c[k].value() <= state.approx[k].value() + 2 &&
             "refine_level: result escaped the approximation window");
    }
#endif
  }
  return c;
}

ExtVec skewed_conv_fast(const ExtVec& a, const ExtVec& b, double delta) {
  check_inputs(a, b);
  const std::size_t n = a.size() - 1;

  int lmax = 0;
  while ((std::uint64_t{1} << lmax) <= 2 * static_cast<std::uint64_t>(n)) ++lmax;

  // At the coarsest level the k-dependent term vanishes and the problem
  // is a plain (max,min)-convolution.
  ExtVec c = maxmin_conv_fast(level_vector(a, lmax), level_vector(b, lmax));

  for (int level = lmax - 1; level >= 0; --level) {
    LevelState state;
    state.level = level;
    state.a = level_vector(a, level);
    state.b = level_vector(b, level);
    state.approx.resize(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) state.approx[k] = ext_double(c[k]);
    c = refine_level(state, delta);
#ifdef TARDY_DEBUG_CHECKS
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_finite()) {
        assert(state.approx[k].is_finite());
        assert(state.approx[k].value() <= c[k].value());
        assert(state.approx[k].value() >= c[k].value() - 2);
      } else {
        assert(state.approx[k] == c[k]);
      }
    }
#endif
  }
  return c;
}

ExtVec skew_combine(const ExtVec& a, const ExtVec& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("skew_combine: empty input");
  const std::size_t len = std::max(a.size(), b.size());
  ExtVec a0(len, ExtInt::neg_inf());
  ExtVec b0(len, ExtInt::neg_inf());
  for (std::size_t x = 0; x < b.size(); ++x)
    a0[x] = ext_add(b[x], static_cast<std::int64_t>(x));
  for (std::size_t x = 0; x < a.size(); ++x) b0[x] = a[x];
  ExtVec c0 = skewed_conv_fast(a0, b0);
  ExtVec c(c0.size());
  for (std::size_t x = 0; x < c0.size(); ++x)
    c[x] = ext_add(c0[x], -static_cast<std::int64_t>(x));
  return c;
}

ExtVec maxmin_via_skewed(const ExtVec& a, const ExtVec& b) {
  check_inputs(a, b);
  const std::int64_t scale = 2 * static_cast<std::int64_t>(a.size() - 1) + 1;
  const std::int64_t limit = (std::int64_t{1} << 61) / scale;
  auto scaled = [&](const ExtVec& v) {
    ExtVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_finite()) {
        out[i] = v[i];
        continue;
      }
      if (std::llabs(v[i].value()) > limit)
        throw std::overflow_error("maxmin_via_skewed: scaled value would overflow");
      out[i] = ExtInt::finite(v[i].value() * scale);
    }
    return out;
  };
  ExtVec c0 = skewed_conv_fast(scaled(a), scaled(b));
  ExtVec c(c0.size());
  for (std::size_t k = 0; k < c0.size(); ++k)
    c[k] = c0[k].is_finite() ? ExtInt::finite(floor_div(c0[k].value(), scale)) : c0[k];
  return c;
}

}  // namespace tardy
