#include "tardy/numseq.hpp"

#include <algorithm>
#include <stdexcept>

#include "ntt.hpp"

namespace tardy {

namespace {

// Above this many bits a dense SumSet stops being a desk-scale object.
constexpr std::int64_t kMaxDenseBits = std::int64_t{1} << 33;

void check_cap(std::int64_t cap) {
  if (cap < 0) throw std::invalid_argument("SumSet: negative cap");
  if (cap >= kMaxDenseBits) throw std::length_error("SumSet: cap too large for dense storage");
}

}  // namespace

SumSet::SumSet(std::int64_t cap_) : cap(cap_) {
  check_cap(cap_);
  bits = BitVec(static_cast<std::size_t>(cap_) + 1);
}

SumSet SumSet::of(std::initializer_list<std::int64_t> values) {
  std::int64_t cap = 0;
  for (std::int64_t v : values) cap = std::max(cap, v);
  SumSet s(cap);
  for (std::int64_t v : values) s.add(v);
  return s;
}

SumSet SumSet::of(const std::vector<std::int64_t>& values, std::int64_t cap_) {
  SumSet s(cap_);
  for (std::int64_t v : values) s.add(v);
  return s;
}

void SumSet::add(std::int64_t v) {
  if (v < 0 || v > cap) throw std::invalid_argument("SumSet::add: value outside domain");
  bits.set(static_cast<std::size_t>(v));
}

std::vector<std::int64_t> SumSet::values() const {
  std::vector<std::int64_t> out;
  bits.for_each_set([&](std::size_t i) { out.push_back(static_cast<std::int64_t>(i)); });
  return out;
}

void SumSet::prune_above(std::int64_t limit) {
  if (limit < 0) {
    *this = SumSet(0);
    return;
  }
  if (limit >= cap) return;
  bits.clear_above(static_cast<std::size_t>(limit));
  SumSet shrunk(limit);
  bits.for_each_set([&](std::size_t i) { shrunk.bits.set(i); });
  *this = std::move(shrunk);
}

BitVec boolean_convolve(const BitVec& u, const BitVec& v) {
  if (u.size() == 0 || v.size() == 0)
    throw std::invalid_argument("boolean_convolve: empty input");
  const std::size_t out_len = u.size() + v.size() - 1;
  BitVec out(out_len);
  if (out_len <= 64) {
    u.for_each_set([&](std::size_t i) {
      v.for_each_set([&](std::size_t j) { out.set(i + j); });
    });
    return out;
  }
  std::vector<std::uint32_t> counts = detail::conv_counts(u, v);
  for (std::size_t k = 0; k < out_len; ++k)
    if (counts[k]) out.set(k);
  return out;
}

SumSet sumset(const SumSet& x1, const SumSet& x2) {
  std::int64_t cap = x1.cap + x2.cap;
  check_cap(cap);
  SumSet out(cap);
  if (x1.empty() || x2.empty()) return out;
  out.bits = boolean_convolve(x1.bits, x2.bits);
  return out;
}

SumSet sumset_naive(const SumSet& x1, const SumSet& x2) {
  std::int64_t cap = x1.cap + x2.cap;
  check_cap(cap);
  SumSet out(cap);
  if (x1.empty() || x2.empty()) return out;
  for (std::int64_t a : x1.values())
    for (std::int64_t b : x2.values()) out.add(a + b);
  return out;
}

namespace {

SumSet subset_sums_rec(const std::vector<std::int64_t>& xs, std::size_t lo, std::size_t hi) {
  if (lo == hi) return SumSet::of({0});
  if (hi - lo == 1) {
    SumSet s(xs[lo]);
    s.add(0);
    s.add(xs[lo]);
    return s;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return sumset(subset_sums_rec(xs, lo, mid), subset_sums_rec(xs, mid, hi));
}

}  // namespace

SumSet subset_sums(std::vector<std::int64_t> xs) {
  std::int64_t total = 0;
  for (std::int64_t x : xs) {
    if (x <= 0) throw std::invalid_argument("subset_sums: elements must be positive");
    total += x;
  }
  check_cap(total);
  std::sort(xs.begin(), xs.end(), std::greater<>());
  return subset_sums_rec(xs, 0, xs.size());
}

SumSet subset_sums_naive(const std::vector<std::int64_t>& xs) {
  std::int64_t total = 0;
  for (std::int64_t x : xs) {
    if (x <= 0) throw std::invalid_argument("subset_sums_naive: elements must be positive");
    total += x;
  }
  if (xs.size() > 20 && total > 1000000)
    throw std::invalid_argument("subset_sums_naive: input too large for the oracle");
  SumSet s(total);
  s.add(0);
  for (std::int64_t x : xs)
    s.bits.or_shifted(s.bits, static_cast<std::size_t>(x));
  return s;
}

}  // namespace tardy
