#pragma once

#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace tardy {

// Fixed-size dense bit vector with the word-level operations the
// sum-set and DP code needs. Bits beyond size() are kept zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool empty_domain() const { return n_ == 0; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }

  // Index of the highest set bit, or -1 when none.
  std::ptrdiff_t max_set() const {
    for (std::size_t wi = w_.size(); wi-- > 0;) {
      if (w_[wi]) {
        int hi = 63 - __builtin_clzll(w_[wi]);
        return static_cast<std::ptrdiff_t>(wi * 64 + static_cast<std::size_t>(hi));
      }
    }
    return -1;
  }

  // Clears every bit at an index strictly greater than limit.
  void clear_above(std::size_t limit) {
    if (limit + 1 >= n_) return;
    std::size_t wi = (limit + 1) >> 6;
    std::size_t bi = (limit + 1) & 63;
    if (bi) {
      w_[wi] &= (std::uint64_t{1} << bi) - 1;
      ++wi;
    }
    for (; wi < w_.size(); ++wi) w_[wi] = 0;
  }

  // this |= (src << shift), truncated to this->size().
  void or_shifted(const BitVec& src, std::size_t shift) {
    if (shift >= n_) return;
    std::size_t word_shift = shift >> 6;
    unsigned bit_shift = static_cast<unsigned>(shift & 63);
    for (std::size_t wi = w_.size(); wi-- > word_shift;) {
      std::size_t si = wi - word_shift;
      std::uint64_t v = 0;
      if (si < src.w_.size()) v = src.w_[si] << bit_shift;
      if (bit_shift && si > 0 && si - 1 < src.w_.size())
        v |= src.w_[si - 1] >> (64 - bit_shift);
      w_[wi] |= v;
    }
    trim();
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
        fn(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const BitVec& a, const BitVec& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace tardy
