#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tardy/bitvec.hpp"

namespace tardy {

// Dense set of non-negative integers over the domain {0, ..., cap}.
struct SumSet {
  std::int64_t cap = 0;
  BitVec bits;  // size cap + 1

  SumSet() : bits(1) {}
  explicit SumSet(std::int64_t cap_);
  static SumSet of(std::initializer_list<std::int64_t> values);
  static SumSet of(const std::vector<std::int64_t>& values, std::int64_t cap_);

  bool contains(std::int64_t v) const {
    return v >= 0 && v <= cap && bits.test(static_cast<std::size_t>(v));
  }
  void add(std::int64_t v);
  bool empty() const { return !bits.any(); }
  std::size_t count() const { return bits.count(); }
  // Largest member, or -1 when the set is empty.
  std::int64_t max_value() const { return bits.max_set(); }
  std::vector<std::int64_t> values() const;
  // Drops every member strictly greater than limit and shrinks cap to
  // min(cap, max(limit, 0)).
  void prune_above(std::int64_t limit);

  friend bool operator==(const SumSet& a, const SumSet& b) {
    return a.cap == b.cap && a.bits == b.bits;
  }
};

// Exact boolean convolution: out[k] = OR over i+j=k of u[i] & v[j],
// length |u| + |v| - 1. Computed through exact integer polynomial
// multiplication (number-theoretic transform; schoolbook below a small
// cutoff). Rejects empty inputs.
BitVec boolean_convolve(const BitVec& u, const BitVec& v);

// Sumset {x1 + x2 : x1 in X1, x2 in X2}. Empty if either side is
// empty; cap is always X1.cap + X2.cap.
SumSet sumset(const SumSet& x1, const SumSet& x2);

// Reference double-loop implementation of the same contract.
SumSet sumset_naive(const SumSet& x1, const SumSet& x2);

// Set of all subset sums of the multiset xs (duplicates contribute).
// cap = sum of xs; always contains 0. Splits the descending-sorted
// element list at the midpoint and combines the halves' subset sums
// with sumset().
SumSet subset_sums(std::vector<std::int64_t> xs);

// Bit-shift DP oracle for subset_sums. Rejects inputs with more than
// 20 elements and sum above 10^6.
SumSet subset_sums_naive(const std::vector<std::int64_t>& xs);

}  // namespace tardy
