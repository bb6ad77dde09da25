#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace tardy {

// Extended integer: a finite signed 64-bit value or one of the two
// infinities. The encoding reserves INT64_MIN/INT64_MAX for -inf/+inf,
// which keeps the natural integer order, so comparisons are plain
// integer comparisons. Finite magnitudes are expected to stay below
// 2^61 so that a finite+finite addition cannot collide with a sentinel.
struct ExtInt {
  static constexpr std::int64_t kNegRaw = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t kPosRaw = std::numeric_limits<std::int64_t>::max();

  std::int64_t raw = kNegRaw;

  constexpr ExtInt() = default;

  static constexpr ExtInt neg_inf() { return ExtInt{kNegRaw}; }
  static constexpr ExtInt pos_inf() { return ExtInt{kPosRaw}; }
  static constexpr ExtInt finite(std::int64_t v) {
    assert(v != kNegRaw && v != kPosRaw);
    return ExtInt{v};
  }

  constexpr bool is_neg_inf() const { return raw == kNegRaw; }
  constexpr bool is_pos_inf() const { return raw == kPosRaw; }
  constexpr bool is_finite() const { return !is_neg_inf() && !is_pos_inf(); }

  constexpr std::int64_t value() const {
    assert(is_finite());
    return raw;
  }

  friend constexpr auto operator<=>(ExtInt a, ExtInt b) = default;

 private:
  constexpr explicit ExtInt(std::int64_t r) : raw(r) {}
};

using ExtVec = std::vector<ExtInt>;

// Sentinel-preserving shift by a finite amount.
constexpr ExtInt ext_add(ExtInt a, std::int64_t shift) {
  if (!a.is_finite()) return a;
  return ExtInt::finite(a.value() + shift);
}

// Sentinel-preserving addition. Adding opposite infinities is a caller
// error and throws.
inline ExtInt ext_add(ExtInt a, ExtInt b) {
  if (a.is_finite() && b.is_finite()) return ExtInt::finite(a.value() + b.value());
  if (a.is_finite()) return b;
  if (b.is_finite()) return a;
  if (a != b) throw std::invalid_argument("ext_add: +inf + -inf is undefined");
  return a;
}

// Componentwise floor(a / 2^level); infinities pass through. Floor
// semantics hold for negative values as well.
constexpr ExtInt ext_floor_div_pow2(ExtInt a, int level) {
  assert(level >= 0);
  if (!a.is_finite()) return a;
  if (level >= 63) return ExtInt::finite(a.value() < 0 ? -1 : 0);
  return ExtInt::finite(a.value() >> level);  // arithmetic shift floors
}

constexpr ExtInt ext_double(ExtInt a) {
  if (!a.is_finite()) return a;
  return ExtInt::finite(2 * a.value());
}

constexpr ExtInt ext_min(ExtInt a, ExtInt b) { return a < b ? a : b; }
constexpr ExtInt ext_max(ExtInt a, ExtInt b) { return a < b ? b : a; }

inline std::string to_string(ExtInt a) {
  if (a.is_neg_inf()) return "-inf";
  if (a.is_pos_inf()) return "+inf";
  return std::to_string(a.value());
}

inline std::string to_string(const ExtVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  s += "]";
  return s;
}

}  // namespace tardy
