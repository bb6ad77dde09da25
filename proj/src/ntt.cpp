#include "ntt.hpp"

#include <stdexcept>

namespace tardy::detail {

namespace {

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % kNttMod);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp) {
  std::uint32_t r = 1;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base);
    base = mul_mod(base, base);
    exp >>= 1;
  }
  return r;
}

void transform(std::vector<std::uint32_t>& a, bool invert) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint32_t wlen = pow_mod(kNttRoot, (kNttMod - 1) / len);
    if (invert) wlen = pow_mod(wlen, kNttMod - 2);
    for (std::size_t i = 0; i < n; i += len) {
      std::uint32_t w = 1;
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::uint32_t u = a[i + j];
        std::uint32_t v = mul_mod(a[i + j + len / 2], w);
        a[i + j] = u + v < kNttMod ? u + v : u + v - kNttMod;
        a[i + j + len / 2] = u >= v ? u - v : u + kNttMod - v;
        w = mul_mod(w, wlen);
      }
    }
  }
  if (invert) {
    std::uint32_t inv_n = pow_mod(static_cast<std::uint32_t>(n % kNttMod), kNttMod - 2);
    for (auto& x : a) x = mul_mod(x, inv_n);
  }
}

std::vector<std::uint32_t> transform_bits(const BitVec& bits, std::size_t conv_size) {
  std::vector<std::uint32_t> a(conv_size, 0);
  bits.for_each_set([&](std::size_t i) { a[i] = 1; });
  transform(a, false);
  return a;
}

}  // namespace

std::vector<std::uint32_t> conv_counts(const BitVec& u, const BitVec& v) {
  const std::size_t out_len = u.size() + v.size() - 1;
  std::size_t sz = 1;
  while (sz < out_len) sz <<= 1;
  if (sz > kNttMaxSize) throw std::length_error("ntt: transform size exceeds 2^27");
  std::vector<std::uint32_t> a = transform_bits(u, sz);
  std::vector<std::uint32_t> b = transform_bits(v, sz);
  for (std::size_t i = 0; i < sz; ++i) a[i] = mul_mod(a[i], b[i]);
  transform(a, true);
  a.resize(out_len);
  return a;
}

}  // namespace tardy::detail
