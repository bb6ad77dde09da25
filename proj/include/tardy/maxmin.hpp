#pragma once

#include "tardy/extint.hpp"

namespace tardy {

// (max,min)-convolution: C[k] = max over i+j=k of min(A[i], B[j]).
// Inputs must have equal length n+1; the output has length 2n+1.

// Quadratic reference implementation.
ExtVec maxmin_conv_naive(const ExtVec& a, const ExtVec& b);

// Subquadratic algorithm: value thresholds at sqrt-sized rank groups
// over the combined sorted values, one exact boolean convolution per
// distinct threshold, then a per-entry resolution scan over the
// located value bucket. Sentinels are clamped to just outside the
// finite value range for the rank ordering and restored on output.
ExtVec maxmin_conv_fast(const ExtVec& a, const ExtVec& b);

}  // namespace tardy
