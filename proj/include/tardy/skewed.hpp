#pragma once

#include "tardy/extint.hpp"

namespace tardy {

// (max,min)-skewed-convolution: C[k] = max over i+j=k of
// min(A[i], B[j] + k). Inputs have equal length n+1, output 2n+1.

// Quadratic reference implementation (sentinel-preserving B[j] + k).
ExtVec skewed_conv_naive(const ExtVec& a, const ExtVec& b);

// Componentwise floor(v / 2^level), rounding toward -inf; sentinels
// pass through.
ExtVec level_vector(const ExtVec& v, int level);

// One level of the refinement recursion: the level-l problem
//   C_l[k] = max over i+j=k of min(A_l[i], B_l[j] + floor(k/2^l))
// together with an approximation D_l satisfying
// C_l[k]-2 <= D_l[k] <= C_l[k] on finite entries (and matching
// sentinels elsewhere).
struct LevelState {
  int level = 0;
  ExtVec a;       // floor(A / 2^level)
  ExtVec b;       // floor(B / 2^level)
  ExtVec approx;  // good approximation of C_level
};

// Computes the exact C_level from a LevelState. Light output indices
// (few candidate entries inside the approximation window) are resolved
// by direct scans over a value-sorted index; the rest go through
// per-value indicator convolutions against the other vector. The
// light/heavy threshold is ceil((n+1)^delta).
ExtVec refine_level(const LevelState& state, double delta = 0.75);

// The two per-side vectors whose pointwise max is refine_level's
// output: left[k] is the largest A-value inside the approximation
// window with a covering partner, right[k] the largest B[j]+floor(k/2^l)
// inside the window that its partner covers. Exposed for validation;
// indices with sentinel approximations carry the sentinel on both sides.
struct LevelSides {
  ExtVec left, right;
};
LevelSides refine_level_sides(const LevelState& state, double delta = 0.75);

// Full algorithm: start from the coarsest level (where the additive
// k-term vanishes and one (max,min)-convolution suffices), then refine
// level by level with approx = 2 * C_{level+1}.
ExtVec skewed_conv_fast(const ExtVec& a, const ExtVec& b, double delta = 0.75);

// The combination operator
//   C[x] = max over x1+x2=x of min(A[x1], B[x2] - x1),
// computed via one skewed convolution plus O(n) shifts. Unequal-length
// inputs are padded with -inf.
ExtVec skew_combine(const ExtVec& a, const ExtVec& b);

// (max,min)-convolution through the skewed engine: scale both inputs
// by N = 2n+1, convolve, floor-divide by N. Exists as a validation
// bridge between the two engines. Rejects finite values whose scaled
// magnitude would overflow.
ExtVec maxmin_via_skewed(const ExtVec& a, const ExtVec& b);

}  // namespace tardy
