// NEON kernels (aarch64). Two q-registers emulate the 8-lane f32 layout of
// the reference; f64 uses two 2-lane registers for the 4-lane layout. vfma
// matches fmaf per lane and reductions follow the reference tree.
#if defined(__aarch64__)

#include "voxel/kernels.hpp"

#include <arm_neon.h>

#include <cmath>

namespace voxel::kernels {

namespace {

float reduce8_neon(float32x4_t lo, float32x4_t hi) {
  float32x4_t s = vaddq_f32(lo, hi);  // {0+4, 1+5, 2+6, 3+7}
  float s04 = vgetq_lane_f32(s, 0), s15 = vgetq_lane_f32(s, 1);
  float s26 = vgetq_lane_f32(s, 2), s37 = vgetq_lane_f32(s, 3);
  return (s04 + s26) + (s15 + s37);
}

float dot_f32(const float* x, const float* y, size_t n) {
  float32x4_t acc_lo = vdupq_n_f32(0.0f);  // lanes 0..3
  float32x4_t acc_hi = vdupq_n_f32(0.0f);  // lanes 4..7
  size_t n8 = n - n % kLanesF32;
  for (size_t i = 0; i < n8; i += kLanesF32) {
    acc_lo = vfmaq_f32(acc_lo, vld1q_f32(x + i), vld1q_f32(y + i));
    acc_hi = vfmaq_f32(acc_hi, vld1q_f32(x + i + 4), vld1q_f32(y + i + 4));
  }
  if (n8 != n) {
    float lanes[kLanesF32];
    vst1q_f32(lanes, acc_lo);
    vst1q_f32(lanes + 4, acc_hi);
    for (size_t i = n8; i < n; ++i) lanes[i - n8] = std::fmaf(x[i], y[i], lanes[i - n8]);
    acc_lo = vld1q_f32(lanes);
    acc_hi = vld1q_f32(lanes + 4);
  }
  return reduce8_neon(acc_lo, acc_hi);
}

void matvec_f32(const float* w, const float* x, size_t rows, size_t cols, float* y) {
  for (size_t r = 0; r < rows; ++r) y[r] = dot_f32(w + r * cols, x, cols);
}

void sparse_matvec_f32(const BlockSparseF32& w, const float* x, float* y) {
  for (size_t r = 0; r < w.rows; ++r) {
    float32x4_t acc_lo = vdupq_n_f32(0.0f);
    float32x4_t acc_hi = vdupq_n_f32(0.0f);
    const float* v = w.values.data() + size_t(w.row_ptr[r]) * kLanesF32;
    for (uint32_t b = w.row_ptr[r]; b < w.row_ptr[r + 1]; ++b, v += kLanesF32) {
      const float* xb = x + w.block_col[b];
      acc_lo = vfmaq_f32(acc_lo, vld1q_f32(xb), vld1q_f32(v));
      acc_hi = vfmaq_f32(acc_hi, vld1q_f32(xb + 4), vld1q_f32(v + 4));
    }
    y[r] = reduce8_neon(acc_lo, acc_hi);
  }
}

double dot_f64(const double* x, const double* y, size_t n) {
  float64x2_t acc_lo = vdupq_n_f64(0.0);  // lanes 0,1
  float64x2_t acc_hi = vdupq_n_f64(0.0);  // lanes 2,3
  size_t n4 = n - n % kLanesF64;
  for (size_t i = 0; i < n4; i += kLanesF64) {
    acc_lo = vfmaq_f64(acc_lo, vld1q_f64(x + i), vld1q_f64(y + i));
    acc_hi = vfmaq_f64(acc_hi, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  if (n4 != n) {
    double lanes[kLanesF64];
    vst1q_f64(lanes, acc_lo);
    vst1q_f64(lanes + 2, acc_hi);
    for (size_t i = n4; i < n; ++i) lanes[i - n4] = std::fma(x[i], y[i], lanes[i - n4]);
    acc_lo = vld1q_f64(lanes);
    acc_hi = vld1q_f64(lanes + 2);
  }
  double s02 = vgetq_lane_f64(acc_lo, 0) + vgetq_lane_f64(acc_hi, 0);
  double s13 = vgetq_lane_f64(acc_lo, 1) + vgetq_lane_f64(acc_hi, 1);
  return s02 + s13;
}

void matvec_f64(const double* w, const double* x, size_t rows, size_t cols, double* y) {
  for (size_t r = 0; r < rows; ++r) y[r] = dot_f64(w + r * cols, x, cols);
}

}  // namespace

const Ops neon_ops = {"neon", dot_f32, matvec_f32, sparse_matvec_f32, dot_f64, matvec_f64};

}  // namespace voxel::kernels

#endif  // aarch64
