// AVX2+FMA kernels. Bit-exact with the scalar reference: contiguous 8-wide
// loads put element i into lane i mod 8, vfmadd matches fmaf per lane, and
// the horizontal reduction follows the same tree as reduce8/reduce4.
// Compiled only on x86-64; runnable only when the CPU reports AVX2 and FMA.
#if defined(__x86_64__) || defined(_M_X64)

#include "voxel/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace voxel::kernels {

namespace {

float reduce8_avx(__m256 acc) {
  __m128 lo = _mm256_castps256_ps128(acc);       // lanes 0..3
  __m128 hi = _mm256_extractf128_ps(acc, 1);     // lanes 4..7
  __m128 s = _mm_add_ps(lo, hi);                 // {0+4, 1+5, 2+6, 3+7}
  __m128 sh = _mm_movehl_ps(s, s);               // {2+6, 3+7, ...}
  __m128 t = _mm_add_ps(s, sh);                  // {04+26, 15+37, ...}
  __m128 u = _mm_shuffle_ps(t, t, 0x1);          // {15+37, ...}
  return _mm_cvtss_f32(_mm_add_ss(t, u));        // (04+26) + (15+37)
}

double reduce4_avx(__m256d acc) {
  __m128d lo = _mm256_castpd256_pd128(acc);      // lanes 0,1
  __m128d hi = _mm256_extractf128_pd(acc, 1);    // lanes 2,3
  __m128d s = _mm_add_pd(lo, hi);                // {0+2, 1+3}
  __m128d sh = _mm_unpackhi_pd(s, s);
  return _mm_cvtsd_f64(_mm_add_sd(s, sh));       // (0+2) + (1+3)
}

float dot_f32(const float* x, const float* y, size_t n) {
  __m256 acc = _mm256_setzero_ps();
  size_t n8 = n - n % kLanesF32;
  for (size_t i = 0; i < n8; i += kLanesF32)
    acc = _mm256_fmadd_ps(_mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i), acc);
  if (n8 != n) {
    // Tail elements continue their lane's fma chain, as in the reference.
    alignas(32) float lanes[kLanesF32];
    _mm256_store_ps(lanes, acc);
    for (size_t i = n8; i < n; ++i) lanes[i - n8] = std::fmaf(x[i], y[i], lanes[i - n8]);
    acc = _mm256_load_ps(lanes);
  }
  return reduce8_avx(acc);
}

void matvec_f32(const float* w, const float* x, size_t rows, size_t cols, float* y) {
  for (size_t r = 0; r < rows; ++r) y[r] = dot_f32(w + r * cols, x, cols);
}

void sparse_matvec_f32(const BlockSparseF32& w, const float* x, float* y) {
  for (size_t r = 0; r < w.rows; ++r) {
    __m256 acc = _mm256_setzero_ps();
    const float* v = w.values.data() + size_t(w.row_ptr[r]) * kLanesF32;
    for (uint32_t b = w.row_ptr[r]; b < w.row_ptr[r + 1]; ++b, v += kLanesF32)
      acc = _mm256_fmadd_ps(_mm256_loadu_ps(x + w.block_col[b]), _mm256_loadu_ps(v), acc);
    y[r] = reduce8_avx(acc);
  }
}

double dot_f64(const double* x, const double* y, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t n4 = n - n % kLanesF64;
  for (size_t i = 0; i < n4; i += kLanesF64)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  if (n4 != n) {
    alignas(32) double lanes[kLanesF64];
    _mm256_store_pd(lanes, acc);
    for (size_t i = n4; i < n; ++i) lanes[i - n4] = std::fma(x[i], y[i], lanes[i - n4]);
    acc = _mm256_load_pd(lanes);
  }
  return reduce4_avx(acc);
}

void matvec_f64(const double* w, const double* x, size_t rows, size_t cols, double* y) {
  for (size_t r = 0; r < rows; ++r) y[r] = dot_f64(w + r * cols, x, cols);
}

}  // namespace

const Ops avx2_ops = {"avx2", dot_f32, matvec_f32, sparse_matvec_f32, dot_f64, matvec_f64};

bool cpu_has_avx2_fma() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace voxel::kernels

#endif  // x86-64
