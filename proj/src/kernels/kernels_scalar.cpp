// Reference kernels. These define the arithmetic contract: every variant
// must match this file bit for bit.
//
// Accumulation pattern for dot products: element i goes to partial sum
// i mod LANES via fma, partial sums reduce in a fixed binary tree. This is
// exactly the lane structure of the 256-bit SIMD variants, so matching them
// costs the reference nothing but the order of additions.
#include "voxel/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace voxel::kernels {

namespace {

float reduce8(const float* a) {
  float s04 = a[0] + a[4];
  float s15 = a[1] + a[5];
  float s26 = a[2] + a[6];
  float s37 = a[3] + a[7];
  return (s04 + s26) + (s15 + s37);
}

double reduce4(const double* a) {
  return (a[0] + a[2]) + (a[1] + a[3]);
}

float dot_f32(const float* x, const float* y, size_t n) {
  float acc[kLanesF32] = {0, 0, 0, 0, 0, 0, 0, 0};
  for (size_t i = 0; i < n; ++i) acc[i % kLanesF32] = std::fmaf(x[i], y[i], acc[i % kLanesF32]);
  return reduce8(acc);
}

void matvec_f32(const float* w, const float* x, size_t rows, size_t cols, float* y) {
  for (size_t r = 0; r < rows; ++r) y[r] = dot_f32(w + r * cols, x, cols);
}

void sparse_matvec_f32(const BlockSparseF32& w, const float* x, float* y) {
  for (size_t r = 0; r < w.rows; ++r) {
    float acc[kLanesF32] = {0, 0, 0, 0, 0, 0, 0, 0};
    const float* v = w.values.data() + size_t(w.row_ptr[r]) * kLanesF32;
    for (uint32_t b = w.row_ptr[r]; b < w.row_ptr[r + 1]; ++b, v += kLanesF32) {
      const float* xb = x + w.block_col[b];
      for (size_t k = 0; k < kLanesF32; ++k) acc[k] = std::fmaf(xb[k], v[k], acc[k]);
    }
    y[r] = reduce8(acc);
  }
}

double dot_f64(const double* x, const double* y, size_t n) {
  double acc[kLanesF64] = {0, 0, 0, 0};
  for (size_t i = 0; i < n; ++i) acc[i % kLanesF64] = std::fma(x[i], y[i], acc[i % kLanesF64]);
  return reduce4(acc);
}

void matvec_f64(const double* w, const double* x, size_t rows, size_t cols, double* y) {
  for (size_t r = 0; r < rows; ++r) y[r] = dot_f64(w + r * cols, x, cols);
}

}  // namespace

const Ops scalar_ops = {"scalar", dot_f32, matvec_f32, sparse_matvec_f32, dot_f64, matvec_f64};

BlockSparseF32 compile_block_sparse(const float* weights, const float* mask,
                                    size_t rows, size_t cols) {
  if (cols % kLanesF32 != 0)
    throw std::invalid_argument("compile_block_sparse: cols must be a multiple of 8");
  BlockSparseF32 m;
  m.rows = rows;
  m.cols = cols;
  m.row_ptr.reserve(rows + 1);
  m.row_ptr.push_back(0);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; c += kLanesF32) {
      bool keep = mask == nullptr;
      if (mask != nullptr)
        for (size_t k = 0; k < kLanesF32; ++k) keep = keep || mask[r * cols + c + k] != 0.0f;
      if (!keep) continue;
      m.block_col.push_back(uint32_t(c));
      for (size_t k = 0; k < kLanesF32; ++k) {
        float v = weights[r * cols + c + k];
        if (mask != nullptr && mask[r * cols + c + k] == 0.0f) v = 0.0f;
        m.values.push_back(v);
      }
    }
    m.row_ptr.push_back(uint32_t(m.block_col.size()));
  }
  return m;
}

}  // namespace voxel::kernels
