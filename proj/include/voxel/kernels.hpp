// Runtime-dispatched arithmetic kernels.
//
// The scalar variant is the reference: it defines the exact floating-point
// semantics (fused multiply-add per element, LANES strided partial sums,
// fixed binary reduction tree). SIMD variants must reproduce the reference
// bit for bit, so variant selection never changes results. Equivalence is
// asserted with exact equality in tests/test_kernels.cpp.
//
// Selection order: LPC_VOXEL_KERNEL env var ("scalar", "avx2", "neon",
// "auto"), then CPU feature detection, then scalar.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace voxel::kernels {

// Partial-sum lanes of the f32 reduction (f64 uses kLanesF64).
constexpr size_t kLanesF32 = 8;
constexpr size_t kLanesF64 = 4;

// Row-major block-sparse matrix with 8-wide column blocks aligned to
// multiples of 8. A block is stored iff any of its 8 mask entries is set;
// stored values are weight*mask, so skipped blocks contribute exact zeros
// and an all-ones mask reproduces the dense matvec bit for bit.
struct BlockSparseF32 {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<uint32_t> row_ptr;    // rows + 1 entries into block_col/values
  std::vector<uint32_t> block_col;  // column offset of each block (multiple of 8)
  std::vector<float> values;        // 8 values per block

  double density() const {
    return rows && cols ? double(block_col.size()) * 8.0 / (double(rows) * double(cols)) : 0.0;
  }
};

// mask == nullptr means all-ones. cols must be a multiple of 8.
BlockSparseF32 compile_block_sparse(const float* weights, const float* mask,
                                    size_t rows, size_t cols);

struct Ops {
  const char* name;

  float (*dot_f32)(const float* x, const float* y, size_t n);
  // y = W x with W row-major rows x cols.
  void (*matvec_f32)(const float* w, const float* x, size_t rows, size_t cols, float* y);
  void (*sparse_matvec_f32)(const BlockSparseF32& w, const float* x, float* y);

  double (*dot_f64)(const double* x, const double* y, size_t n);
  void (*matvec_f64)(const double* w, const double* x, size_t rows, size_t cols, double* y);
};

// The runtime-selected variant (resolved once, thread-safe).
const Ops& active();

// Lookup by name for equivalence tests; nullptr when the variant is not
// compiled in or not runnable on this CPU.
const Ops* by_name(const std::string& name);

// All variants runnable on this CPU, scalar first.
std::vector<const Ops*> available();

extern const Ops scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
extern const Ops avx2_ops;
bool cpu_has_avx2_fma();
#endif
#if defined(__aarch64__)
extern const Ops neon_ops;
#endif

}  // namespace voxel::kernels
