// Maximum-likelihood trajectory generation over statics + delta + delta-delta
// parameter streams, plus the delta-target construction used for training.
#pragma once

#include <array>
#include <vector>

#include "voxel/common.hpp"

namespace voxel::mlpg {

// First/second-order windows over frame offsets -1..+1. Edge frames are
// replicated where a window overhangs the sequence.
constexpr std::array<double, 3> kDelta1 = {-0.5, 0.0, 0.5};
constexpr std::array<double, 3> kDelta2 = {1.0, -2.0, 1.0};

// Per-frame means over [statics | delta | delta-delta] blocks of 20, with a
// global diagonal variance per dimension.
struct Problem {
  size_t frames = 0;
  std::vector<double> means;                 // frames x 60, row-major
  std::array<double, kNumParams> variances;  // all positive

  Problem() { variances.fill(1.0); }
};

// statics: T x 20 row-major -> T x 60 with the fixed windows applied.
std::vector<double> append_deltas(const std::vector<double>& statics, size_t frames);

// Banded Cholesky solve (bandwidth 2) of the per-dimension normal equations.
// Returns T x 20 statics. The 20 dimensions solve independently and run in
// parallel up to the LPC_VOXEL_THREADS cap.
std::vector<double> solve(const Problem& p);

// Same contract via explicit dense window-matrix construction and a dense
// solve; kept as the independent cross-check for `solve`.
std::vector<double> dense_oracle(const Problem& p);

}  // namespace voxel::mlpg
