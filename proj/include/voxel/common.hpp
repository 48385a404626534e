// Shared error types and small numeric helpers.
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace voxel {

// Error taxonomy; the CLI maps these onto its exit-code contract.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violations on module operations.
struct InvalidArgument : Error {
  using Error::Error;
};

// Filesystem / OS-level I/O failures.
struct IoError : Error {
  using Error::Error;
};

// Malformed or unsupported file content.
struct FormatError : IoError {
  using IoError::IoError;
};

// Numeric failures during computation (divergence, NaN activations).
struct NumericError : Error {
  using Error::Error;
};

constexpr int kSampleRate = 16000;   // Hz
constexpr int kFrameSamples = 160;   // 10 ms hop
constexpr int kWindowSamples = 320;  // 20 ms analysis window
constexpr int kNumBands = 18;
constexpr int kNumStatics = 20;      // 18 cepstra + pitch + pitch correlation
constexpr int kNumParams = 60;       // statics + deltas + delta-deltas
constexpr int kLpcOrder = 16;
constexpr double kPreemphasis = 0.85;

// Normalized log-pitch mapping: 62.5 Hz -> 0, 500 Hz -> 1.
double pitch_hz_to_feature(double f0_hz);
double log2_pitch_to_feature(double log2_hz);

}  // namespace voxel
