// Analysis front: per-frame acoustic features and closed-loop quantized
// excitation.
#pragma once

#include <array>
#include <vector>

#include "voxel/dsp.hpp"

namespace voxel {

// 20 static parameters per 10 ms frame.
struct AcousticFrame {
  Cepstrum cepstrum;
  double pitch = 0.0;       // normalized log pitch in [0, 1]; 0 = unvoiced
  double pitch_corr = 0.0;  // [0, 1]
};

struct FeatureTrack {
  std::vector<AcousticFrame> frames;  // uniform 10 ms hop
};

namespace features {

constexpr int kMinPitchLag = 40;   // 400 Hz
constexpr int kMaxPitchLag = 320;  // 50 Hz
constexpr double kVoicingThreshold = 0.3;
constexpr int kPitchContext = 2 * kMaxPitchLag;  // 640 samples

struct PitchResult {
  int period = 0;     // samples; 0 = unvoiced
  double corr = 0.0;  // [0, 1]
};

// Normalized autocorrelation over lags [40, 320] on the last 320 samples of
// the context; ascending lag scan with strict improvement, so harmonic ties
// resolve to the shortest lag.
PitchResult detect_pitch(const std::vector<double>& context, int sample_rate);

FeatureTrack extract_features(const AudioBuffer& audio);

// Closed-loop quantization of the prediction residual. `audio` must already
// be pre-emphasized; `lpc_per_frame` holds 16 coefficients per 160-sample
// frame. Returns one mu-law code per sample, padded to whole frames.
std::vector<uint8_t> extract_excitation(const AudioBuffer& audio,
                                        const std::vector<std::array<double, kLpcOrder>>& lpc_per_frame);

}  // namespace features
}  // namespace voxel
