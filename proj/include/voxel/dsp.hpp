// Signal-processing primitives: orthonormal cosine transforms, the 18-band
// analysis table, pre-/de-emphasis, mu-law companding, and the cepstral
// energy functional used by the enhancement filter.
#pragma once

#include <array>
#include <vector>

#include "voxel/common.hpp"

namespace voxel {

// 18 log10-power-domain coefficients (orthonormal DCT-II of log10 band powers).
struct Cepstrum {
  std::array<double, kNumBands> coeffs{};
};

// Linear power per analysis band.
struct BandSpectrum {
  std::array<double, kNumBands> powers{};
};

struct AudioBuffer {
  std::vector<double> samples;  // [-1, 1]
  int sample_rate = kSampleRate;
};

namespace dsp {

// Fixed band geometry over 0..8 kHz: 20 edge points, mildly warped so bands
// widen toward high frequency; band b spans [point b, point b+2] with a
// triangular peak at its center, point b+1.
const std::array<double, kNumBands + 2>& band_points_hz();
const std::array<double, kNumBands>& band_centers_hz();
// Energy weight per band: effective width (Hz) times the inverse
// pre-emphasis power gain at the band center.
const std::array<double, kNumBands>& band_energy_weights();

constexpr double kLogPowerFloor = 1e-10;

std::vector<double> dct_orthonormal(const std::vector<double>& x);
std::vector<double> idct_orthonormal(const std::vector<double>& x);

Cepstrum cepstrum_from_band_powers(const BandSpectrum& bands);  // log10 with floor, then DCT
BandSpectrum cepstrum_to_band_powers(const Cepstrum& c);        // 10^idct, strictly positive

double energy_of_cepstrum(const Cepstrum& c);

AudioBuffer preemphasis(const AudioBuffer& a, double beta);
AudioBuffer deemphasis(const AudioBuffer& a, double beta);

int mulaw_encode(double x);        // saturating, 0..255
double mulaw_decode(int q);        // exact inverse of the companding law
// Worst-case reconstruction error of decode(encode(x)) over [-1, 1]:
// max companding slope times one code width.
constexpr double kMulawMaxStep = 0.043491587799839710;  // ln(256)*256/(255*128)

// One 20 ms window (320 samples) -> 18 band powers (periodic Hann window,
// power spectrum pooled by the triangular band weights).
BandSpectrum band_analyze(const std::vector<double>& frame);

}  // namespace dsp
}  // namespace voxel
