#include "voxel/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace voxel::dsp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWarpHz = 8000.0;  // asinh(f / kWarpHz) band warp
constexpr int kFftSize = 512;       // analysis FFT (320-sample window, zero padded)

std::array<double, kNumBands + 2> compute_band_points() {
  std::array<double, kNumBands + 2> pts{};
  double zmax = std::asinh((kSampleRate / 2.0) / kWarpHz);
  for (int j = 0; j < kNumBands + 2; ++j)
    pts[j] = kWarpHz * std::sinh(zmax * j / double(kNumBands + 1));
  pts[0] = 0.0;
  pts[kNumBands + 1] = kSampleRate / 2.0;
  // Keep every center strictly below Nyquist.
  if (pts[kNumBands] >= kSampleRate / 2.0) pts[kNumBands] = kSampleRate / 2.0 - 1.0;
  return pts;
}

// In-place iterative radix-2 FFT.
void fft(std::vector<std::complex<double>>& a) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = -2.0 * kPi / double(len);
    std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

// Triangular pooling weights of each band over the FFT bins, normalized to
// sum to one per band. Computed once.
struct BandPooling {
  std::array<std::vector<std::pair<int, double>>, kNumBands> taps;
};

const BandPooling& pooling() {
  static const BandPooling p = [] {
    BandPooling bp;
    const auto& pts = band_points_hz();
    const double bin_hz = double(kSampleRate) / kFftSize;
    for (int b = 0; b < kNumBands; ++b) {
      double lo = pts[b], c = pts[b + 1], hi = pts[b + 2];
      double wsum = 0.0;
      std::vector<std::pair<int, double>> taps;
      for (int i = 0; i <= kFftSize / 2; ++i) {
        double f = i * bin_hz;
        double w = 0.0;
        if (f >= lo && f <= c && c > lo)
          w = (f - lo) / (c - lo);
        else if (f > c && f <= hi && hi > c)
          w = (hi - f) / (hi - c);
        if (w > 0.0) {
          taps.emplace_back(i, w);
          wsum += w;
        }
      }
      for (auto& t : taps) t.second /= wsum;
      bp.taps[b] = std::move(taps);
    }
    return bp;
  }();
  return p;
}

}  // namespace

const std::array<double, kNumBands + 2>& band_points_hz() {
  static const auto pts = compute_band_points();
  return pts;
}

const std::array<double, kNumBands>& band_centers_hz() {
  static const auto centers = [] {
    std::array<double, kNumBands> c{};
    const auto& pts = band_points_hz();
    for (int b = 0; b < kNumBands; ++b) c[b] = pts[b + 1];
    return c;
  }();
  return centers;
}

const std::array<double, kNumBands>& band_energy_weights() {
  static const auto weights = [] {
    std::array<double, kNumBands> g{};
    const auto& pts = band_points_hz();
    for (int b = 0; b < kNumBands; ++b) {
      double width = (pts[b + 2] - pts[b]) / 2.0;
      double omega = 2.0 * kPi * pts[b + 1] / kSampleRate;
      // |1 / (1 - beta e^{-jw})|^2
      double re = 1.0 - kPreemphasis * std::cos(omega);
      double im = kPreemphasis * std::sin(omega);
      g[b] = width / (re * re + im * im);
    }
    return g;
  }();
  return weights;
}

std::vector<double> dct_orthonormal(const std::vector<double>& x) {
  const size_t n = x.size();
  if (n == 0) throw InvalidArgument("dct_orthonormal: empty input");
  std::vector<double> out(n);
  const double s0 = std::sqrt(1.0 / double(n));
  const double s = std::sqrt(2.0 / double(n));
  for (size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += x[i] * std::cos(kPi * (2.0 * i + 1.0) * k / (2.0 * n));
    out[k] = (k == 0 ? s0 : s) * acc;
  }
  return out;
}

std::vector<double> idct_orthonormal(const std::vector<double>& x) {
  const size_t n = x.size();
  if (n == 0) throw InvalidArgument("idct_orthonormal: empty input");
  std::vector<double> out(n);
  const double s0 = std::sqrt(1.0 / double(n));
  const double s = std::sqrt(2.0 / double(n));
  for (size_t i = 0; i < n; ++i) {
    double acc = s0 * x[0];
    for (size_t k = 1; k < n; ++k) acc += s * x[k] * std::cos(kPi * (2.0 * i + 1.0) * k / (2.0 * n));
    out[i] = acc;
  }
  return out;
}

Cepstrum cepstrum_from_band_powers(const BandSpectrum& bands) {
  std::vector<double> logp(kNumBands);
  for (int b = 0; b < kNumBands; ++b) logp[b] = std::log10(std::max(bands.powers[b], kLogPowerFloor));
  auto c = dct_orthonormal(logp);
  Cepstrum out;
  std::copy(c.begin(), c.end(), out.coeffs.begin());
  return out;
}

BandSpectrum cepstrum_to_band_powers(const Cepstrum& c) {
  std::vector<double> cv(c.coeffs.begin(), c.coeffs.end());
  auto logp = idct_orthonormal(cv);
  BandSpectrum out;
  for (int b = 0; b < kNumBands; ++b) out.powers[b] = std::pow(10.0, logp[b]);
  return out;
}

double energy_of_cepstrum(const Cepstrum& c) {
  BandSpectrum bands = cepstrum_to_band_powers(c);
  const auto& g = band_energy_weights();
  double e = 0.0;
  for (int b = 0; b < kNumBands; ++b) e += g[b] * bands.powers[b];
  return e;
}

AudioBuffer preemphasis(const AudioBuffer& a, double beta) {
  if (beta < 0.0 || beta >= 1.0) throw InvalidArgument("preemphasis: beta must be in [0, 1)");
  AudioBuffer out;
  out.sample_rate = a.sample_rate;
  out.samples.resize(a.samples.size());
  double prev = 0.0;
  for (size_t n = 0; n < a.samples.size(); ++n) {
    out.samples[n] = a.samples[n] - beta * prev;
    prev = a.samples[n];
  }
  return out;
}

AudioBuffer deemphasis(const AudioBuffer& a, double beta) {
  if (beta < 0.0 || beta >= 1.0) throw InvalidArgument("deemphasis: beta must be in [0, 1)");
  AudioBuffer out;
  out.sample_rate = a.sample_rate;
  out.samples.resize(a.samples.size());
  double prev = 0.0;
  for (size_t n = 0; n < a.samples.size(); ++n) {
    prev = a.samples[n] + beta * prev;
    out.samples[n] = prev;
  }
  return out;
}

int mulaw_encode(double x) {
  x = std::clamp(x, -1.0, 1.0);
  double sign = x < 0.0 ? -1.0 : 1.0;
  double y = 128.0 + 128.0 * sign * std::log(1.0 + 255.0 * std::abs(x)) / std::log(256.0);
  return int(std::clamp(std::lround(y), 0L, 255L));
}

double mulaw_decode(int q) {
  if (q < 0 || q > 255) throw InvalidArgument("mulaw_decode: code out of range");
  double u = (q - 128) / 128.0;
  double sign = u < 0.0 ? -1.0 : 1.0;
  return sign * (std::pow(256.0, std::abs(u)) - 1.0) / 255.0;
}

BandSpectrum band_analyze(const std::vector<double>& frame) {
  if (frame.size() != kWindowSamples)
    throw InvalidArgument("band_analyze: frame must be exactly 320 samples");
  std::vector<std::complex<double>> buf(kFftSize, {0.0, 0.0});
  for (int n = 0; n < kWindowSamples; ++n) {
    double w = 0.5 - 0.5 * std::cos(2.0 * kPi * n / kWindowSamples);  // periodic Hann
    buf[n] = frame[n] * w;
  }
  fft(buf);
  std::vector<double> power(kFftSize / 2 + 1);
  for (int i = 0; i <= kFftSize / 2; ++i) power[i] = std::norm(buf[i]) / double(kWindowSamples);
  BandSpectrum out;
  const auto& pool = pooling();
  for (int b = 0; b < kNumBands; ++b) {
    double acc = 0.0;
    for (const auto& [bin, w] : pool.taps[b]) acc += w * power[bin];
    out.powers[b] = acc;
  }
  return out;
}

}  // namespace voxel::dsp

namespace voxel {

double pitch_hz_to_feature(double f0_hz) {
  if (f0_hz <= 0.0) return 0.0;
  return std::clamp(std::log2(f0_hz / 62.5) / 3.0, 0.0, 1.0);
}

double log2_pitch_to_feature(double log2_hz) {
  if (log2_hz <= 0.0) return 0.0;
  return std::clamp((log2_hz - std::log2(62.5)) / 3.0, 0.0, 1.0);
}

}  // namespace voxel
