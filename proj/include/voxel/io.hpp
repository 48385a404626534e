// Bit-exact file formats.
//
//   WAV          RIFF/WAVE, PCM16, mono, 16 kHz only.
//   LPCF         feature tracks: magic "LPCF", version u16, frame count u32,
//                dims u16 (= 20), payload little-endian f32, frame-major.
//                Frame layout: 18 cepstra, pitch, pitch correlation.
//   LPCW         named tensors: magic "LPCW", version u16, tensor count u32,
//                then per tensor: name length u16 + UTF-8 name, rank u8,
//                dims u32 each, data little-endian f32 row-major.
//   unit files   text, one unit per line:
//                  label_id position duration_ms lp_init lp_final log_energy
//                with '#' comments; position is heading|middle|trailing.
//
// All multi-byte integers are little-endian. Every writer/reader pair round
// trips byte-exactly.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "voxel/dsp.hpp"
#include "voxel/features.hpp"
#include "voxel/prosody.hpp"

namespace voxel::io {

AudioBuffer read_wav(const std::string& path);
void write_wav(const AudioBuffer& a, const std::string& path);

FeatureTrack read_features(const std::string& path);
void write_features(const FeatureTrack& track, const std::string& path);

struct NamedTensor {
  std::string name;
  std::vector<uint32_t> dims;
  std::vector<float> data;  // row-major

  size_t element_count() const {
    size_t n = 1;
    for (auto d : dims) n *= d;
    return n;
  }
};

// Tensors keep file order so write(read(f)) is byte-identical.
struct WeightFile {
  uint16_t version = 1;
  std::vector<NamedTensor> tensors;

  const NamedTensor* find(const std::string& name) const;
  NamedTensor& add(const std::string& name, std::vector<uint32_t> dims);
};

WeightFile read_weights(const std::string& path);
void write_weights(const WeightFile& w, const std::string& path);

std::vector<ProsodyUnit> read_units(const std::string& path);
void write_units(const std::vector<ProsodyUnit>& units, const std::string& path);

// Excitation code files: raw bytes, one mu-law code per sample.
std::vector<uint8_t> read_codes(const std::string& path);
void write_codes(const std::vector<uint8_t>& codes, const std::string& path);

}  // namespace voxel::io
