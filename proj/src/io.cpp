#include "voxel/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

namespace voxel::io {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f.write(bytes.data(), std::streamsize(bytes.size()));
  if (!f) throw IoError("short write to " + path);
}

struct Reader {
  const std::string& buf;
  size_t pos = 0;
  const std::string& path;

  void need(size_t n, const char* what) const {
    if (pos + n > buf.size())
      throw FormatError(path + ": truncated " + what + " (need " + std::to_string(pos + n) +
                        " bytes, have " + std::to_string(buf.size()) + ")");
  }
  uint8_t u8(const char* what) {
    need(1, what);
    return uint8_t(buf[pos++]);
  }
  uint16_t u16(const char* what) {
    need(2, what);
    uint16_t v = uint16_t(uint8_t(buf[pos])) | uint16_t(uint8_t(buf[pos + 1])) << 8;
    pos += 2;
    return v;
  }
  uint32_t u32(const char* what) {
    need(4, what);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= uint32_t(uint8_t(buf[pos + i])) << (8 * i);
    pos += 4;
    return v;
  }
  float f32(const char* what) { return std::bit_cast<float>(u32(what)); }
  std::string bytes(size_t n, const char* what) {
    need(n, what);
    std::string s = buf.substr(pos, n);
    pos += n;
    return s;
  }
};

struct Writer {
  std::string out;

  void u8(uint8_t v) { out.push_back(char(v)); }
  void u16(uint16_t v) {
    out.push_back(char(v & 0xff));
    out.push_back(char(v >> 8));
  }
  void u32(uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(char((v >> (8 * i)) & 0xff));
  }
  void f32(float v) { u32(std::bit_cast<uint32_t>(v)); }
  void bytes(const std::string& s) { out += s; }
};

}  // namespace

AudioBuffer read_wav(const std::string& path) {
  std::string buf = read_file(path);
  Reader r{buf, 0, path};
  if (r.bytes(4, "RIFF tag") != "RIFF") throw FormatError(path + ": missing RIFF tag");
  r.u32("RIFF size");
  if (r.bytes(4, "WAVE tag") != "WAVE") throw FormatError(path + ": missing WAVE tag");

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  while (r.pos + 8 <= buf.size()) {
    std::string id = r.bytes(4, "chunk id");
    uint32_t size = r.u32("chunk size");
    if (id == "fmt ") {
      if (size < 16) throw FormatError(path + ": fmt chunk too small");
      size_t end = r.pos + size;
      format = r.u16("audio format");
      channels = r.u16("channel count");
      rate = r.u32("sample rate");
      r.u32("byte rate");
      r.u16("block align");
      bits = r.u16("bits per sample");
      if (format != 1) throw FormatError(path + ": unsupported audio format " + std::to_string(format) + " (want PCM=1)");
      if (channels != 1) throw FormatError(path + ": unsupported channel count " + std::to_string(channels) + " (want mono)");
      if (rate != uint32_t(kSampleRate)) throw FormatError(path + ": unsupported sample rate " + std::to_string(rate) + " (want 16000)");
      if (bits != 16) throw FormatError(path + ": unsupported bits per sample " + std::to_string(bits) + " (want 16)");
      have_fmt = true;
      r.pos = end;
    } else if (id == "data") {
      if (!have_fmt) throw FormatError(path + ": data chunk before fmt chunk");
      if (size % 2 != 0) throw FormatError(path + ": odd data chunk size");
      r.need(size, "data chunk");
      AudioBuffer a;
      a.sample_rate = kSampleRate;
      a.samples.resize(size / 2);
      for (size_t i = 0; i < a.samples.size(); ++i) {
        int16_t s = int16_t(uint16_t(uint8_t(buf[r.pos + 2 * i])) |
                            uint16_t(uint8_t(buf[r.pos + 2 * i + 1])) << 8);
        a.samples[i] = s / 32768.0;
      }
      return a;
    } else {
      r.need(size + (size % 2), "chunk body");  // chunks are word-aligned
      r.pos += size + (size % 2);
    }
  }
  throw FormatError(path + ": no data chunk");
}

void write_wav(const AudioBuffer& a, const std::string& path) {
  Writer w;
  uint32_t data_bytes = uint32_t(a.samples.size() * 2);
  w.bytes("RIFF");
  w.u32(36 + data_bytes);
  w.bytes("WAVE");
  w.bytes("fmt ");
  w.u32(16);
  w.u16(1);                       // PCM
  w.u16(1);                       // mono
  w.u32(uint32_t(kSampleRate));
  w.u32(uint32_t(kSampleRate) * 2);
  w.u16(2);                       // block align
  w.u16(16);                      // bits
  w.bytes("data");
  w.u32(data_bytes);
  for (double s : a.samples) {
    long v = std::lround(s * 32768.0);
    v = std::min(32767L, std::max(-32768L, v));
    w.u16(uint16_t(int16_t(v)));
  }
  write_file(path, w.out);
}

FeatureTrack read_features(const std::string& path) {
  std::string buf = read_file(path);
  Reader r{buf, 0, path};
  if (r.bytes(4, "magic") != "LPCF") throw FormatError(path + ": bad magic (want LPCF)");
  r.u16("version");
  uint32_t frames = r.u32("frame count");
  uint16_t dims = r.u16("dims");
  if (dims != kNumStatics)
    throw FormatError(path + ": dims=" + std::to_string(dims) + " (want 20)");
  size_t expect = size_t(frames) * kNumStatics * 4;
  if (buf.size() - r.pos != expect)
    throw FormatError(path + ": payload size " + std::to_string(buf.size() - r.pos) +
                      " bytes, expected " + std::to_string(expect));
  FeatureTrack t;
  t.frames.resize(frames);
  for (uint32_t i = 0; i < frames; ++i) {
    auto& fr = t.frames[i];
    for (int k = 0; k < kNumBands; ++k) fr.cepstrum.coeffs[k] = r.f32("cepstrum");
    fr.pitch = r.f32("pitch");
    fr.pitch_corr = r.f32("pitch correlation");
  }
  return t;
}

void write_features(const FeatureTrack& track, const std::string& path) {
  Writer w;
  w.bytes("LPCF");
  w.u16(1);
  w.u32(uint32_t(track.frames.size()));
  w.u16(kNumStatics);
  for (const auto& fr : track.frames) {
    for (int k = 0; k < kNumBands; ++k) w.f32(float(fr.cepstrum.coeffs[k]));
    w.f32(float(fr.pitch));
    w.f32(float(fr.pitch_corr));
  }
  write_file(path, w.out);
}

const NamedTensor* WeightFile::find(const std::string& name) const {
  for (const auto& t : tensors)
    if (t.name == name) return &t;
  return nullptr;
}

NamedTensor& WeightFile::add(const std::string& name, std::vector<uint32_t> dims) {
  NamedTensor t;
  t.name = name;
  t.dims = std::move(dims);
  t.data.resize(t.element_count(), 0.0f);
  tensors.push_back(std::move(t));
  return tensors.back();
}

WeightFile read_weights(const std::string& path) {
  std::string buf = read_file(path);
  Reader r{buf, 0, path};
  if (r.bytes(4, "magic") != "LPCW") throw FormatError(path + ": bad magic (want LPCW)");
  WeightFile w;
  w.version = r.u16("version");
  uint32_t count = r.u32("tensor count");
  std::set<std::string> seen;
  for (uint32_t i = 0; i < count; ++i) {
    NamedTensor t;
    uint16_t name_len = r.u16("tensor name length");
    t.name = r.bytes(name_len, "tensor name");
    if (!seen.insert(t.name).second)
      throw FormatError(path + ": duplicate tensor name \"" + t.name + "\"");
    uint8_t rank = r.u8("tensor rank");
    for (uint8_t d = 0; d < rank; ++d) t.dims.push_back(r.u32("tensor dim"));
    size_t n = t.element_count();
    r.need(n * 4, "tensor data");
    t.data.resize(n);
    for (size_t k = 0; k < n; ++k) t.data[k] = r.f32("tensor data");
    w.tensors.push_back(std::move(t));
  }
  if (r.pos != buf.size())
    throw FormatError(path + ": " + std::to_string(buf.size() - r.pos) + " trailing bytes");
  return w;
}

void write_weights(const WeightFile& w, const std::string& path) {
  Writer out;
  out.bytes("LPCW");
  out.u16(w.version);
  out.u32(uint32_t(w.tensors.size()));
  for (const auto& t : w.tensors) {
    out.u16(uint16_t(t.name.size()));
    out.bytes(t.name);
    out.u8(uint8_t(t.dims.size()));
    for (auto d : t.dims) out.u32(d);
    if (t.data.size() != t.element_count())
      throw InvalidArgument("tensor \"" + t.name + "\": data size does not match dims");
    for (float v : t.data) out.f32(v);
  }
  write_file(path, out.out);
}

std::vector<ProsodyUnit> read_units(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  std::vector<ProsodyUnit> units;
  std::string line;
  size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string pos_str;
    ProsodyUnit u;
    if (!(ss >> u.label_id)) continue;  // blank line
    if (!(ss >> pos_str >> u.duration_ms >> u.log_pitch_initial >> u.log_pitch_final >> u.log_energy))
      throw FormatError(path + ":" + std::to_string(lineno) + ": expected 6 fields");
    std::string extra;
    if (ss >> extra)
      throw FormatError(path + ":" + std::to_string(lineno) + ": unexpected trailing field \"" + extra + "\"");
    u.position = unit_position_from_string(pos_str);
    units.push_back(u);
  }
  return units;
}

void write_units(const std::vector<ProsodyUnit>& units, const std::string& path) {
  std::string out;
  char buf[256];
  for (const auto& u : units) {
    std::snprintf(buf, sizeof buf, "%d %s %.17g %.17g %.17g %.17g\n", u.label_id,
                  to_string(u.position), u.duration_ms, u.log_pitch_initial, u.log_pitch_final,
                  u.log_energy);
    out += buf;
  }
  write_file(path, out);
}

std::vector<uint8_t> read_codes(const std::string& path) {
  std::string buf = read_file(path);
  return std::vector<uint8_t>(buf.begin(), buf.end());
}

void write_codes(const std::vector<uint8_t>& codes, const std::string& path) {
  write_file(path, std::string(codes.begin(), codes.end()));
}

}  // namespace voxel::io
