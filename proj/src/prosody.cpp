#include "voxel/prosody.hpp"

#include <cmath>

namespace voxel {

const char* to_string(UnitPosition p) {
  switch (p) {
    case UnitPosition::kHeading: return "heading";
    case UnitPosition::kMiddle: return "middle";
    case UnitPosition::kTrailing: return "trailing";
  }
  return "middle";
}

UnitPosition unit_position_from_string(const std::string& s) {
  if (s == "heading") return UnitPosition::kHeading;
  if (s == "middle") return UnitPosition::kMiddle;
  if (s == "trailing") return UnitPosition::kTrailing;
  throw FormatError("unknown unit position \"" + s + "\" (want heading|middle|trailing)");
}

namespace prosody {

namespace {

constexpr double kHopMs = 10.0;

bool unit_is_voiced(const ProsodyUnit& u) {
  return u.log_pitch_initial > 0.0 && u.log_pitch_final > 0.0;
}

}  // namespace

std::vector<FrameInput> units_to_frames(const std::vector<ProsodyUnit>& units) {
  if (units.empty()) throw InvalidArgument("units_to_frames: empty unit sequence");
  auto violations = validate_units(units);
  if (!violations.empty())
    throw InvalidArgument("units_to_frames: unit " + std::to_string(violations[0].unit_index) +
                          ": " + violations[0].message);

  std::vector<FrameInput> frames;
  double cum_ms = 0.0;
  long prev_boundary = 0;
  for (const auto& u : units) {
    cum_ms += u.duration_ms;
    long boundary = std::lround(cum_ms / kHopMs);
    long count = std::max(boundary - prev_boundary, 1L);
    prev_boundary = boundary;

    bool voiced = unit_is_voiced(u);
    for (long j = 0; j < count; ++j) {
      FrameInput fi;
      fi.label_id = u.label_id;
      fi.position = u.position;
      if (voiced) {
        double frac = (2.0 * j + 1.0) / (2.0 * count);  // frame centers
        double lp = u.log_pitch_initial + (u.log_pitch_final - u.log_pitch_initial) * frac;
        fi.pitch = log2_pitch_to_feature(lp);
      } else {
        fi.pitch = 0.0;
      }
      frames.push_back(fi);
    }
  }
  return frames;
}

std::vector<UnitViolation> validate_units(const std::vector<ProsodyUnit>& units) {
  std::vector<UnitViolation> out;
  for (size_t i = 0; i < units.size(); ++i) {
    const auto& u = units[i];
    if (!(u.duration_ms > 0.0))
      out.push_back({i, "duration must be positive (got " + std::to_string(u.duration_ms) + ")"});
    if (!std::isfinite(u.duration_ms) || !std::isfinite(u.log_pitch_initial) ||
        !std::isfinite(u.log_pitch_final) || !std::isfinite(u.log_energy))
      out.push_back({i, "non-finite field"});
    bool vi = u.log_pitch_initial > 0.0;
    bool vf = u.log_pitch_final > 0.0;
    if (vi != vf)
      out.push_back({i, "mixed voiced/unvoiced pitch endpoints"});
    if (u.log_pitch_initial < 0.0 || u.log_pitch_final < 0.0)
      out.push_back({i, "negative log pitch"});
  }
  return out;
}

}  // namespace prosody
}  // namespace voxel
