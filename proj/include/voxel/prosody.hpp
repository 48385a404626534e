// Prosody units and resampling to 10 ms frame inputs.
#pragma once

#include <string>
#include <vector>

#include "voxel/common.hpp"

namespace voxel {

enum class UnitPosition : int { kHeading = 0, kMiddle = 1, kTrailing = 2 };

const char* to_string(UnitPosition p);
UnitPosition unit_position_from_string(const std::string& s);

// Sub-phoneme element. Pitch endpoints are log2 Hz; 0 marks unvoiced.
struct ProsodyUnit {
  int label_id = 0;
  UnitPosition position = UnitPosition::kMiddle;
  double duration_ms = 0.0;
  double log_pitch_initial = 0.0;
  double log_pitch_final = 0.0;
  double log_energy = 0.0;  // carried through parsing, not fed to the synthesizer
};

struct FrameInput {
  int label_id = 0;
  UnitPosition position = UnitPosition::kMiddle;
  double pitch = 0.0;  // normalized log pitch in [0, 1]; 0 = unvoiced
};

namespace prosody {

struct UnitViolation {
  size_t unit_index;
  std::string message;
};

// Frame counts come from cumulative-boundary rounding (minimum one frame per
// unit); pitch is interpolated log-linearly between the unit endpoints and
// sampled at frame centers.
std::vector<FrameInput> units_to_frames(const std::vector<ProsodyUnit>& units);

// Never throws; empty report iff the sequence is valid.
std::vector<UnitViolation> validate_units(const std::vector<ProsodyUnit>& units);

}  // namespace prosody
}  // namespace voxel
