#pragma once

#include <optional>
#include <string_view>

namespace scatterscore::music {

// Parsed German pitch-class name: letter in c d e f g a h, optional
// "is" (+1) / "es" (-1) suffix (bare "s" covers the contractions "es"/"as"),
// optional trailing register digits used by chord entries.
struct PitchName {
  char letter = 'c';
  int accidental = 0;
  std::optional<int> reg;
};

std::optional<PitchName> parse_pitch_name(std::string_view name);

}  // namespace scatterscore::music
