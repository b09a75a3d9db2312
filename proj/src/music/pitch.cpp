#include "music/pitch.hpp"

#include <cctype>

namespace scatterscore::music {

std::optional<PitchName> parse_pitch_name(std::string_view name) {
  if (name.empty()) return std::nullopt;
  PitchName p;
  p.letter = name[0];
  if (std::string_view("cdefgah").find(p.letter) == std::string_view::npos) {
    return std::nullopt;
  }
  std::string_view rest = name.substr(1);
  if (rest.size() >= 2 && rest.substr(0, 2) == "is") {
    p.accidental = 1;
    rest = rest.substr(2);
  } else if (rest.size() >= 2 && rest.substr(0, 2) == "es") {
    p.accidental = -1;
    rest = rest.substr(2);
  } else if (!rest.empty() && rest[0] == 's') {
    // German contractions: "es" (e-flat), "as" (a-flat).
    p.accidental = -1;
    rest = rest.substr(1);
  }
  if (!rest.empty()) {
    int reg = 0;
    for (char c : rest) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      reg = reg * 10 + (c - '0');
      if (reg > 99) return std::nullopt;
    }
    p.reg = reg;
  }
  return p;
}

}  // namespace scatterscore::music
