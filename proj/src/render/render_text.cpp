#include <sstream>

#include "render/render.hpp"

namespace scatterscore::render {

std::string render_text(const music::Score& score) {
  std::ostringstream out;
  out << "score ppq=" << score.ppq << " tempo=" << score.tempo_bpm << '\n';
  for (std::size_t i = 0; i < score.tracks.size(); ++i) {
    const auto& track = score.tracks[i];
    out << "track " << i << " name=" << track.name
        << " program=" << track.program << '\n';
    for (const auto& ev : track.events) {
      out << ev.onset << ' ' << ev.duration << ' ';
      if (ev.pitches.empty()) {
        out << "REST";
      } else {
        out << "NOTE ";
        for (std::size_t k = 0; k < ev.pitches.size(); ++k) {
          if (k) out << '+';
          out << ev.pitches[k];
        }
        out << " v" << ev.velocity;
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace scatterscore::render
