#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/model.hpp"

namespace scatterscore::music {

inline constexpr int kPpq = 480;
inline constexpr int kDefaultTempoBpm = 120;
inline constexpr int kDefaultVelocity = 75;

// One timed event: a note, a chord, or (with no pitches) a rest.
struct NoteEvent {
  int onset = 0;
  int duration = 0;
  std::vector<int> pitches;  // sorted ascending, no duplicates; empty = rest
  int velocity = kDefaultVelocity;

  bool operator==(const NoteEvent&) const = default;
};

struct Track {
  std::string name;
  int program = 0;
  std::vector<NoteEvent> events;  // contiguous from onset 0

  int total_ticks() const {
    return events.empty() ? 0
                          : events.back().onset + events.back().duration;
  }
  bool operator==(const Track&) const = default;
};

struct Score {
  int ppq = kPpq;
  int tempo_bpm = kDefaultTempoBpm;
  std::vector<Track> tracks;

  bool operator==(const Score&) const = default;
};

// e=240 q=480 h=960 f=1920 at ppq 480. Throws UnknownDuration on none.
int duration_ticks(Duration dur);

// pp 33, p 49, mp 64, none 75, mf 88, f 101, ff 113.
int velocity_of(Dynamic dyn);

// MIDI number for a pitch name at a register: 60 + 12*(reg-1) + base offset
// (c0 d2 e4 f5 g7 a9 h11) + accidental + op delta (flat -1, sharp +1,
// down -12, up +12, none/label 0) + 12*track_offset. Register 1 is the
// middle-C octave. Throws UnknownPitch / PitchOutOfRange.
int pitch_of(std::string_view pitch, int reg, const Operation& op,
             int track_offset);

// Chord rows keyed by (alias, op label); "" is the unlabeled row.
class ChordTable {
 public:
  // Throws DuplicateChordKey when a key is added twice.
  void add(const std::string& alias, const std::string& op_label,
           std::vector<std::string> pitches);
  const std::vector<std::string>* find(const std::string& alias,
                                       const std::string& op_label) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> entries_;
};

// One row per chord-alias token, keyed by the token's op label.
ChordTable chord_table_for(const Component& c);

// Pitch classes resolved at reg unless the entry carries its own register
// suffix; result sorted and deduplicated. Throws UnresolvedAlias.
std::vector<int> expand_chord(const std::string& alias, const Operation& op,
                              const ChordTable& table, int reg,
                              int track_offset);

using TokenDefMap = std::unordered_map<std::string, const TokenDef*>;
TokenDefMap token_map(const Component& c);

// Lays the terminal string out as contiguous events from onset 0. Tokens with
// no duration default to a quarter; notes and chords with no register sit in
// register 1. Throws UnresolvedToken / UnresolvedAlias on the first bad index.
Track interpret(const std::vector<std::string>& tokens, const TokenDefMap& defs,
                const ChordTable& table, int track_offset);

// One track per component, in system order.
Score score_from_mstring(const GrammarSystem& sys,
                         const std::vector<std::vector<std::string>>& mstring);

}  // namespace scatterscore::music
