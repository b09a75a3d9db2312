#include "music/music.hpp"

#include <algorithm>

#include "core/errors.hpp"
#include "music/pitch.hpp"

namespace scatterscore::music {

namespace {

int base_offset(char letter) {
  switch (letter) {
    case 'c': return 0;
    case 'd': return 2;
    case 'e': return 4;
    case 'f': return 5;
    case 'g': return 7;
    case 'a': return 9;
    case 'h': return 11;
  }
  throw UnknownPitch(std::string("unknown pitch letter '") + letter + "'");
}

int op_delta(const Operation& op) {
  switch (op.kind) {
    case OpKind::flat: return -1;
    case OpKind::sharp: return 1;
    case OpKind::down: return -12;
    case OpKind::up: return 12;
    case OpKind::none:
    case OpKind::label: return 0;
  }
  return 0;
}

int midi_number(const PitchName& p, int reg, const Operation& op,
                int track_offset) {
  const int effective_reg = p.reg ? *p.reg : reg;
  const int value = 60 + 12 * (effective_reg - 1) + base_offset(p.letter) +
                    p.accidental + op_delta(op) + 12 * track_offset;
  if (value < 0 || value > 127) {
    throw PitchOutOfRange("pitch " + std::to_string(value) +
                          " outside MIDI range 0..127");
  }
  return value;
}

}  // namespace

int duration_ticks(Duration dur) {
  switch (dur) {
    case Duration::eighth: return kPpq / 2;
    case Duration::quarter: return kPpq;
    case Duration::half: return kPpq * 2;
    case Duration::whole: return kPpq * 4;
    case Duration::none: break;
  }
  throw UnknownDuration("no tick value for an absent duration");
}

int velocity_of(Dynamic dyn) {
  switch (dyn) {
    case Dynamic::pp: return 33;
    case Dynamic::p: return 49;
    case Dynamic::mp: return 64;
    case Dynamic::none: return kDefaultVelocity;
    case Dynamic::mf: return 88;
    case Dynamic::f: return 101;
    case Dynamic::ff: return 113;
  }
  return kDefaultVelocity;
}

int pitch_of(std::string_view pitch, int reg, const Operation& op,
             int track_offset) {
  auto parsed = parse_pitch_name(pitch);
  if (!parsed) {
    throw UnknownPitch("'" + std::string(pitch) + "' is not a pitch name");
  }
  return midi_number(*parsed, reg, op, track_offset);
}

void ChordTable::add(const std::string& alias, const std::string& op_label,
                     std::vector<std::string> pitches) {
  auto key = std::make_pair(alias, op_label);
  if (!entries_.emplace(std::move(key), std::move(pitches)).second) {
    throw DuplicateChordKey("chord row (" + alias + ", " +
                            (op_label.empty() ? "-" : op_label) +
                            ") defined twice");
  }
}

const std::vector<std::string>* ChordTable::find(
    const std::string& alias, const std::string& op_label) const {
  auto it = entries_.find(std::make_pair(alias, op_label));
  return it == entries_.end() ? nullptr : &it->second;
}

ChordTable chord_table_for(const Component& c) {
  ChordTable table;
  for (const auto& t : c.tokens) {
    if (const auto* chord = std::get_if<ChordPayload>(&t.payload)) {
      const std::string label =
          t.attrs.op.kind == OpKind::label ? t.attrs.op.label : "";
      table.add(t.name, label, chord->pitches);
    }
  }
  return table;
}

std::vector<int> expand_chord(const std::string& alias, const Operation& op,
                              const ChordTable& table, int reg,
                              int track_offset) {
  const std::string label = op.kind == OpKind::label ? op.label : "";
  const auto* pitches = table.find(alias, label);
  if (!pitches) {
    throw UnresolvedAlias("no chord row for (" + alias + ", " +
                          (label.empty() ? "-" : label) + ")");
  }
  std::vector<int> out;
  out.reserve(pitches->size());
  for (const auto& name : *pitches) {
    auto parsed = parse_pitch_name(name);
    if (!parsed) {
      throw UnknownPitch("chord row for '" + alias + "' holds bad pitch '" +
                         name + "'");
    }
    out.push_back(midi_number(*parsed, reg, op, track_offset));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TokenDefMap token_map(const Component& c) {
  TokenDefMap map;
  for (const auto& t : c.tokens) map.emplace(t.name, &t);
  return map;
}

Track interpret(const std::vector<std::string>& tokens, const TokenDefMap& defs,
                const ChordTable& table, int track_offset) {
  Track track;
  int cursor = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto it = defs.find(tokens[i]);
    if (it == defs.end()) {
      throw UnresolvedToken(i, "no definition for '" + tokens[i] + "'");
    }
    const TokenDef& def = *it->second;
    const Duration dur =
        def.attrs.dur == Duration::none ? Duration::quarter : def.attrs.dur;
    const int reg = def.attrs.reg.value_or(1);

    NoteEvent ev;
    ev.onset = cursor;
    ev.duration = duration_ticks(dur);
    ev.velocity = velocity_of(def.attrs.dyn);
    if (const auto* note = std::get_if<NotePayload>(&def.payload)) {
      ev.pitches.push_back(pitch_of(note->pitch, reg, def.attrs.op, track_offset));
    } else if (std::get_if<ChordPayload>(&def.payload)) {
      ev.pitches = expand_chord(def.name, def.attrs.op, table, reg, track_offset);
    }
    cursor += ev.duration;
    track.events.push_back(std::move(ev));
  }
  return track;
}

Score score_from_mstring(const GrammarSystem& sys,
                         const std::vector<std::vector<std::string>>& mstring) {
  Score score;
  for (std::size_t i = 0; i < sys.components.size(); ++i) {
    const Component& c = sys.components[i];
    Track track = interpret(mstring[i], token_map(c), chord_table_for(c),
                            c.octave_offset);
    track.name = c.name;
    track.program = c.program;
    score.tracks.push_back(std::move(track));
  }
  return score;
}

}  // namespace scatterscore::music
