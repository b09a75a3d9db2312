#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "engine/derive.hpp"
#include "music/music.hpp"

namespace scatterscore::render {

// Canonical text form, one event per line, LF endings, no trailing spaces:
//   score ppq=480 tempo=120
//   track <idx> name=<name> program=<p>
//   <onset> <dur> NOTE <p1>+<p2>+... v<vel>
//   <onset> <dur> REST
std::string render_text(const music::Score& score);

// SMF format 1, division 480, one tempo track plus one track per component.
// Explicit note-off messages, no running status, channel = component index
// with percussion channel 9 skipped. Byte-deterministic. Throws TooManyTracks
// when the components outrun the 15 usable channels.
std::vector<std::uint8_t> render_midi(const music::Score& score);

// Structured step report:
//   start: (<form1> | ... | <formm>)
//   step <k>: Q=(l1,...,lm) pos=[(..)|..|(..)] => (<form1> | ... | <formm>)
//   status: terminal|stuck|budget_exhausted
std::string export_trace(const engine::CompiledSystem& sys,
                         const engine::DerivationTrace& trace);

std::string_view status_name(engine::TraceStatus status);

}  // namespace scatterscore::render
