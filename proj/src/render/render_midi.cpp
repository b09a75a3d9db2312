#include "core/errors.hpp"
#include "render/render.hpp"

namespace scatterscore::render {

namespace {

using Bytes = std::vector<std::uint8_t>;

void put16(Bytes& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void put32(Bytes& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
  out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void put_vlq(Bytes& out, std::uint32_t value) {
  std::uint8_t stack[5];
  int n = 0;
  stack[n++] = static_cast<std::uint8_t>(value & 0x7F);
  value >>= 7;
  while (value) {
    stack[n++] = static_cast<std::uint8_t>((value & 0x7F) | 0x80);
    value >>= 7;
  }
  while (n) out.push_back(stack[--n]);
}

void put_chunk(Bytes& out, const Bytes& body) {
  out.push_back('M');
  out.push_back('T');
  out.push_back('r');
  out.push_back('k');
  put32(out, static_cast<std::uint32_t>(body.size()));
  out.insert(out.end(), body.begin(), body.end());
}

void put_end_of_track(Bytes& body, std::uint32_t delta) {
  put_vlq(body, delta);
  body.push_back(0xFF);
  body.push_back(0x2F);
  body.push_back(0x00);
}

int channel_for(std::size_t track_index) {
  // Skip the GM percussion channel.
  return static_cast<int>(track_index < 9 ? track_index : track_index + 1);
}

}  // namespace

std::vector<std::uint8_t> render_midi(const music::Score& score) {
  if (score.tracks.size() > 15) {
    throw TooManyTracks("only 15 melodic channels are available, got " +
                        std::to_string(score.tracks.size()) + " tracks");
  }

  Bytes out;
  out.push_back('M');
  out.push_back('T');
  out.push_back('h');
  out.push_back('d');
  put32(out, 6);
  put16(out, 1);  // format 1
  put16(out, static_cast<std::uint16_t>(score.tracks.size() + 1));
  put16(out, static_cast<std::uint16_t>(score.ppq));

  // Tempo track.
  {
    Bytes body;
    const std::uint32_t us_per_quarter =
        static_cast<std::uint32_t>(60'000'000 / score.tempo_bpm);
    put_vlq(body, 0);
    body.push_back(0xFF);
    body.push_back(0x51);
    body.push_back(0x03);
    body.push_back(static_cast<std::uint8_t>((us_per_quarter >> 16) & 0xFF));
    body.push_back(static_cast<std::uint8_t>((us_per_quarter >> 8) & 0xFF));
    body.push_back(static_cast<std::uint8_t>(us_per_quarter & 0xFF));
    put_end_of_track(body, 0);
    put_chunk(out, body);
  }

  for (std::size_t i = 0; i < score.tracks.size(); ++i) {
    const auto& track = score.tracks[i];
    const auto channel = static_cast<std::uint8_t>(channel_for(i));
    Bytes body;
    put_vlq(body, 0);
    body.push_back(static_cast<std::uint8_t>(0xC0 | channel));
    body.push_back(static_cast<std::uint8_t>(track.program & 0x7F));

    std::uint32_t pending = 0;
    for (const auto& ev : track.events) {
      if (ev.pitches.empty()) {
        pending += static_cast<std::uint32_t>(ev.duration);
        continue;
      }
      for (std::size_t k = 0; k < ev.pitches.size(); ++k) {
        put_vlq(body, k == 0 ? pending : 0);
        body.push_back(static_cast<std::uint8_t>(0x90 | channel));
        body.push_back(static_cast<std::uint8_t>(ev.pitches[k] & 0x7F));
        body.push_back(static_cast<std::uint8_t>(ev.velocity & 0x7F));
      }
      for (std::size_t k = 0; k < ev.pitches.size(); ++k) {
        put_vlq(body, k == 0 ? static_cast<std::uint32_t>(ev.duration) : 0);
        body.push_back(static_cast<std::uint8_t>(0x80 | channel));
        body.push_back(static_cast<std::uint8_t>(ev.pitches[k] & 0x7F));
        body.push_back(0x00);
      }
      pending = 0;
    }
    put_end_of_track(body, pending);
    put_chunk(out, body);
  }
  return out;
}

}  // namespace scatterscore::render
