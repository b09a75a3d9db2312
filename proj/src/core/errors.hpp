#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scatterscore {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A GrammarSystem handed to the engine did not pass validation.
struct InvalidSystem : Error {
  using Error::Error;
};

struct UnknownSymbolError : Error {
  using Error::Error;
};

// Embedding positions do not match the rule's lhs in the given form.
struct InvalidEmbedding : Error {
  using Error::Error;
};

// Some component has no embedding for its slot of the tuple.
struct TupleInapplicable : Error {
  using Error::Error;
};

// Explicit occurrence policy disagrees with the step being taken.
struct PolicyMismatch : Error {
  using Error::Error;
};

struct ScriptStepFailed : Error {
  std::size_t step_index;
  ScriptStepFailed(std::size_t index, const std::string& what)
      : Error("script step " + std::to_string(index) + ": " + what),
        step_index(index) {}
};

struct ScriptSyntaxError : Error {
  using Error::Error;
};

struct UnknownDuration : Error {
  using Error::Error;
};

struct UnknownPitch : Error {
  using Error::Error;
};

struct PitchOutOfRange : Error {
  using Error::Error;
};

struct UnresolvedAlias : Error {
  using Error::Error;
};

// A terminal string mentions a token with no definition; index identifies
// the offending position.
struct UnresolvedToken : Error {
  std::size_t index;
  UnresolvedToken(std::size_t idx, const std::string& what)
      : Error("token " + std::to_string(idx) + ": " + what), index(idx) {}
};

struct DuplicateChordKey : Error {
  using Error::Error;
};

struct TooManyTracks : Error {
  using Error::Error;
};

}  // namespace scatterscore
