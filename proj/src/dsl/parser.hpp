#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/model.hpp"

namespace scatterscore::dsl {

struct ParseDiagnostic {
  enum class Severity { error, warning };
  SourceSpan span;
  std::string message;
  Severity severity = Severity::error;
};

struct ParseResult {
  std::optional<GrammarSystem> system;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return system.has_value(); }
};

// Syntax only: a structurally parsed system may still fail validate_system.
// Never throws on malformed input; recovers at statement boundaries so one
// bad rule does not hide later faults.
ParseResult parse_system(std::string_view text);

}  // namespace scatterscore::dsl
