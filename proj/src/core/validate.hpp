#pragma once

#include <string>
#include <vector>

#include "core/model.hpp"

namespace scatterscore {

enum class DiagCode {
  InvalidSymbolName,
  AlphabetOverlap,
  StartNotInNonterminals,
  DuplicateRuleLabel,
  InvalidRuleLabel,
  RulePartMismatch,
  LhsNotNonterminal,
  UnknownRhsSymbol,
  ErasingRule,
  DuplicateToken,
  DuplicateNonterminal,
  ChordTooShort,
  ProgramOutOfRange,
  EmptySystem,
  DuplicateComponentName,
  ArityMismatch,
  UnknownRuleLabelRef,
};

struct Diagnostic {
  DiagCode code;
  std::string message;
  SourceSpan span;
  int component = 0;   // 1-based, 0 when system-level
  int rule_label = 0;  // 0 when not about a rule
};

struct ValidationPolicy {
  bool allow_erasing = false;
};

// All problems come back as diagnostics; nothing throws. An empty list means
// the value is well-formed.
std::vector<Diagnostic> validate_component(const Component& c,
                                           const ValidationPolicy& policy = {});
std::vector<Diagnostic> validate_system(const GrammarSystem& s,
                                        const ValidationPolicy& policy = {});

}  // namespace scatterscore
