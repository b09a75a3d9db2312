#include "core/model.hpp"

#include <algorithm>

namespace scatterscore {

bool operator==(const TokenDef& a, const TokenDef& b) {
  return a.name == b.name && a.payload == b.payload && a.attrs == b.attrs;
}

bool operator==(const ScatteredRule& a, const ScatteredRule& b) {
  return a.label == b.label && a.lhs == b.lhs && a.rhs == b.rhs;
}

bool operator==(const Component& a, const Component& b) {
  return a.name == b.name && a.start == b.start &&
         a.nonterminals == b.nonterminals && a.tokens == b.tokens &&
         a.rules == b.rules && a.program == b.program &&
         a.octave_offset == b.octave_offset;
}

bool operator==(const SyncTuple& a, const SyncTuple& b) {
  return a.labels == b.labels;
}

bool operator==(const GrammarSystem& a, const GrammarSystem& b) {
  return a.name == b.name && a.components == b.components && a.sync == b.sync;
}

bool Component::is_nonterminal(std::string_view sym) const {
  return std::find(nonterminals.begin(), nonterminals.end(), sym) !=
         nonterminals.end();
}

const TokenDef* Component::find_token(std::string_view name) const {
  for (const auto& t : tokens) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const ScatteredRule* Component::find_rule(int label) const {
  for (const auto& r : rules) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

std::optional<Duration> duration_from_name(std::string_view name) {
  if (name == "e") return Duration::eighth;
  if (name == "q") return Duration::quarter;
  if (name == "h") return Duration::half;
  if (name == "f") return Duration::whole;
  return std::nullopt;
}

std::string_view duration_name(Duration d) {
  switch (d) {
    case Duration::eighth: return "e";
    case Duration::quarter: return "q";
    case Duration::half: return "h";
    case Duration::whole: return "f";
    case Duration::none: break;
  }
  return "-";
}

std::optional<Dynamic> dynamic_from_name(std::string_view name) {
  if (name == "pp") return Dynamic::pp;
  if (name == "p") return Dynamic::p;
  if (name == "mp") return Dynamic::mp;
  if (name == "mf") return Dynamic::mf;
  if (name == "f") return Dynamic::f;
  if (name == "ff") return Dynamic::ff;
  return std::nullopt;
}

std::string_view dynamic_name(Dynamic d) {
  switch (d) {
    case Dynamic::pp: return "pp";
    case Dynamic::p: return "p";
    case Dynamic::mp: return "mp";
    case Dynamic::mf: return "mf";
    case Dynamic::f: return "f";
    case Dynamic::ff: return "ff";
    case Dynamic::none: break;
  }
  return "-";
}

Operation operation_from_name(std::string_view name) {
  if (name == "down") return Operation{OpKind::down, {}};
  if (name == "up") return Operation{OpKind::up, {}};
  if (name == "flat") return Operation{OpKind::flat, {}};
  if (name == "sharp") return Operation{OpKind::sharp, {}};
  return Operation::make_label(std::string(name));
}

std::string operation_name(const Operation& op) {
  switch (op.kind) {
    case OpKind::none: return "-";
    case OpKind::down: return "down";
    case OpKind::up: return "up";
    case OpKind::flat: return "flat";
    case OpKind::sharp: return "sharp";
    case OpKind::label: return op.label;
  }
  return "-";
}

void sort_rules_by_label(Component& c) {
  std::stable_sort(c.rules.begin(), c.rules.end(),
                   [](const ScatteredRule& a, const ScatteredRule& b) {
                     return a.label < b.label;
                   });
}

}  // namespace scatterscore
