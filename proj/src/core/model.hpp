#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace scatterscore {

// Location of a construct in its source file. Values built in code keep the
// default; the parser fills these in. Never part of value equality.
struct SourceSpan {
  std::size_t offset = 0;
  int line = 1;
  int column = 1;
  std::size_t length = 0;
};

enum class OpKind { none, down, up, flat, sharp, label };

// Token operation slot: a pitch operation or a free-form label (labels carry
// no pitch effect; they key chord-table lookups).
struct Operation {
  OpKind kind = OpKind::none;
  std::string label;

  static Operation make_label(std::string text) {
    return Operation{OpKind::label, std::move(text)};
  }
  bool operator==(const Operation&) const = default;
};

enum class Duration { none, eighth, quarter, half, whole };

enum class Dynamic { none, pp, p, mp, mf, f, ff };

// Fixed 4-slot attribute vector [op, dur, reg, dyn]. Absent slots are none.
struct AttributeVector {
  Operation op;
  Duration dur = Duration::none;
  std::optional<int> reg;
  Dynamic dyn = Dynamic::none;

  bool operator==(const AttributeVector&) const = default;
};

struct NotePayload {
  std::string pitch;  // letter with optional is/es suffix
  bool operator==(const NotePayload&) const = default;
};

struct RestPayload {
  bool operator==(const RestPayload&) const = default;
};

struct ChordPayload {
  std::vector<std::string> pitches;  // pitch-class names, optional register suffix
  bool operator==(const ChordPayload&) const = default;
};

using TokenPayload = std::variant<NotePayload, RestPayload, ChordPayload>;

// A terminal symbol together with its musical meaning.
struct TokenDef {
  std::string name;
  TokenPayload payload = RestPayload{};
  AttributeVector attrs;
  SourceSpan span;
};

bool operator==(const TokenDef& a, const TokenDef& b);

// (A1,...,An) -> (x1,...,xn): n lhs nonterminals rewritten in order by the
// n rhs symbol strings, anywhere in the sentential form.
struct ScatteredRule {
  int label = 0;
  std::vector<std::string> lhs;
  std::vector<std::vector<std::string>> rhs;
  SourceSpan span;

  std::size_t arity() const { return lhs.size(); }
};

bool operator==(const ScatteredRule& a, const ScatteredRule& b);

struct Component {
  std::string name;
  std::string start;
  std::vector<std::string> nonterminals;
  std::vector<TokenDef> tokens;  // terminal alphabet T
  std::vector<ScatteredRule> rules;
  int program = 0;        // MIDI program 0-127
  int octave_offset = 0;  // whole-octave shift applied at interpretation
  SourceSpan span;

  bool is_nonterminal(std::string_view sym) const;
  const TokenDef* find_token(std::string_view name) const;
  const ScatteredRule* find_rule(int label) const;
};

bool operator==(const Component& a, const Component& b);

// One synchronized step: rule labels (p1,...,pm), one per component.
struct SyncTuple {
  std::vector<int> labels;
  SourceSpan span;
};

bool operator==(const SyncTuple& a, const SyncTuple& b);

struct GrammarSystem {
  std::string name;
  std::vector<Component> components;
  std::vector<SyncTuple> sync;

  std::size_t arity() const { return components.size(); }
};

bool operator==(const GrammarSystem& a, const GrammarSystem& b);

// Canonical spellings shared by the DSL, diagnostics, and the CLI.
std::optional<Duration> duration_from_name(std::string_view name);
std::string_view duration_name(Duration d);
std::optional<Dynamic> dynamic_from_name(std::string_view name);
std::string_view dynamic_name(Dynamic d);
Operation operation_from_name(std::string_view name);
std::string operation_name(const Operation& op);

// Rules are kept in ascending label order (stable, so duplicate labels
// survive for validation to report).
void sort_rules_by_label(Component& c);

}  // namespace scatterscore
