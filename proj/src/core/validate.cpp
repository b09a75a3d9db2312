#include "core/validate.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace scatterscore {

namespace {

void add(std::vector<Diagnostic>& out, DiagCode code, std::string message,
         const SourceSpan& span, int component = 0, int rule_label = 0) {
  out.push_back(Diagnostic{code, std::move(message), span, component, rule_label});
}

// Names must be plain identifiers so every valid system has a textual form.
bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

void check_name(std::vector<Diagnostic>& out, const std::string& name,
                const char* what, const SourceSpan& span, int component) {
  if (!valid_name(name)) {
    add(out, DiagCode::InvalidSymbolName,
        std::string(what) + " '" + name + "' is not a plain identifier", span,
        component);
  }
}

void validate_component_into(const Component& c, const ValidationPolicy& policy,
                             int component_index,
                             std::vector<Diagnostic>& out) {
  check_name(out, c.name, "component name", c.span, component_index);

  std::set<std::string> nonterminals;
  for (const auto& n : c.nonterminals) {
    check_name(out, n, "nonterminal", c.span, component_index);
    if (!nonterminals.insert(n).second) {
      add(out, DiagCode::DuplicateNonterminal,
          "nonterminal '" + n + "' listed more than once", c.span,
          component_index);
    }
  }

  std::set<std::string> terminals;
  for (const auto& t : c.tokens) {
    check_name(out, t.name, "token", t.span, component_index);
    if (!terminals.insert(t.name).second) {
      add(out, DiagCode::DuplicateToken,
          "token '" + t.name + "' defined more than once", t.span,
          component_index);
    }
    if (const auto* chord = std::get_if<ChordPayload>(&t.payload)) {
      if (chord->pitches.size() < 2) {
        add(out, DiagCode::ChordTooShort,
            "chord token '" + t.name + "' needs at least 2 pitch classes",
            t.span, component_index);
      }
    }
  }

  for (const auto& n : nonterminals) {
    if (terminals.count(n)) {
      add(out, DiagCode::AlphabetOverlap,
          "symbol '" + n + "' is both a nonterminal and a terminal", c.span,
          component_index);
    }
  }

  if (!nonterminals.count(c.start)) {
    add(out, DiagCode::StartNotInNonterminals,
        "start symbol '" + c.start + "' is not a declared nonterminal", c.span,
        component_index);
  }

  if (c.program < 0 || c.program > 127) {
    add(out, DiagCode::ProgramOutOfRange,
        "program " + std::to_string(c.program) + " outside 0..127", c.span,
        component_index);
  }

  std::set<int> labels;
  for (const auto& r : c.rules) {
    if (r.label < 1) {
      add(out, DiagCode::InvalidRuleLabel,
          "rule label " + std::to_string(r.label) + " must be positive",
          r.span, component_index, r.label);
    }
    if (!labels.insert(r.label).second) {
      add(out, DiagCode::DuplicateRuleLabel,
          "duplicate rule label " + std::to_string(r.label), r.span,
          component_index, r.label);
    }
    if (r.lhs.size() != r.rhs.size()) {
      add(out, DiagCode::RulePartMismatch,
          "rule " + std::to_string(r.label) + " has " +
              std::to_string(r.lhs.size()) + " lhs symbols but " +
              std::to_string(r.rhs.size()) + " rhs parts",
          r.span, component_index, r.label);
    }
    if (r.lhs.empty()) {
      add(out, DiagCode::RulePartMismatch,
          "rule " + std::to_string(r.label) + " has an empty lhs", r.span,
          component_index, r.label);
    }
    for (const auto& sym : r.lhs) {
      if (!nonterminals.count(sym)) {
        add(out, DiagCode::LhsNotNonterminal,
            "rule " + std::to_string(r.label) + " rewrites '" + sym +
                "', which is not a nonterminal",
            r.span, component_index, r.label);
      }
    }
    for (const auto& part : r.rhs) {
      if (part.empty() && !policy.allow_erasing) {
        add(out, DiagCode::ErasingRule,
            "rule " + std::to_string(r.label) +
                " has an empty rhs part (erasing rules are disabled)",
            r.span, component_index, r.label);
      }
      for (const auto& sym : part) {
        if (!nonterminals.count(sym) && !terminals.count(sym)) {
          add(out, DiagCode::UnknownRhsSymbol,
              "rule " + std::to_string(r.label) + " uses unknown symbol '" +
                  sym + "'",
              r.span, component_index, r.label);
        }
      }
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate_component(const Component& c,
                                           const ValidationPolicy& policy) {
  std::vector<Diagnostic> out;
  validate_component_into(c, policy, 1, out);
  return out;
}

std::vector<Diagnostic> validate_system(const GrammarSystem& s,
                                        const ValidationPolicy& policy) {
  std::vector<Diagnostic> out;
  if (s.components.empty()) {
    add(out, DiagCode::EmptySystem, "system has no components", SourceSpan{});
    return out;
  }
  check_name(out, s.name, "system name", SourceSpan{}, 0);

  std::set<std::string> names;
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    const auto& c = s.components[i];
    if (!names.insert(c.name).second) {
      add(out, DiagCode::DuplicateComponentName,
          "component name '" + c.name + "' reused", c.span,
          static_cast<int>(i + 1));
    }
    validate_component_into(c, policy, static_cast<int>(i + 1), out);
  }

  const std::size_t m = s.components.size();
  for (const auto& q : s.sync) {
    if (q.labels.size() != m) {
      std::ostringstream msg;
      msg << "sync tuple has arity " << q.labels.size() << " but the system has "
          << m << " component" << (m == 1 ? "" : "s");
      add(out, DiagCode::ArityMismatch, msg.str(), q.span);
      continue;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!s.components[i].find_rule(q.labels[i])) {
        add(out, DiagCode::UnknownRuleLabelRef,
            "sync tuple references rule " + std::to_string(q.labels[i]) +
                ", which component " + std::to_string(i + 1) +
                " does not define",
            q.span, static_cast<int>(i + 1), q.labels[i]);
      }
    }
  }
  return out;
}

}  // namespace scatterscore
