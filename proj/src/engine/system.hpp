#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "core/model.hpp"
#include "core/validate.hpp"
#include "engine/forms.hpp"

namespace scatterscore::engine {

struct CompiledComponent {
  std::vector<std::string> names;  // id -> name, nonterminals first
  std::unordered_map<std::string, SymbolId> ids;
  SymbolId nonterminal_count = 0;
  SymbolId start = 0;
  std::vector<CompiledRule> rules;  // ascending label order
  std::unordered_map<int, std::size_t> rule_index;
  // Largest per-step drop in nonterminal count any rule can achieve;
  // <= 0 means this component can never shed nonterminals.
  int max_nt_reduction = 0;

  bool is_nonterminal(SymbolId s) const { return s < nonterminal_count; }
  SymbolId id_of(std::string_view name) const;  // throws UnknownSymbolError
  const CompiledRule* find_rule(int label) const;
  const CompiledRule& rule(int label) const;  // throws UnknownSymbolError
  std::size_t nonterminal_occurrences(const Form& f) const;
};

// Validated, symbol-interned view of a GrammarSystem; everything the
// derivation machinery needs for fast stepping.
class CompiledSystem {
 public:
  // Throws InvalidSystem when validation reports errors.
  explicit CompiledSystem(const GrammarSystem& sys, ValidationPolicy policy = {});

  std::size_t component_count() const { return components_.size(); }
  const CompiledComponent& component(std::size_t i) const { return components_[i]; }
  const std::vector<SyncTuple>& sync() const { return sync_; }

  MForm start_mform() const;
  bool is_terminal(const MForm& mf) const;

  MForm mform_from_names(const std::vector<std::vector<std::string>>& names) const;
  std::vector<std::vector<std::string>> names(const MForm& mf) const;
  std::string form_text(std::size_t component, const Form& f) const;
  std::string mstring_text(const MForm& mf) const;  // "a b | c d"

 private:
  std::vector<CompiledComponent> components_;
  std::vector<SyncTuple> sync_;
};

}  // namespace scatterscore::engine
