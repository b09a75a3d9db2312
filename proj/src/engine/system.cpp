#include "engine/system.hpp"

#include <sstream>

#include "core/errors.hpp"

namespace scatterscore::engine {

SymbolId CompiledComponent::id_of(std::string_view name) const {
  auto it = ids.find(std::string(name));
  if (it == ids.end()) {
    throw UnknownSymbolError("unknown symbol '" + std::string(name) + "'");
  }
  return it->second;
}

const CompiledRule* CompiledComponent::find_rule(int label) const {
  auto it = rule_index.find(label);
  return it == rule_index.end() ? nullptr : &rules[it->second];
}

const CompiledRule& CompiledComponent::rule(int label) const {
  const CompiledRule* r = find_rule(label);
  if (!r) {
    throw UnknownSymbolError("no rule labeled " + std::to_string(label));
  }
  return *r;
}

std::size_t CompiledComponent::nonterminal_occurrences(const Form& f) const {
  std::size_t count = 0;
  for (SymbolId s : f) {
    if (is_nonterminal(s)) ++count;
  }
  return count;
}

CompiledSystem::CompiledSystem(const GrammarSystem& sys, ValidationPolicy policy) {
  const auto diagnostics = validate_system(sys, policy);
  if (!diagnostics.empty()) {
    throw InvalidSystem("system '" + sys.name + "' failed validation: " +
                        diagnostics.front().message);
  }

  for (const auto& c : sys.components) {
    CompiledComponent cc;
    auto intern = [&cc](const std::string& name) {
      cc.ids.emplace(name, static_cast<SymbolId>(cc.names.size()));
      cc.names.push_back(name);
    };
    for (const auto& n : c.nonterminals) intern(n);
    cc.nonterminal_count = static_cast<SymbolId>(cc.names.size());
    for (const auto& t : c.tokens) intern(t.name);
    cc.start = cc.id_of(c.start);

    cc.max_nt_reduction = 0;
    for (const auto& r : c.rules) {
      CompiledRule cr;
      cr.label = r.label;
      for (const auto& sym : r.lhs) cr.lhs.push_back(cc.id_of(sym));
      int rhs_nonterminals = 0;
      for (const auto& part : r.rhs) {
        std::vector<SymbolId> ids;
        for (const auto& sym : part) {
          const SymbolId id = cc.id_of(sym);
          if (cc.is_nonterminal(id)) ++rhs_nonterminals;
          ids.push_back(id);
        }
        cr.rhs.push_back(std::move(ids));
      }
      cr.nonterminal_delta = static_cast<int>(cr.lhs.size()) - rhs_nonterminals;
      if (cr.nonterminal_delta > cc.max_nt_reduction) {
        cc.max_nt_reduction = cr.nonterminal_delta;
      }
      cc.rule_index.emplace(cr.label, cc.rules.size());
      cc.rules.push_back(std::move(cr));
    }
    components_.push_back(std::move(cc));
  }
  sync_ = sys.sync;
}

MForm CompiledSystem::start_mform() const {
  MForm mf;
  mf.reserve(components_.size());
  for (const auto& c : components_) mf.push_back(Form{c.start});
  return mf;
}

bool CompiledSystem::is_terminal(const MForm& mf) const {
  for (std::size_t i = 0; i < mf.size(); ++i) {
    for (SymbolId s : mf[i]) {
      if (components_[i].is_nonterminal(s)) return false;
    }
  }
  return true;
}

MForm CompiledSystem::mform_from_names(
    const std::vector<std::vector<std::string>>& names) const {
  if (names.size() != components_.size()) {
    throw UnknownSymbolError("m-form arity " + std::to_string(names.size()) +
                             " does not match " +
                             std::to_string(components_.size()) +
                             " components");
  }
  MForm mf;
  for (std::size_t i = 0; i < names.size(); ++i) {
    Form f;
    f.reserve(names[i].size());
    for (const auto& sym : names[i]) f.push_back(components_[i].id_of(sym));
    mf.push_back(std::move(f));
  }
  return mf;
}

std::vector<std::vector<std::string>> CompiledSystem::names(const MForm& mf) const {
  std::vector<std::vector<std::string>> out;
  out.reserve(mf.size());
  for (std::size_t i = 0; i < mf.size(); ++i) {
    std::vector<std::string> syms;
    syms.reserve(mf[i].size());
    for (SymbolId s : mf[i]) {
      syms.push_back(components_[i].names[static_cast<std::size_t>(s)]);
    }
    out.push_back(std::move(syms));
  }
  return out;
}

std::string CompiledSystem::form_text(std::size_t component, const Form& f) const {
  std::ostringstream out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k) out << ' ';
    out << components_[component].names[static_cast<std::size_t>(f[k])];
  }
  return out.str();
}

std::string CompiledSystem::mstring_text(const MForm& mf) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < mf.size(); ++i) {
    if (i) out << " | ";
    out << form_text(i, mf[i]);
  }
  return out.str();
}

}  // namespace scatterscore::engine
