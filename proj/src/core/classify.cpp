#include "core/classify.hpp"

namespace scatterscore {

RuleClass classify_rule(const ScatteredRule& r, const Component& owner) {
  RuleClass k;
  k.context_free = r.lhs.size() == 1;
  k.simple = true;
  k.erasing = false;
  std::size_t rhs_nonterminals = 0;
  for (const auto& part : r.rhs) {
    if (part.size() > 1) k.simple = false;
    if (part.empty()) k.erasing = true;
    for (const auto& sym : part) {
      if (owner.is_nonterminal(sym)) ++rhs_nonterminals;
    }
  }
  k.linear = k.context_free && rhs_nonterminals <= 1;
  return k;
}

ComponentClass classify_component(const Component& c) {
  ComponentClass k;
  for (const auto& r : c.rules) {
    const RuleClass rc = classify_rule(r, c);
    k.all_context_free = k.all_context_free && rc.context_free;
    k.all_linear = k.all_linear && rc.linear;
    k.all_simple = k.all_simple && rc.simple;
    k.non_erasing = k.non_erasing && !rc.erasing;
  }
  return k;
}

SystemClass classify_system(const GrammarSystem& s) {
  SystemClass k;
  for (const auto& c : s.components) {
    k.components.push_back(classify_component(c));
    const auto& cc = k.components.back();
    k.context_free_restricted = k.context_free_restricted && cc.all_context_free;
    k.linear_restricted = k.linear_restricted && cc.all_linear;
    k.non_erasing = k.non_erasing && cc.non_erasing;
  }
  return k;
}

}  // namespace scatterscore
