#pragma once

#include <vector>

#include "core/model.hpp"

namespace scatterscore {

struct RuleClass {
  bool context_free = false;  // n = 1
  bool simple = false;        // every rhs part has length <= 1
  bool linear = false;        // context-free with at most 1 nonterminal on the rhs
  bool erasing = false;       // some rhs part is empty
};

struct ComponentClass {
  bool all_context_free = true;
  bool all_linear = true;
  bool all_simple = true;
  bool non_erasing = true;
};

struct SystemClass {
  std::vector<ComponentClass> components;
  bool context_free_restricted = true;
  bool linear_restricted = true;
  bool non_erasing = true;
};

// Linearity needs to tell nonterminals from terminals, hence the component.
RuleClass classify_rule(const ScatteredRule& r, const Component& owner);
ComponentClass classify_component(const Component& c);
SystemClass classify_system(const GrammarSystem& s);

}  // namespace scatterscore
