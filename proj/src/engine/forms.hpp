#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/errors.hpp"

namespace scatterscore::engine {

using SymbolId = std::int32_t;

// Sentential form of one component; ids index the component's symbol table
// (nonterminals first, then terminals).
using Form = std::vector<SymbolId>;

// One sentential form per component.
using MForm = std::vector<Form>;

// Strictly increasing positions of the lhs occurrences a rule rewrites.
struct Embedding {
  std::vector<std::int32_t> positions;

  bool operator==(const Embedding&) const = default;
};

struct CompiledRule {
  int label = 0;
  std::vector<SymbolId> lhs;
  std::vector<std::vector<SymbolId>> rhs;
  // |lhs| minus the number of nonterminal occurrences across the rhs: how much
  // one application can lower the form's nonterminal count.
  int nonterminal_delta = 0;
};

// Visits every strictly increasing position tuple matching the rule's lhs, in
// lexicographic order. The callback returns false to stop early.
template <typename Fn>
bool for_each_embedding(const Form& form, const CompiledRule& rule, Fn&& fn) {
  const std::size_t n = rule.lhs.size();
  std::vector<std::int32_t> positions(n);
  const auto size = static_cast<std::int32_t>(form.size());

  // Iterative DFS over position choices.
  std::size_t depth = 0;
  std::int32_t cursor = 0;
  while (true) {
    if (depth == n) {
      Embedding e{positions};
      if (!fn(e)) return false;
      if (n == 0) return true;
      --depth;
      cursor = positions[depth] + 1;
      continue;
    }
    bool found = false;
    for (std::int32_t p = cursor; p + static_cast<std::int32_t>(n - depth) <= size; ++p) {
      if (form[static_cast<std::size_t>(p)] == rule.lhs[depth]) {
        positions[depth] = p;
        ++depth;
        cursor = p + 1;
        found = true;
        break;
      }
    }
    if (found) continue;
    if (depth == 0) return true;
    --depth;
    cursor = positions[depth] + 1;
  }
}

std::vector<Embedding> find_embeddings(const Form& form, const CompiledRule& rule);
bool has_embedding(const Form& form, const CompiledRule& rule);
std::optional<Embedding> first_embedding(const Form& form, const CompiledRule& rule);
std::size_t count_embeddings(const Form& form, const CompiledRule& rule);

bool embedding_matches(const Form& form, const CompiledRule& rule,
                       const Embedding& e);

// Replaces the symbol at each embedding position with the matching rhs part;
// everything between positions is copied verbatim.
Form apply_at(const Form& form, const CompiledRule& rule, const Embedding& e);

}  // namespace scatterscore::engine
