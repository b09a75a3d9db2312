#include "engine/forms.hpp"

namespace scatterscore::engine {

std::vector<Embedding> find_embeddings(const Form& form, const CompiledRule& rule) {
  std::vector<Embedding> out;
  for_each_embedding(form, rule, [&](const Embedding& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

bool has_embedding(const Form& form, const CompiledRule& rule) {
  bool found = false;
  for_each_embedding(form, rule, [&](const Embedding&) {
    found = true;
    return false;
  });
  return found;
}

std::optional<Embedding> first_embedding(const Form& form, const CompiledRule& rule) {
  std::optional<Embedding> out;
  for_each_embedding(form, rule, [&](const Embedding& e) {
    out = e;
    return false;
  });
  return out;
}

std::size_t count_embeddings(const Form& form, const CompiledRule& rule) {
  std::size_t count = 0;
  for_each_embedding(form, rule, [&](const Embedding&) {
    ++count;
    return true;
  });
  return count;
}

bool embedding_matches(const Form& form, const CompiledRule& rule,
                       const Embedding& e) {
  if (e.positions.size() != rule.lhs.size()) return false;
  std::int32_t prev = -1;
  for (std::size_t j = 0; j < e.positions.size(); ++j) {
    const std::int32_t p = e.positions[j];
    if (p <= prev || p >= static_cast<std::int32_t>(form.size())) return false;
    if (form[static_cast<std::size_t>(p)] != rule.lhs[j]) return false;
    prev = p;
  }
  return true;
}

Form apply_at(const Form& form, const CompiledRule& rule, const Embedding& e) {
  if (!embedding_matches(form, rule, e)) {
    throw InvalidEmbedding("embedding does not match rule " +
                           std::to_string(rule.label) + " in this form");
  }
  Form out;
  std::size_t extra = 0;
  for (const auto& part : rule.rhs) extra += part.size();
  out.reserve(form.size() - rule.lhs.size() + extra);

  std::size_t next = 0;
  for (std::size_t j = 0; j < e.positions.size(); ++j) {
    const auto p = static_cast<std::size_t>(e.positions[j]);
    out.insert(out.end(), form.begin() + static_cast<std::ptrdiff_t>(next),
               form.begin() + static_cast<std::ptrdiff_t>(p));
    out.insert(out.end(), rule.rhs[j].begin(), rule.rhs[j].end());
    next = p + 1;
  }
  out.insert(out.end(), form.begin() + static_cast<std::ptrdiff_t>(next), form.end());
  return out;
}

}  // namespace scatterscore::engine
