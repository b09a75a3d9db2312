#include "support/oracle.hpp"

#include <algorithm>
#include <deque>

namespace testsupport {

namespace {

using scatterscore::Component;
using scatterscore::GrammarSystem;
using scatterscore::ScatteredRule;

void collect_embeddings(const std::vector<std::string>& form,
                        const std::vector<std::string>& lhs, std::size_t depth,
                        std::size_t from, std::vector<std::size_t>& current,
                        std::vector<std::vector<std::size_t>>& out) {
  if (depth == lhs.size()) {
    out.push_back(current);
    return;
  }
  for (std::size_t p = from; p < form.size(); ++p) {
    if (form[p] == lhs[depth]) {
      current.push_back(p);
      collect_embeddings(form, lhs, depth + 1, p + 1, current, out);
      current.pop_back();
    }
  }
}

std::vector<std::string> splice(const std::vector<std::string>& form,
                                const ScatteredRule& rule,
                                const std::vector<std::size_t>& positions) {
  std::vector<std::string> out;
  std::size_t next = 0;
  for (std::size_t j = 0; j < positions.size(); ++j) {
    for (std::size_t k = next; k < positions[j]; ++k) out.push_back(form[k]);
    for (const auto& sym : rule.rhs[j]) out.push_back(sym);
    next = positions[j] + 1;
  }
  for (std::size_t k = next; k < form.size(); ++k) out.push_back(form[k]);
  return out;
}

bool form_terminal(const Component& c, const std::vector<std::string>& form) {
  for (const auto& sym : form) {
    if (std::find(c.nonterminals.begin(), c.nonterminals.end(), sym) !=
        c.nonterminals.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::size_t>> oracle_embeddings(
    const std::vector<std::string>& form, const std::vector<std::string>& lhs) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  collect_embeddings(form, lhs, 0, 0, current, out);
  return out;
}

std::set<MString> oracle_enumerate(const GrammarSystem& sys, int max_steps,
                                   std::size_t state_cap, bool* overflow) {
  if (overflow) *overflow = false;
  std::set<MString> results;

  MString start;
  for (const auto& c : sys.components) start.push_back({c.start});

  std::set<MString> visited;
  visited.insert(start);
  std::deque<std::pair<MString, int>> queue;
  queue.emplace_back(start, 0);

  auto record_if_terminal = [&](const MString& state) {
    for (std::size_t i = 0; i < sys.components.size(); ++i) {
      if (!form_terminal(sys.components[i], state[i])) return;
    }
    results.insert(state);
  };
  record_if_terminal(start);

  while (!queue.empty()) {
    auto [state, depth] = queue.front();
    queue.pop_front();
    if (depth >= max_steps) continue;

    for (const auto& tuple : sys.sync) {
      if (tuple.labels.size() != sys.components.size()) continue;

      // Embedding lists per component; empty list means inapplicable.
      std::vector<const ScatteredRule*> rules;
      std::vector<std::vector<std::vector<std::size_t>>> options;
      bool applicable = true;
      for (std::size_t i = 0; i < sys.components.size(); ++i) {
        const ScatteredRule* rule =
            sys.components[i].find_rule(tuple.labels[i]);
        if (!rule) {
          applicable = false;
          break;
        }
        auto embeddings = oracle_embeddings(state[i], rule->lhs);
        if (embeddings.empty()) {
          applicable = false;
          break;
        }
        rules.push_back(rule);
        options.push_back(std::move(embeddings));
      }
      if (!applicable) continue;

      std::vector<std::size_t> choice(options.size(), 0);
      while (true) {
        MString next;
        for (std::size_t i = 0; i < options.size(); ++i) {
          next.push_back(splice(state[i], *rules[i], options[i][choice[i]]));
        }
        if (visited.insert(next).second) {
          if (visited.size() > state_cap) {
            if (overflow) *overflow = true;
            return results;
          }
          record_if_terminal(next);
          queue.emplace_back(std::move(next), depth + 1);
        }
        std::size_t i = options.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (++choice[i] < options[i].size()) {
            done = false;
            break;
          }
          choice[i] = 0;
        }
        if (done) break;
      }
    }
  }
  return results;
}

}  // namespace testsupport
