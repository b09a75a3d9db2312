#include "engine/derive.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <unordered_set>

namespace scatterscore::engine {

namespace {

// Uniform pick in [0, n) by rejection, so seeded runs are reproducible
// across standard libraries.
std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  if (n <= 1) return 0;
  const auto max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % static_cast<std::uint64_t>(n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % static_cast<std::uint64_t>(n));
}

bool tuple_applicable(const CompiledSystem& sys, const MForm& mf,
                      const SyncTuple& q) {
  for (std::size_t i = 0; i < mf.size(); ++i) {
    const CompiledRule* r = sys.component(i).find_rule(q.labels[i]);
    if (!r || !has_embedding(mf[i], *r)) return false;
  }
  return true;
}

// Unambiguous byte key for the dedup set: per component a length prefix
// followed by the raw symbol ids.
std::string key_of(const MForm& mf) {
  std::string key;
  std::size_t total = mf.size() * 4;
  for (const auto& f : mf) total += f.size() * 4;
  key.reserve(total);
  auto put32 = [&key](std::uint32_t v) {
    key.push_back(static_cast<char>(v & 0xFF));
    key.push_back(static_cast<char>((v >> 8) & 0xFF));
    key.push_back(static_cast<char>((v >> 16) & 0xFF));
    key.push_back(static_cast<char>((v >> 24) & 0xFF));
  };
  for (const auto& f : mf) {
    put32(static_cast<std::uint32_t>(f.size()));
    for (SymbolId s : f) put32(static_cast<std::uint32_t>(s));
  }
  return key;
}

// Lower bound on the steps a terminal m-form needs from mf; -1 when no
// terminal m-form is reachable at all. Sound: one step lowers component i's
// nonterminal count by at most max_nt_reduction, and a step needs every
// component to apply a rule, so a component that is already terminal while
// another is not dead-ends the derivation.
int min_steps_to_terminal(const CompiledSystem& sys, const MForm& mf) {
  int bound = 0;
  bool any_terminal = false;
  bool any_nonterminal = false;
  for (std::size_t i = 0; i < mf.size(); ++i) {
    const auto& comp = sys.component(i);
    const auto k = comp.nonterminal_occurrences(mf[i]);
    if (k == 0) {
      any_terminal = true;
      continue;
    }
    any_nonterminal = true;
    if (comp.max_nt_reduction <= 0) return -1;
    const int need = static_cast<int>(
        (k + static_cast<std::size_t>(comp.max_nt_reduction) - 1) /
        static_cast<std::size_t>(comp.max_nt_reduction));
    bound = std::max(bound, need);
  }
  if (any_terminal && any_nonterminal) return -1;
  return bound;
}

// Distinct per-component successor forms a rule can produce; empty when the
// rule is inapplicable.
std::set<Form> component_successors(const Form& form, const CompiledRule& rule) {
  std::set<Form> out;
  for_each_embedding(form, rule, [&](const Embedding& e) {
    out.insert(apply_at(form, rule, e));
    return true;
  });
  return out;
}

// Guard against runaway closures: the reachable state space is exponential
// in max_steps for recursive systems.
constexpr std::size_t kMaxVisitedStates = 500'000;

// Breadth-first closure; visit(mf, depth) is called once per distinct m-form
// in discovery order and returns false to stop the whole search. extra_prune
// skips expansion of nodes that cannot matter to the caller. Returns false
// when the state guard cut the search short.
template <typename Visit, typename ExtraPrune>
bool bfs_closure(const CompiledSystem& sys, int max_steps, Visit&& visit,
                 ExtraPrune&& extra_prune) {
  const std::size_t m = sys.component_count();
  std::unordered_set<std::string> seen;
  std::deque<std::pair<MForm, int>> queue;

  MForm start = sys.start_mform();
  seen.insert(key_of(start));
  if (!visit(start, 0)) return true;
  queue.emplace_back(std::move(start), 0);

  while (!queue.empty()) {
    auto [mf, depth] = std::move(queue.front());
    queue.pop_front();
    if (depth >= max_steps) continue;
    const int remaining = max_steps - depth;
    const int bound = min_steps_to_terminal(sys, mf);
    if (bound < 0 || bound > remaining) continue;
    if (extra_prune(mf)) continue;

    for (const auto& q : sys.sync()) {
      std::vector<std::set<Form>> succ;
      succ.reserve(m);
      bool applicable = true;
      for (std::size_t i = 0; i < m; ++i) {
        const CompiledRule* r = sys.component(i).find_rule(q.labels[i]);
        auto forms = component_successors(mf[i], *r);
        if (forms.empty()) {
          applicable = false;
          break;
        }
        succ.push_back(std::move(forms));
      }
      if (!applicable) continue;

      // Odometer over the per-component choices.
      std::vector<std::set<Form>::const_iterator> it(m);
      for (std::size_t i = 0; i < m; ++i) it[i] = succ[i].begin();
      while (true) {
        MForm child;
        child.reserve(m);
        for (std::size_t i = 0; i < m; ++i) child.push_back(*it[i]);
        if (seen.insert(key_of(child)).second) {
          if (seen.size() > kMaxVisitedStates) return false;
          if (!visit(child, depth + 1)) return true;
          queue.emplace_back(std::move(child), depth + 1);
        }
        std::size_t i = m;
        while (i > 0) {
          --i;
          if (++it[i] != succ[i].end()) break;
          it[i] = succ[i].begin();
          if (i == 0) goto next_tuple;
        }
      }
    next_tuple:;
    }
  }
  return true;
}

}  // namespace

std::vector<SyncTuple> applicable_tuples(const CompiledSystem& sys,
                                         const MForm& mf) {
  std::vector<SyncTuple> out;
  for (const auto& q : sys.sync()) {
    if (q.labels.size() != mf.size()) continue;
    if (tuple_applicable(sys, mf, q)) out.push_back(q);
  }
  return out;
}

StepResult sync_step(const CompiledSystem& sys, const MForm& mf,
                     const SyncTuple& q, const OccurrencePolicy& policy) {
  const std::size_t m = sys.component_count();
  if (q.labels.size() != m || mf.size() != m) {
    throw TupleInapplicable("tuple arity does not match the system");
  }
  if (policy.kind == OccurrencePolicy::Kind::explicit_embeddings &&
      policy.embeddings.size() != m) {
    throw PolicyMismatch("explicit policy needs one embedding per component");
  }

  std::mt19937_64 rng(policy.seed);
  StepResult result;
  result.next.reserve(m);
  result.embeddings.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const CompiledRule* rule = sys.component(i).find_rule(q.labels[i]);
    if (!rule) {
      throw TupleInapplicable("component " + std::to_string(i + 1) +
                              " has no rule labeled " +
                              std::to_string(q.labels[i]));
    }
    Embedding chosen;
    switch (policy.kind) {
      case OccurrencePolicy::Kind::leftmost: {
        auto e = first_embedding(mf[i], *rule);
        if (!e) {
          throw TupleInapplicable("rule " + std::to_string(rule->label) +
                                  " has no occurrence in component " +
                                  std::to_string(i + 1));
        }
        chosen = std::move(*e);
        break;
      }
      case OccurrencePolicy::Kind::random: {
        auto all = find_embeddings(mf[i], *rule);
        if (all.empty()) {
          throw TupleInapplicable("rule " + std::to_string(rule->label) +
                                  " has no occurrence in component " +
                                  std::to_string(i + 1));
        }
        chosen = all[pick(rng, all.size())];
        break;
      }
      case OccurrencePolicy::Kind::explicit_embeddings: {
        chosen = policy.embeddings[i];
        if (!embedding_matches(mf[i], *rule, chosen)) {
          throw PolicyMismatch("explicit embedding for component " +
                               std::to_string(i + 1) +
                               " does not match rule " +
                               std::to_string(rule->label));
        }
        break;
      }
    }
    result.next.push_back(apply_at(mf[i], *rule, chosen));
    result.embeddings.push_back(std::move(chosen));
  }
  return result;
}

DerivationTrace derive_scripted(const CompiledSystem& sys,
                                const std::vector<SyncTuple>& script,
                                const OccurrencePolicy& policy) {
  DerivationTrace trace;
  trace.start = sys.start_mform();
  MForm current = trace.start;

  std::mt19937_64 rng(policy.seed);
  for (std::size_t k = 0; k < script.size(); ++k) {
    const auto& q = script[k];
    const bool in_sync = std::any_of(
        sys.sync().begin(), sys.sync().end(),
        [&q](const SyncTuple& t) { return t.labels == q.labels; });
    if (!in_sync) {
      throw ScriptStepFailed(k, "tuple is not in the synchronization set");
    }
    OccurrencePolicy step_policy = policy;
    if (policy.kind == OccurrencePolicy::Kind::random) {
      step_policy.seed = rng();
    }
    try {
      StepResult step = sync_step(sys, current, q, step_policy);
      current = step.next;
      trace.steps.push_back(TraceStep{q, std::move(step.embeddings), current});
    } catch (const TupleInapplicable& e) {
      throw ScriptStepFailed(k, e.what());
    }
  }
  trace.status = sys.is_terminal(current) ? TraceStatus::terminal
                                          : TraceStatus::stuck;
  return trace;
}

DerivationTrace derive_random(const CompiledSystem& sys, std::uint64_t seed,
                              int max_steps) {
  DerivationTrace trace;
  trace.start = sys.start_mform();
  MForm current = trace.start;
  std::mt19937_64 rng(seed);

  for (int step = 0;; ++step) {
    if (sys.is_terminal(current)) {
      trace.status = TraceStatus::terminal;
      return trace;
    }
    if (step >= max_steps) {
      trace.status = TraceStatus::budget_exhausted;
      return trace;
    }
    std::vector<std::size_t> applicable;
    for (std::size_t t = 0; t < sys.sync().size(); ++t) {
      if (tuple_applicable(sys, current, sys.sync()[t])) applicable.push_back(t);
    }
    if (applicable.empty()) {
      trace.status = TraceStatus::stuck;
      return trace;
    }
    const SyncTuple& q = sys.sync()[applicable[pick(rng, applicable.size())]];

    std::vector<Embedding> embeddings;
    MForm next;
    next.reserve(current.size());
    embeddings.reserve(current.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
      const CompiledRule& rule = *sys.component(i).find_rule(q.labels[i]);
      auto all = find_embeddings(current[i], rule);
      const Embedding& chosen = all[pick(rng, all.size())];
      next.push_back(apply_at(current[i], rule, chosen));
      embeddings.push_back(chosen);
    }
    current = std::move(next);
    trace.steps.push_back(TraceStep{q, std::move(embeddings), current});
  }
}

EnumerationResult enumerate_terminal(const CompiledSystem& sys, int max_steps,
                                     std::size_t max_results) {
  EnumerationResult result;
  const bool complete = bfs_closure(
      sys, max_steps,
      [&](const MForm& mf, int) {
        if (!sys.is_terminal(mf)) return true;
        if (result.terminal.size() == max_results) {
          result.truncated = true;
          return false;
        }
        result.terminal.push_back(mf);
        return true;
      },
      [](const MForm&) { return false; });
  if (!complete) result.truncated = true;
  return result;
}

bool membership(const CompiledSystem& sys,
                const std::vector<std::vector<std::string>>& candidate,
                int max_steps) {
  if (candidate.size() != sys.component_count()) return false;
  MForm target;
  try {
    target = sys.mform_from_names(candidate);
  } catch (const UnknownSymbolError&) {
    return false;
  }
  if (!sys.is_terminal(target)) return false;

  bool erasing = false;
  for (std::size_t i = 0; i < sys.component_count(); ++i) {
    for (const auto& r : sys.component(i).rules) {
      for (const auto& part : r.rhs) {
        if (part.empty()) erasing = true;
      }
    }
  }

  bool found = false;
  bfs_closure(
      sys, max_steps,
      [&](const MForm& mf, int) {
        if (mf == target) {
          found = true;
          return false;
        }
        return true;
      },
      [&](const MForm& mf) {
        if (erasing) return false;
        // Non-erasing forms only grow; anything longer than the target in
        // some component can never become it.
        for (std::size_t i = 0; i < mf.size(); ++i) {
          if (mf[i].size() > target[i].size()) return true;
        }
        return false;
      });
  return found;
}

}  // namespace scatterscore::engine
