#pragma once

#include <cstdint>
#include <vector>

#include "engine/system.hpp"

namespace scatterscore::engine {

enum class TraceStatus { terminal, stuck, budget_exhausted };

// How a step picks among the embeddings available in each component.
struct OccurrencePolicy {
  enum class Kind { leftmost, random, explicit_embeddings };
  Kind kind = Kind::leftmost;
  std::uint64_t seed = 0;
  std::vector<Embedding> embeddings;  // explicit: one per component

  static OccurrencePolicy leftmost() { return {}; }
  static OccurrencePolicy random(std::uint64_t seed) {
    OccurrencePolicy p;
    p.kind = Kind::random;
    p.seed = seed;
    return p;
  }
  static OccurrencePolicy explicit_at(std::vector<Embedding> embeddings) {
    OccurrencePolicy p;
    p.kind = Kind::explicit_embeddings;
    p.embeddings = std::move(embeddings);
    return p;
  }
};

struct TraceStep {
  SyncTuple tuple;
  std::vector<Embedding> embeddings;  // one per component
  MForm result;
};

struct DerivationTrace {
  MForm start;
  std::vector<TraceStep> steps;
  TraceStatus status = TraceStatus::stuck;

  const MForm& final_mform() const {
    return steps.empty() ? start : steps.back().result;
  }
};

// Tuples of Q applicable at mf (every component has an embedding for its
// slot), in Q declaration order.
std::vector<SyncTuple> applicable_tuples(const CompiledSystem& sys, const MForm& mf);

struct StepResult {
  MForm next;
  std::vector<Embedding> embeddings;
};

// Applies rule q.labels[i] in component i at the embedding the policy picks.
// Throws TupleInapplicable / PolicyMismatch.
StepResult sync_step(const CompiledSystem& sys, const MForm& mf,
                     const SyncTuple& q, const OccurrencePolicy& policy);

// Applies the script in order from the start m-form; throws ScriptStepFailed
// on the first tuple that is not in Q or not applicable. Status is terminal
// when the final m-form is all-terminal, stuck otherwise.
DerivationTrace derive_scripted(const CompiledSystem& sys,
                                const std::vector<SyncTuple>& script,
                                const OccurrencePolicy& policy = {});

// Uniform random walk: tuple uniform over the applicable ones, embeddings
// uniform per component. Deterministic for a fixed seed.
DerivationTrace derive_random(const CompiledSystem& sys, std::uint64_t seed,
                              int max_steps);

struct EnumerationResult {
  std::vector<MForm> terminal;  // discovery (BFS) order
  bool truncated = false;
};

// Breadth-first closure over all tuples and all embeddings up to max_steps.
// truncated is set when more than max_results terminal m-strings exist, or
// when the search outgrows the internal state guard (the closure is
// exponential in max_steps on recursive systems).
EnumerationResult enumerate_terminal(const CompiledSystem& sys, int max_steps,
                                     std::size_t max_results);

// Bounded membership: true iff candidate is a terminal m-string reachable
// within max_steps.
bool membership(const CompiledSystem& sys,
                const std::vector<std::vector<std::string>>& candidate,
                int max_steps);

}  // namespace scatterscore::engine
