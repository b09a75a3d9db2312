#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "core/model.hpp"

// Reference enumerator used as the independent oracle for the engine: a
// naive string-level search that scans rules and position tuples directly on
// the GrammarSystem, shares no code with the engine, and does no pruning.
namespace testsupport {

using MString = std::vector<std::vector<std::string>>;

// All strictly increasing position tuples where form[pos[j]] == lhs[j].
std::vector<std::vector<std::size_t>> oracle_embeddings(
    const std::vector<std::string>& form, const std::vector<std::string>& lhs);

// Every terminal m-string reachable within max_steps synchronized steps.
// Stops and sets *overflow when the visited-state count passes state_cap.
std::set<MString> oracle_enumerate(const scatterscore::GrammarSystem& sys,
                                   int max_steps,
                                   std::size_t state_cap = SIZE_MAX,
                                   bool* overflow = nullptr);

}  // namespace testsupport
