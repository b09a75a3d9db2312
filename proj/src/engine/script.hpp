#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/model.hpp"

namespace scatterscore::engine {

// Script syntax "l1,...,lm;l1,...,lm;..." — rule labels per tuple, tuples
// separated by ';'. Whitespace around numbers is tolerated. Throws
// ScriptSyntaxError; arity against the system is checked at derivation time.
std::vector<SyncTuple> parse_script(std::string_view text);

std::string script_text(const std::vector<SyncTuple>& script);

}  // namespace scatterscore::engine
