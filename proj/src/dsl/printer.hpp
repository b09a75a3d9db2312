#pragma once

#include <string>

#include "core/model.hpp"

namespace scatterscore::dsl {

// Canonical text form: components in declaration order, rules by label,
// tuples in Q order, single spaces, one rule per line, LF endings.
// parse_system(print_system(s)) == s for every valid system.
std::string print_system(const GrammarSystem& s);

}  // namespace scatterscore::dsl
