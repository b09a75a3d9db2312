#include "engine/script.hpp"

#include <cctype>
#include <sstream>

#include "core/errors.hpp"

namespace scatterscore::engine {

std::vector<SyncTuple> parse_script(std::string_view text) {
  std::vector<SyncTuple> script;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };

  skip_ws();
  if (pos == text.size()) return script;

  while (true) {
    SyncTuple tuple;
    while (true) {
      skip_ws();
      if (pos == text.size() ||
          !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ScriptSyntaxError("expected a rule label at position " +
                                std::to_string(pos));
      }
      long value = 0;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000'000) {
          throw ScriptSyntaxError("rule label too large");
        }
        ++pos;
      }
      tuple.labels.push_back(static_cast<int>(value));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    script.push_back(std::move(tuple));
    if (pos == text.size()) break;
    if (text[pos] != ';') {
      throw ScriptSyntaxError(std::string("unexpected character '") +
                              text[pos] + "' in script");
    }
    ++pos;
    skip_ws();
    if (pos == text.size()) break;  // trailing ';' is fine
  }
  return script;
}

std::string script_text(const std::vector<SyncTuple>& script) {
  std::ostringstream out;
  for (std::size_t k = 0; k < script.size(); ++k) {
    if (k) out << ';';
    for (std::size_t i = 0; i < script[k].labels.size(); ++i) {
      if (i) out << ',';
      out << script[k].labels[i];
    }
  }
  return out.str();
}

}  // namespace scatterscore::engine
