#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/model.hpp"

namespace scatterscore::dsl {

enum class TokKind {
  ident,
  integer,
  lbrace,
  rbrace,
  lparen,
  rparen,
  lbracket,
  rbracket,
  comma,
  semicolon,
  colon,
  arrow,
  dash,
  equals,
  plus,
  bad,
  end,
};

struct Tok {
  TokKind kind = TokKind::end;
  std::string text;
  SourceSpan span;
};

// Whitespace-insensitive between tokens; '#' starts a line comment. Unknown
// bytes come back as `bad` tokens so the parser can report and move on.
std::vector<Tok> lex(std::string_view input);

std::string_view tok_kind_name(TokKind kind);

}  // namespace scatterscore::dsl
