#include "dsl/lexer.hpp"

#include <cctype>

namespace scatterscore::dsl {

namespace {

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<Tok> lex(std::string_view input) {
  std::vector<Tok> out;
  std::size_t pos = 0;
  int line = 1;
  int column = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (input[pos + k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    pos += n;
  };

  auto push = [&](TokKind kind, std::size_t len) {
    Tok t;
    t.kind = kind;
    t.text = std::string(input.substr(pos, len));
    t.span = SourceSpan{pos, line, column, len};
    out.push_back(std::move(t));
    advance(len);
  };

  while (pos < input.size()) {
    const char c = input[pos];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      std::size_t len = 0;
      while (pos + len < input.size() && input[pos + len] != '\n') ++len;
      advance(len);
      continue;
    }
    if (ident_start(c)) {
      std::size_t len = 1;
      while (pos + len < input.size() && ident_char(input[pos + len])) ++len;
      push(TokKind::ident, len);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t len = 1;
      while (pos + len < input.size() &&
             std::isdigit(static_cast<unsigned char>(input[pos + len]))) {
        ++len;
      }
      push(TokKind::integer, len);
      continue;
    }
    if (c == '-' && pos + 1 < input.size() && input[pos + 1] == '>') {
      push(TokKind::arrow, 2);
      continue;
    }
    switch (c) {
      case '{': push(TokKind::lbrace, 1); continue;
      case '}': push(TokKind::rbrace, 1); continue;
      case '(': push(TokKind::lparen, 1); continue;
      case ')': push(TokKind::rparen, 1); continue;
      case '[': push(TokKind::lbracket, 1); continue;
      case ']': push(TokKind::rbracket, 1); continue;
      case ',': push(TokKind::comma, 1); continue;
      case ';': push(TokKind::semicolon, 1); continue;
      case ':': push(TokKind::colon, 1); continue;
      case '-': push(TokKind::dash, 1); continue;
      case '=': push(TokKind::equals, 1); continue;
      case '+': push(TokKind::plus, 1); continue;
      default: push(TokKind::bad, 1); continue;
    }
  }

  Tok eof;
  eof.kind = TokKind::end;
  eof.span = SourceSpan{pos, line, column, 0};
  out.push_back(std::move(eof));
  return out;
}

std::string_view tok_kind_name(TokKind kind) {
  switch (kind) {
    case TokKind::ident: return "identifier";
    case TokKind::integer: return "integer";
    case TokKind::lbrace: return "'{'";
    case TokKind::rbrace: return "'}'";
    case TokKind::lparen: return "'('";
    case TokKind::rparen: return "')'";
    case TokKind::lbracket: return "'['";
    case TokKind::rbracket: return "']'";
    case TokKind::comma: return "','";
    case TokKind::semicolon: return "';'";
    case TokKind::colon: return "':'";
    case TokKind::arrow: return "'->'";
    case TokKind::dash: return "'-'";
    case TokKind::equals: return "'='";
    case TokKind::plus: return "'+'";
    case TokKind::bad: return "invalid character";
    case TokKind::end: return "end of input";
  }
  return "?";
}

}  // namespace scatterscore::dsl
