#include "dsl/parser.hpp"

#include <cstdint>

#include "dsl/lexer.hpp"
#include "music/pitch.hpp"

namespace scatterscore::dsl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  ParseResult run() {
    ParseResult result;
    GrammarSystem system;
    const bool parsed = parse_system_body(system);
    result.diagnostics = std::move(diags_);
    bool has_error = false;
    for (const auto& d : result.diagnostics) {
      if (d.severity == ParseDiagnostic::Severity::error) has_error = true;
    }
    if (parsed && !has_error) result.system = std::move(system);
    return result;
  }

 private:
  const Tok& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }

  const Tok& take() {
    const Tok& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  bool at(TokKind kind) const { return peek().kind == kind; }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == TokKind::ident && peek().text == kw;
  }

  bool eat(TokKind kind) {
    if (!at(kind)) return false;
    take();
    return true;
  }

  bool eat_keyword(std::string_view kw) {
    if (!at_keyword(kw)) return false;
    take();
    return true;
  }

  void error(const SourceSpan& span, std::string message) {
    diags_.push_back(ParseDiagnostic{span, std::move(message),
                                     ParseDiagnostic::Severity::error});
  }

  void error_here(std::string message) { error(peek().span, std::move(message)); }

  bool expect(TokKind kind, std::string_view what) {
    if (eat(kind)) return true;
    error_here("expected " + std::string(what) + ", found " +
               std::string(tok_kind_name(peek().kind)));
    return false;
  }

  bool expect_keyword(std::string_view kw) {
    if (eat_keyword(kw)) return true;
    error_here("expected '" + std::string(kw) + "'");
    return false;
  }

  std::optional<std::string> expect_ident(std::string_view what) {
    if (at(TokKind::ident)) return take().text;
    error_here("expected " + std::string(what));
    return std::nullopt;
  }

  std::optional<int> expect_int(std::string_view what) {
    if (!at(TokKind::integer)) {
      error_here("expected " + std::string(what));
      return std::nullopt;
    }
    const Tok& t = take();
    std::int64_t value = 0;
    for (char c : t.text) {
      value = value * 10 + (c - '0');
      if (value > 1'000'000'000) {
        error(t.span, "integer too large");
        return std::nullopt;
      }
    }
    return static_cast<int>(value);
  }

  std::optional<int> expect_signed_int(std::string_view what) {
    bool negative = false;
    if (at(TokKind::dash)) {
      take();
      negative = true;
    }
    auto value = expect_int(what);
    if (!value) return std::nullopt;
    return negative ? -*value : *value;
  }

  // Consumes through the next ';' but never past a '}' or a statement
  // keyword, so one bad statement costs at most itself.
  void recover_statement() {
    while (!at(TokKind::end)) {
      if (at(TokKind::semicolon)) {
        take();
        return;
      }
      if (at(TokKind::rbrace) || at_keyword("rule") || at_keyword("tokens") ||
          at_keyword("component") || at_keyword("sync")) {
        return;
      }
      take();
    }
  }

  void recover_block() {
    int depth = 0;
    while (!at(TokKind::end)) {
      if (at(TokKind::lbrace)) ++depth;
      if (at(TokKind::rbrace)) {
        if (depth == 0) {
          take();
          return;
        }
        --depth;
      }
      take();
    }
  }

  bool parse_system_body(GrammarSystem& system) {
    if (!expect_keyword("system")) return false;
    auto name = expect_ident("system name");
    if (!name) return false;
    system.name = std::move(*name);
    if (!expect(TokKind::lbrace, "'{'")) return false;

    if (!at_keyword("component")) {
      error_here("expected 'component'");
      return false;
    }
    while (at_keyword("component")) {
      Component c;
      parse_component(c);
      system.components.push_back(std::move(c));
    }

    if (at_keyword("sync")) {
      parse_sync(system);
    } else {
      error_here("expected 'sync'");
    }

    expect(TokKind::rbrace, "'}'");
    if (!at(TokKind::end)) {
      error_here("unexpected input after the closing '}'");
    }
    return true;
  }

  void parse_component(Component& c) {
    c.span = peek().span;
    take();  // 'component'
    if (auto name = expect_ident("component name")) c.name = std::move(*name);
    if (!expect(TokKind::lbrace, "'{'")) {
      recover_block();
      return;
    }

    if (expect_keyword("start")) {
      if (auto s = expect_ident("start symbol")) c.start = std::move(*s);
    } else {
      recover_statement();
    }

    if (expect_keyword("nonterminals")) {
      if (!at(TokKind::ident)) error_here("expected at least one nonterminal");
      while (at(TokKind::ident)) c.nonterminals.push_back(take().text);
      expect(TokKind::semicolon, "';'");
    } else {
      recover_statement();
    }

    if (at_keyword("program")) {
      take();
      if (auto v = expect_int("program number")) c.program = *v;
      expect(TokKind::semicolon, "';'");
    }
    if (at_keyword("octave_offset")) {
      take();
      if (auto v = expect_signed_int("octave offset")) c.octave_offset = *v;
      expect(TokKind::semicolon, "';'");
    }

    if (at_keyword("tokens")) {
      take();
      if (expect(TokKind::lbrace, "'{'")) {
        if (!at(TokKind::ident)) error_here("expected a token definition");
        while (at(TokKind::ident)) {
          TokenDef def;
          if (parse_tokendef(def)) {
            c.tokens.push_back(std::move(def));
          } else {
            recover_statement();
          }
        }
        expect(TokKind::rbrace, "'}'");
      }
    }

    if (!at_keyword("rule")) error_here("expected 'rule'");
    while (at_keyword("rule")) {
      ScatteredRule r;
      if (parse_rule(r)) {
        c.rules.push_back(std::move(r));
      } else {
        recover_statement();
      }
    }
    sort_rules_by_label(c);

    if (!eat(TokKind::rbrace)) {
      error_here("expected 'rule' or '}'");
      recover_block();
    }
  }

  bool parse_tokendef(TokenDef& def) {
    def.span = peek().span;
    def.name = take().text;
    if (!expect(TokKind::equals, "'='")) return false;
    if (!parse_payload(def)) return false;
    if (!parse_attrs(def.attrs)) return false;
    return expect(TokKind::semicolon, "';'");
  }

  bool parse_payload(TokenDef& def) {
    if (eat_keyword("rest")) {
      def.payload = RestPayload{};
      return true;
    }
    if (eat_keyword("note")) {
      const SourceSpan span = peek().span;
      auto name = expect_ident("pitch name");
      if (!name) return false;
      auto pitch = music::parse_pitch_name(*name);
      if (!pitch) {
        error(span, "'" + *name + "' is not a pitch name (c d e f g a h with optional is/es)");
        return false;
      }
      if (pitch->reg) {
        error(span, "note pitch must not carry a register suffix; use the register slot");
        return false;
      }
      def.payload = NotePayload{std::move(*name)};
      return true;
    }
    if (eat_keyword("chord")) {
      ChordPayload chord;
      while (true) {
        const SourceSpan span = peek().span;
        auto name = expect_ident("pitch class");
        if (!name) return false;
        if (!music::parse_pitch_name(*name)) {
          error(span, "'" + *name + "' is not a pitch-class name");
          return false;
        }
        chord.pitches.push_back(std::move(*name));
        if (!eat(TokKind::plus)) break;
      }
      def.payload = std::move(chord);
      return true;
    }
    error_here("expected 'note', 'rest' or 'chord'");
    return false;
  }

  // [op, dur, reg, dyn]; '-' marks an absent slot.
  bool parse_attrs(AttributeVector& attrs) {
    if (!expect(TokKind::lbracket, "'['")) return false;

    struct Slot {
      enum class Kind { none, number, word } kind = Kind::none;
      int number = 0;
      std::string word;
      SourceSpan span;
    };
    auto parse_slot = [this]() -> std::optional<Slot> {
      Slot s;
      s.span = peek().span;
      if (at(TokKind::dash)) {
        take();
        if (at(TokKind::integer)) {
          auto v = expect_int("integer");
          if (!v) return std::nullopt;
          s.kind = Slot::Kind::number;
          s.number = -*v;
        }
        return s;
      }
      if (at(TokKind::integer)) {
        auto v = expect_int("integer");
        if (!v) return std::nullopt;
        s.kind = Slot::Kind::number;
        s.number = *v;
        return s;
      }
      if (at(TokKind::ident)) {
        s.kind = Slot::Kind::word;
        s.word = take().text;
        return s;
      }
      error_here("expected an attribute value or '-'");
      return std::nullopt;
    };

    Slot slots[4];
    for (int i = 0; i < 4; ++i) {
      if (i > 0 && !expect(TokKind::comma, "','")) return false;
      auto s = parse_slot();
      if (!s) return false;
      slots[i] = std::move(*s);
    }
    if (!expect(TokKind::rbracket, "']'")) return false;

    bool ok = true;
    // op
    switch (slots[0].kind) {
      case Slot::Kind::none: break;
      case Slot::Kind::word: attrs.op = operation_from_name(slots[0].word); break;
      case Slot::Kind::number:
        error(slots[0].span, "the operation slot cannot be a number");
        ok = false;
        break;
    }
    // dur
    switch (slots[1].kind) {
      case Slot::Kind::none: break;
      case Slot::Kind::word: {
        auto d = duration_from_name(slots[1].word);
        if (!d) {
          error(slots[1].span, "unknown duration '" + slots[1].word + "' (e q h f)");
          ok = false;
        } else {
          attrs.dur = *d;
        }
        break;
      }
      case Slot::Kind::number:
        error(slots[1].span, "the duration slot cannot be a number");
        ok = false;
        break;
    }
    // reg
    switch (slots[2].kind) {
      case Slot::Kind::none: break;
      case Slot::Kind::number: attrs.reg = slots[2].number; break;
      case Slot::Kind::word:
        error(slots[2].span, "the register slot must be an integer or '-'");
        ok = false;
        break;
    }
    // dyn
    switch (slots[3].kind) {
      case Slot::Kind::none: break;
      case Slot::Kind::word: {
        auto d = dynamic_from_name(slots[3].word);
        if (!d) {
          error(slots[3].span, "unknown dynamic '" + slots[3].word + "' (pp p mp mf f ff)");
          ok = false;
        } else {
          attrs.dyn = *d;
        }
        break;
      }
      case Slot::Kind::number:
        error(slots[3].span, "the dynamic slot cannot be a number");
        ok = false;
        break;
    }
    return ok;
  }

  bool parse_rule(ScatteredRule& r) {
    r.span = peek().span;
    take();  // 'rule'
    auto label = expect_int("rule label");
    if (!label) return false;
    r.label = *label;
    if (!expect(TokKind::colon, "':'")) return false;

    if (at(TokKind::lparen)) {
      take();
      while (true) {
        auto sym = expect_ident("lhs nonterminal");
        if (!sym) return false;
        r.lhs.push_back(std::move(*sym));
        if (!eat(TokKind::comma)) break;
      }
      if (!expect(TokKind::rparen, "')'")) return false;
    } else {
      auto sym = expect_ident("lhs nonterminal");
      if (!sym) return false;
      r.lhs.push_back(std::move(*sym));
    }

    if (!expect(TokKind::arrow, "'->'")) return false;

    auto parse_seq = [this]() -> std::optional<std::vector<std::string>> {
      if (!at(TokKind::ident)) {
        error_here("expected a symbol");
        return std::nullopt;
      }
      std::vector<std::string> seq;
      while (at(TokKind::ident)) seq.push_back(take().text);
      return seq;
    };

    if (at(TokKind::lparen)) {
      take();
      while (true) {
        auto seq = parse_seq();
        if (!seq) return false;
        r.rhs.push_back(std::move(*seq));
        if (!eat(TokKind::comma)) break;
      }
      if (!expect(TokKind::rparen, "')'")) return false;
    } else {
      auto seq = parse_seq();
      if (!seq) return false;
      r.rhs.push_back(std::move(*seq));
    }

    return expect(TokKind::semicolon, "';'");
  }

  void parse_sync(GrammarSystem& system) {
    take();  // 'sync'
    if (!expect(TokKind::lbrace, "'{'")) {
      recover_block();
      return;
    }
    if (!at(TokKind::lparen)) error_here("expected a sync tuple");
    while (at(TokKind::lparen)) {
      SyncTuple tuple;
      tuple.span = peek().span;
      take();
      bool ok = true;
      while (true) {
        auto v = expect_int("rule label");
        if (!v) {
          ok = false;
          break;
        }
        tuple.labels.push_back(*v);
        if (!eat(TokKind::comma)) break;
      }
      if (ok && !expect(TokKind::rparen, "')'")) ok = false;
      if (ok) {
        system.sync.push_back(std::move(tuple));
      } else {
        // Skip to the next tuple or the end of the block.
        while (!at(TokKind::end) && !at(TokKind::lparen) && !at(TokKind::rbrace)) {
          take();
        }
      }
    }
    expect(TokKind::rbrace, "'}'");
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  std::vector<ParseDiagnostic> diags_;
};

}  // namespace

ParseResult parse_system(std::string_view text) {
  return Parser(text).run();
}

}  // namespace scatterscore::dsl
