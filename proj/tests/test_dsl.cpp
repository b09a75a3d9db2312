#include <doctest.h>

#include <random>

#include "core/validate.hpp"
#include "dsl/parser.hpp"
#include "dsl/printer.hpp"
#include "support/builders.hpp"
#include "support/corpus.hpp"
#include "support/system_gen.hpp"

using namespace scatterscore;
using namespace scatterscore::dsl;
using namespace testsupport;

namespace {

std::size_t error_count(const ParseResult& r) {
  std::size_t n = 0;
  for (const auto& d : r.diagnostics) {
    if (d.severity == ParseDiagnostic::Severity::error) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("the corpus files parse into the expected shapes") {
  const auto allegro = parse_corpus("allegro.mgs");
  CHECK(allegro.name == "allegro");
  CHECK(allegro.components.size() == 2);
  CHECK(allegro.sync.size() == 5);
  CHECK(allegro.components[1].octave_offset == -1);

  const auto jazz = parse_corpus("jazz.mgs");
  CHECK(jazz.components.size() == 2);
  CHECK(jazz.sync.size() == 7);

  const auto trio = parse_corpus("trio.mgs");
  CHECK(trio.components.size() == 3);
  CHECK(trio.sync.size() == 14);
  CHECK(trio.components[2].program == 65);

  const auto sonata = parse_corpus("sonata_sketch.mgs");
  CHECK(sonata.components.size() == 1);
  CHECK(sonata.sync.size() == 9);

  for (const char* name :
       {"allegro.mgs", "jazz.mgs", "trio.mgs", "sonata_sketch.mgs"}) {
    CHECK(validate_system(parse_corpus(name)).empty());
  }
}

TEST_CASE("empty input reports the missing system keyword at 1:1") {
  const auto result = parse_system("");
  CHECK(!result.ok());
  REQUIRE(!result.diagnostics.empty());
  CHECK(result.diagnostics[0].message == "expected 'system'");
  CHECK(result.diagnostics[0].span.line == 1);
  CHECK(result.diagnostics[0].span.column == 1);
}

TEST_CASE("syntax and semantics are separated") {
  // Arity-3 tuple in a 2-component system: fine syntactically, caught by
  // validation.
  const std::string text = R"(system t {
  component a {
    start S
    nonterminals S ;
    tokens { x = rest [-, q, -, -] ; }
    rule 1 : S -> x ;
  }
  component b {
    start S
    nonterminals S ;
    tokens { x = rest [-, q, -, -] ; }
    rule 1 : S -> x ;
  }
  sync { (1, 1, 1) }
})";
  const auto result = parse_system(text);
  REQUIRE(result.ok());
  const auto diags = validate_system(*result.system);
  REQUIRE(!diags.empty());
  CHECK(diags[0].code == DiagCode::ArityMismatch);
}

TEST_CASE("parser recovers and reports independent faults") {
  // Three independent faults: a broken token definition, a broken rule and a
  // broken sync tuple.
  const std::string text = R"(system broken {
  component a {
    start S
    nonterminals S A ;
    tokens {
      x = note [-, q, -, -] ;
      y = rest [-, q, -, -] ;
    }
    rule 1 : S - x ;
    rule 2 : S -> y ;
  }
  sync { (1 ; (2) }
})";
  const auto result = parse_system(text);
  CHECK(!result.ok());
  CHECK(error_count(result) >= 3);
}

TEST_CASE("spans point at the offending line") {
  const std::string text = "system t {\n  component a {\n    start S\n"
                           "    nonterminals S ;\n    rule 0 : S -> ;\n  }\n"
                           "  sync { (0) }\n}\n";
  const auto result = parse_system(text);
  CHECK(!result.ok());
  bool found = false;
  for (const auto& d : result.diagnostics) {
    if (d.span.line == 5) found = true;
  }
  CHECK(found);
}

TEST_CASE("pitch payload rules") {
  const auto wrap = [](const std::string& tokens) {
    return "system t { component a { start S nonterminals S ; tokens { " +
           tokens + " } rule 1 : S -> S ; } sync { (1) } }";
  };

  SUBCASE("German accidental spellings parse") {
    const auto r = parse_system(
        wrap("x = note cis [-, q, -, -] ; y = note es [-, q, -, -] ; "
             "z = chord es + g + ces [-, h, 1, -] ;"));
    CHECK(r.ok());
  }
  SUBCASE("chord entries may carry register suffixes") {
    const auto r = parse_system(wrap("x = chord c + c2 + e [-, q, 1, -] ;"));
    REQUIRE(r.ok());
    const auto& payload =
        std::get<ChordPayload>(r.system->components[0].tokens[0].payload);
    CHECK(payload.pitches == std::vector<std::string>{"c", "c2", "e"});
  }
  SUBCASE("note payloads must not carry register suffixes") {
    CHECK(!parse_system(wrap("x = note c2 [-, q, -, -] ;")).ok());
  }
  SUBCASE("non-pitch letters are rejected") {
    CHECK(!parse_system(wrap("x = note p [-, e, -, -] ;")).ok());
    CHECK(!parse_system(wrap("x = note b [-, e, -, -] ;")).ok());
  }
  SUBCASE("attribute slots are typed") {
    CHECK(!parse_system(wrap("x = rest [-, 3, -, -] ;")).ok());
    CHECK(!parse_system(wrap("x = rest [-, q, low, -] ;")).ok());
    CHECK(!parse_system(wrap("x = rest [-, q, -, loud] ;")).ok());
    CHECK(parse_system(wrap("x = rest [slide, q, -2, ff] ;")).ok());
  }
}

TEST_CASE("printing is canonical and round-trips") {
  SUBCASE("corpus files are stable after one canonicalization") {
    for (const char* name :
         {"allegro.mgs", "jazz.mgs", "trio.mgs", "sonata_sketch.mgs"}) {
      const auto original = parse_corpus(name);
      const auto printed = print_system(original);
      const auto reparsed = parse_system(printed);
      REQUIRE(reparsed.ok());
      CHECK(*reparsed.system == original);
      CHECK(print_system(*reparsed.system) == printed);
    }
  }
  SUBCASE("fuzz-generated systems round-trip") {
    std::mt19937_64 rng(5150);
    for (int round = 0; round < 60; ++round) {
      const auto sys = gen_rich_system(rng);
      REQUIRE(validate_system(sys).empty());
      const auto printed = print_system(sys);
      const auto reparsed = parse_system(printed);
      REQUIRE(reparsed.ok());
      CHECK(*reparsed.system == sys);
      CHECK(print_system(*reparsed.system) == printed);
    }
  }
  SUBCASE("rules print in label order regardless of input order") {
    const std::string text =
        "system t { component a { start S nonterminals S A ; "
        "tokens { x = rest [-, q, -, -] ; } "
        "rule 2 : A -> x ; rule 1 : S -> A ; } sync { (1) (2) } }";
    const auto r = parse_system(text);
    REQUIRE(r.ok());
    CHECK(r.system->components[0].rules[0].label == 1);
    CHECK(r.system->components[0].rules[1].label == 2);
  }
}

TEST_CASE("malformed inputs never crash the parser") {
  std::mt19937_64 rng(31337);
  const std::string corpus = load_file(corpus_path("jazz.mgs"));

  SUBCASE("random byte soup") {
    for (int round = 0; round < 300; ++round) {
      std::string input;
      const auto len = rng() % 600;
      for (std::size_t i = 0; i < len; ++i) {
        input.push_back(static_cast<char>(rng() % 256));
      }
      const auto result = parse_system(input);
      CHECK((result.ok() || !result.diagnostics.empty()));
    }
  }
  SUBCASE("truncations of a real file") {
    for (std::size_t cut = 0; cut < corpus.size(); cut += 37) {
      parse_system(std::string_view(corpus).substr(0, cut));
    }
    CHECK(true);
  }
  SUBCASE("mutations of a real file") {
    for (int round = 0; round < 200; ++round) {
      std::string input = corpus;
      const auto flips = 1 + rng() % 8;
      for (std::size_t f = 0; f < flips; ++f) {
        input[rng() % input.size()] = static_cast<char>(rng() % 256);
      }
      parse_system(input);
    }
    CHECK(true);
  }
  SUBCASE("a 1 MB input returns promptly") {
    std::string big = "system big { component a { start S nonterminals S ; ";
    big.reserve(1 << 20);
    while (big.size() < (1 << 20) - 64) {
      switch (rng() % 4) {
        case 0: big += "rule 1 : S -> S ; "; break;
        case 1: big += "(((((((((( "; break;
        case 2: big += "tok_" + std::to_string(rng() % 100) + " "; break;
        default: big += "; -> ] } { , "; break;
      }
    }
    const auto result = parse_system(big);
    CHECK((result.ok() || !result.diagnostics.empty()));
  }
}
