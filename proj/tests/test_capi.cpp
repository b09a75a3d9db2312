#include <doctest.h>

#include <cstring>
#include <string>

#include "scatterscore.h"
#include "support/corpus.hpp"
#include "support/midi_checker.hpp"

using testsupport::corpus_path;
using testsupport::load_file;

namespace {

ss_system* load(const std::string& name) {
  const auto text = load_file(corpus_path(name));
  ss_system* sys = nullptr;
  char* diags = nullptr;
  const auto status = ss_system_parse(text.data(), text.size(), 0, &sys, &diags);
  if (diags) ss_string_free(diags);
  REQUIRE(status == SS_OK);
  REQUIRE(sys != nullptr);
  return sys;
}

}  // namespace

TEST_CASE("C API surface") {
  CHECK(std::strlen(ss_version()) > 0);

  ss_system* jazz = load("jazz.mgs");
  CHECK(ss_system_component_count(jazz) == 2);
  CHECK(std::string(ss_system_name(jazz)) == "jazz");
  CHECK(std::string(ss_component_name(jazz, 0)) == "treble");
  CHECK(ss_component_rule_count(jazz, 0) == 7);
  CHECK(ss_component_rule_label(jazz, 0, 0) == 1);
  CHECK(ss_component_name(jazz, 5) == nullptr);
  CHECK(ss_component_rule_count(jazz, -1) == -1);

  SUBCASE("print round-trips through parse") {
    char* printed = nullptr;
    REQUIRE(ss_system_print(jazz, &printed) == SS_OK);
    ss_system* again = nullptr;
    char* diags = nullptr;
    CHECK(ss_system_parse(printed, std::strlen(printed), 0, &again, &diags) ==
          SS_OK);
    char* printed_again = nullptr;
    REQUIRE(ss_system_print(again, &printed_again) == SS_OK);
    CHECK(std::string(printed) == printed_again);
    ss_string_free(printed);
    ss_string_free(printed_again);
    if (diags) ss_string_free(diags);
    ss_system_free(again);
  }

  SUBCASE("classification") {
    ss_rule_class rc;
    REQUIRE(ss_rule_classify(jazz, 0, 3, &rc) == SS_OK);
    CHECK(rc.context_free == 0);
    REQUIRE(ss_rule_classify(jazz, 0, 1, &rc) == SS_OK);
    CHECK(rc.context_free == 1);
    CHECK(ss_rule_classify(jazz, 0, 99, &rc) == SS_ERR_INVALID_ARG);

    ss_system_class sc;
    REQUIRE(ss_system_classify(jazz, &sc) == SS_OK);
    CHECK(sc.context_free_restricted == 0);
    CHECK(sc.non_erasing == 1);
  }

  SUBCASE("scripted derivation, rendering and MIDI bytes") {
    ss_trace* trace = nullptr;
    REQUIRE(ss_derive_scripted(jazz, "2,2;3,3;6,6;4,4;5,5;7,7",
                               SS_POLICY_LEFTMOST, 0, &trace) == SS_OK);
    CHECK(ss_trace_get_status(trace) == SS_TRACE_TERMINAL);
    CHECK(ss_trace_step_count(trace) == 6);

    char* mstring = nullptr;
    REQUIRE(ss_trace_final_mstring(trace, &mstring) == SS_OK);
    CHECK(std::string(mstring).find(" | ") != std::string::npos);
    ss_string_free(mstring);

    char* report = nullptr;
    REQUIRE(ss_trace_report(trace, &report) == SS_OK);
    CHECK(std::string(report).find("status: terminal") != std::string::npos);
    ss_string_free(report);

    ss_score* score = nullptr;
    REQUIRE(ss_score_from_trace(jazz, trace, &score) == SS_OK);

    char* text = nullptr;
    REQUIRE(ss_score_render_text(score, &text) == SS_OK);
    CHECK(std::string(text).rfind("score ppq=480 tempo=120", 0) == 0);
    ss_string_free(text);

    uint8_t* bytes = nullptr;
    size_t len = 0;
    REQUIRE(ss_score_render_midi(score, &bytes, &len) == SS_OK);
    const std::vector<std::uint8_t> midi(bytes, bytes + len);
    ss_bytes_free(bytes);
    const auto check = testsupport::check_midi(midi);
    CHECK(check.ok);
    CHECK(check.mtrk_chunks == 3);

    ss_score_free(score);
    ss_trace_free(trace);
  }

  SUBCASE("a stuck trace cannot become a score") {
    ss_trace* trace = nullptr;
    REQUIRE(ss_derive_scripted(jazz, "2,2", SS_POLICY_LEFTMOST, 0, &trace) ==
            SS_OK);
    CHECK(ss_trace_get_status(trace) == SS_TRACE_STUCK);
    ss_score* score = nullptr;
    CHECK(ss_score_from_trace(jazz, trace, &score) == SS_ERR_STUCK);
    CHECK(score == nullptr);
    ss_trace_free(trace);
  }

  SUBCASE("script failures carry a message") {
    ss_trace* trace = nullptr;
    CHECK(ss_derive_scripted(jazz, "3,3", SS_POLICY_LEFTMOST, 0, &trace) ==
          SS_ERR_SCRIPT);
    CHECK(std::strlen(ss_last_error()) > 0);
    CHECK(trace == nullptr);
  }

  SUBCASE("random derivation is deterministic per seed") {
    ss_trace* a = nullptr;
    ss_trace* b = nullptr;
    REQUIRE(ss_derive_random(jazz, 42, 32, &a) == SS_OK);
    REQUIRE(ss_derive_random(jazz, 42, 32, &b) == SS_OK);
    char* ra = nullptr;
    char* rb = nullptr;
    REQUIRE(ss_trace_report(a, &ra) == SS_OK);
    REQUIRE(ss_trace_report(b, &rb) == SS_OK);
    CHECK(std::string(ra) == rb);
    ss_string_free(ra);
    ss_string_free(rb);
    ss_trace_free(a);
    ss_trace_free(b);
  }

  SUBCASE("enumeration output is sorted") {
    char* listing = nullptr;
    int truncated = -1;
    REQUIRE(ss_enumerate(jazz, 6, 100, &listing, &truncated) == SS_OK);
    CHECK(truncated == 0);
    std::string text(listing);
    ss_string_free(listing);
    CHECK(!text.empty());
    std::string prev;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      CHECK(prev <= line);
      prev = line;
    }
  }

  SUBCASE("membership") {
    ss_trace* trace = nullptr;
    REQUIRE(ss_derive_scripted(jazz, "2,2;3,3;6,6;4,4;5,5;7,7",
                               SS_POLICY_LEFTMOST, 0, &trace) == SS_OK);
    char* mstring = nullptr;
    REQUIRE(ss_trace_final_mstring(trace, &mstring) == SS_OK);
    int member = 0;
    REQUIRE(ss_membership(jazz, mstring, 6, &member) == SS_OK);
    CHECK(member == 1);
    REQUIRE(ss_membership(jazz, "c_y | c_v", 6, &member) == SS_OK);
    CHECK(member == 0);
    ss_string_free(mstring);
    ss_trace_free(trace);
  }

  ss_system_free(jazz);
}

TEST_CASE("C API error reporting") {
  SUBCASE("syntax errors come back as diagnostics") {
    ss_system* sys = nullptr;
    char* diags = nullptr;
    const char* text = "system oops {";
    CHECK(ss_system_parse(text, std::strlen(text), 0, &sys, &diags) ==
          SS_ERR_PARSE);
    CHECK(sys == nullptr);
    REQUIRE(diags != nullptr);
    CHECK(std::string(diags).find("error") != std::string::npos);
    ss_string_free(diags);
  }
  SUBCASE("validation errors are distinguished from syntax errors") {
    const char* text =
        "system t { component a { start S nonterminals S ; "
        "tokens { x = rest [-, q, -, -] ; } rule 1 : S -> x ; } "
        "sync { (1, 2) } }";
    ss_system* sys = nullptr;
    char* diags = nullptr;
    CHECK(ss_system_parse(text, std::strlen(text), 0, &sys, &diags) ==
          SS_ERR_VALIDATION);
    CHECK(sys == nullptr);
    REQUIRE(diags != nullptr);
    ss_string_free(diags);
  }
  SUBCASE("null arguments are rejected") {
    CHECK(ss_system_parse(nullptr, 0, 0, nullptr, nullptr) ==
          SS_ERR_INVALID_ARG);
  }
}
