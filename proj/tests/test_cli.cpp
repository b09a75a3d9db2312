#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "support/corpus.hpp"

namespace fs = std::filesystem;
using testsupport::corpus_path;
using testsupport::load_file;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string read_or_empty(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() / "scatterscore_cli_io";
  fs::create_directories(dir);
  const fs::path out_path = dir / ("out" + std::to_string(counter));
  const fs::path err_path = dir / ("err" + std::to_string(counter));
  ++counter;

  const std::string command = std::string("\"") + SCATTERSCORE_CLI_PATH +
                              "\" " + args + " >\"" + out_path.string() +
                              "\" 2>\"" + err_path.string() + "\"";
  const int raw = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.out = read_or_empty(out_path);
  result.err = read_or_empty(err_path);
  return result;
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "scatterscore_cli_scratch";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli validate") {
  SUBCASE("all corpus files validate with exit 0") {
    for (const char* name :
         {"allegro.mgs", "jazz.mgs", "trio.mgs", "sonata_sketch.mgs"}) {
      const auto r = run_cli("validate \"" + corpus_path(name) + "\"");
      CHECK(r.exit_code == 0);
      CHECK(r.out.empty());
    }
  }
  SUBCASE("alphabet overlap exits 1 with a located diagnostic") {
    const auto path = scratch_dir() / "overlap.mgs";
    std::ofstream(path) << "system t { component a { start S\n"
                           "nonterminals S ;\n"
                           "tokens { S = rest [-, q, -, -] ; }\n"
                           "rule 1 : S -> S ; } sync { (1) } }\n";
    const auto r = run_cli("validate \"" + path.string() + "\"");
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find(path.string() + ":") != std::string::npos);
    CHECK(r.err.find("error") != std::string::npos);
  }
  SUBCASE("missing files exit 2") {
    const auto r = run_cli("validate /no/such/file.mgs");
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("cli classify") {
  const auto r = run_cli("classify \"" + corpus_path("allegro.mgs") + "\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("G1 rule 1: cf=y") != std::string::npos);
  CHECK(r.out.find("G1 rule 2: cf=n") != std::string::npos);
  CHECK(r.out.find("system: context-free-restricted: no") != std::string::npos);

  const auto sketch =
      run_cli("classify \"" + corpus_path("sonata_sketch.mgs") + "\"");
  CHECK(sketch.out.find("system: non-erasing: yes") != std::string::npos);
}

TEST_CASE("cli derive") {
  const std::string jazz = "\"" + corpus_path("jazz.mgs") + "\"";

  SUBCASE("a full scripted chorus prints the terminal m-string") {
    const auto r = run_cli("derive " + jazz + " --script \"2,2;3,3;6,6;4,4;5,5;7,7\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(" | ") != std::string::npos);
    CHECK(r.out.find("c_y") != std::string::npos);
  }
  SUBCASE("an inapplicable script step exits 1 and names the step") {
    const auto r = run_cli("derive " + jazz + " --script \"3,3\"");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("step 0") != std::string::npos);
  }
  SUBCASE("a script that stops early exits 3") {
    const auto r = run_cli("derive " + jazz + " --script \"2,2\"");
    CHECK(r.exit_code == 3);
  }
  SUBCASE("an exhausted budget exits 4") {
    const auto r = run_cli("derive " + jazz + " --seed 1 --max-steps 2");
    CHECK(r.exit_code == 4);
  }
  SUBCASE("seeded random derivation of the Allegro system terminates") {
    const auto r = run_cli("derive \"" + corpus_path("allegro.mgs") +
                           "\" --seed 7 --max-steps 64");
    CHECK(r.exit_code == 0);
  }
  SUBCASE("single-component systems print a plain token string") {
    const auto r = run_cli("derive \"" + corpus_path("sonata_sketch.mgs") +
                           "\" --script \"1;2;3;4;6;7;8;9\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find('|') == std::string::npos);
    CHECK(r.out.find("d_e2") != std::string::npos);
  }
  SUBCASE("--out writes the trace report") {
    const auto base = (scratch_dir() / "chorus").string();
    const auto r = run_cli("derive " + jazz +
                           " --script \"2,2;3,3;6,6;4,4;5,5;7,7\" --out \"" +
                           base + "\"");
    CHECK(r.exit_code == 0);
    const auto report = read_or_empty(base + ".trace");
    CHECK(report.find("status: terminal") != std::string::npos);
  }
}

TEST_CASE("cli enumerate") {
  const auto r = run_cli("enumerate \"" + corpus_path("allegro.mgs") +
                         "\" --max-steps 4");
  CHECK(r.exit_code == 0);
  // 2 + 1 + 0 middle measures: 1 + 3 + 9 = 13 terminal strings.
  int lines = 0;
  std::string prev;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    ++lines;
    CHECK(prev <= line);
    prev = line;
  }
  CHECK(lines == 13);

  SUBCASE("truncation is reported on stderr") {
    const auto t = run_cli("enumerate \"" + corpus_path("allegro.mgs") +
                           "\" --max-steps 4 --max-results 1");
    CHECK(t.exit_code == 0);
    int out_lines = 0;
    std::istringstream tin(t.out);
    while (std::getline(tin, line)) ++out_lines;
    CHECK(out_lines == 1);
    CHECK(t.err.find("truncated") != std::string::npos);
  }
}

TEST_CASE("cli render") {
  const std::string jazz = "\"" + corpus_path("jazz.mgs") + "\"";
  const auto base = (scratch_dir() / "take").string();

  SUBCASE("scripted rendering writes both formats") {
    const auto r = run_cli("render " + jazz +
                           " --script \"2,2;3,3;6,6;4,4;5,5;7,7\" "
                           "--format both --out \"" + base + "\"");
    CHECK(r.exit_code == 0);
    const auto midi = read_or_empty(base + ".mid");
    const auto text = read_or_empty(base + ".txt");
    CHECK(midi.rfind("MThd", 0) == 0);
    CHECK(text.rfind("score ppq=480", 0) == 0);
  }
  SUBCASE("a stuck derivation renders nothing and exits 3") {
    const auto missing = (scratch_dir() / "nothing").string();
    const auto r = run_cli("render " + jazz + " --script \"2,2\" --out \"" +
                           missing + "\"");
    CHECK(r.exit_code == 3);
    CHECK(!fs::exists(missing + ".mid"));
    CHECK(!fs::exists(missing + ".txt"));
  }
}

TEST_CASE("cli runs are deterministic for a fixed seed") {
  const auto base_a = (scratch_dir() / "det_a").string();
  const auto base_b = (scratch_dir() / "det_b").string();
  const std::string args = "derive \"" + corpus_path("allegro.mgs") +
                           "\" --seed 99 --max-steps 64 --out \"";
  const auto a = run_cli(args + base_a + "\"");
  const auto b = run_cli(args + base_b + "\"");
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.out == b.out);
  CHECK(read_or_empty(base_a + ".trace") == read_or_empty(base_b + ".trace"));
  CHECK(!read_or_empty(base_a + ".trace").empty());
}
