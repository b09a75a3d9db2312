// Command-line front end; everything goes through the public C API.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "scatterscore.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;     // parse/validation/script errors
constexpr int kExitIo = 2;        // unreadable input, unwritable output
constexpr int kExitStuck = 3;     // derivation stuck on nonterminals
constexpr int kExitBudget = 4;    // step budget exhausted

struct Options {
  std::string input;
  std::string script;
  std::uint64_t seed = 0;
  int max_steps = 256;
  int max_results = 10000;
  std::string policy = "leftmost";
  bool allow_erasing = false;
  std::string format = "midi";
  std::string out;
};

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool write_file(const std::string& path, const void* data, std::size_t len) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
  return static_cast<bool>(out);
}

void print_diagnostics(const std::string& path, char* diagnostics) {
  if (!diagnostics) return;
  std::istringstream lines(diagnostics);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) std::cerr << path << ':' << line << '\n';
  }
  ss_string_free(diagnostics);
}

// Loads and validates; on failure prints diagnostics and returns an exit code.
int load_system(const Options& opt, ss_system** sys) {
  const auto text = read_file(opt.input);
  if (!text) {
    std::cerr << "scatterscore: cannot read " << opt.input << '\n';
    return kExitIo;
  }
  char* diagnostics = nullptr;
  const ss_status status =
      ss_system_parse(text->data(), text->size(), opt.allow_erasing ? 1 : 0,
                      sys, &diagnostics);
  print_diagnostics(opt.input, diagnostics);
  if (status == SS_OK) return kExitOk;
  if (status == SS_ERR_PARSE || status == SS_ERR_VALIDATION) return kExitError;
  std::cerr << "scatterscore: " << ss_last_error() << '\n';
  return kExitError;
}

int exit_for_trace(const ss_trace* trace) {
  switch (ss_trace_get_status(trace)) {
    case SS_TRACE_TERMINAL: return kExitOk;
    case SS_TRACE_STUCK: return kExitStuck;
    case SS_TRACE_BUDGET_EXHAUSTED: return kExitBudget;
  }
  return kExitError;
}

int derive_trace(const Options& opt, const ss_system* sys, ss_trace** trace) {
  ss_status status;
  if (!opt.script.empty()) {
    const ss_policy policy =
        opt.policy == "random" ? SS_POLICY_RANDOM : SS_POLICY_LEFTMOST;
    status = ss_derive_scripted(sys, opt.script.c_str(), policy, opt.seed, trace);
  } else {
    status = ss_derive_random(sys, opt.seed, opt.max_steps, trace);
  }
  if (status != SS_OK) {
    std::cerr << "scatterscore: " << ss_last_error() << '\n';
    return kExitError;
  }
  return kExitOk;
}

int write_trace_file(const Options& opt, const ss_trace* trace) {
  if (opt.out.empty()) return kExitOk;
  char* report = nullptr;
  if (ss_trace_report(trace, &report) != SS_OK) {
    std::cerr << "scatterscore: " << ss_last_error() << '\n';
    return kExitError;
  }
  const std::string path = opt.out + ".trace";
  const bool ok = write_file(path, report, std::string(report).size());
  ss_string_free(report);
  if (!ok) {
    std::cerr << "scatterscore: cannot write " << path << '\n';
    return kExitIo;
  }
  return kExitOk;
}

int cmd_validate(const Options& opt) {
  ss_system* sys = nullptr;
  const int code = load_system(opt, &sys);
  ss_system_free(sys);
  return code;
}

int cmd_classify(const Options& opt) {
  ss_system* sys = nullptr;
  if (const int code = load_system(opt, &sys)) return code;

  const int components = ss_system_component_count(sys);
  const auto yn = [](int v) { return v ? 'y' : 'n'; };
  for (int c = 0; c < components; ++c) {
    const int rules = ss_component_rule_count(sys, c);
    for (int r = 0; r < rules; ++r) {
      const int label = ss_component_rule_label(sys, c, r);
      ss_rule_class k;
      if (ss_rule_classify(sys, c, label, &k) != SS_OK) continue;
      std::cout << 'G' << (c + 1) << " rule " << label << ": cf=" << yn(k.context_free)
                << " simple=" << yn(k.simple) << " linear=" << yn(k.linear)
                << " erasing=" << yn(k.erasing) << '\n';
    }
  }
  ss_system_class k;
  ss_system_classify(sys, &k);
  const auto yesno = [](int v) { return v ? "yes" : "no"; };
  std::cout << "system: context-free-restricted: " << yesno(k.context_free_restricted) << '\n';
  std::cout << "system: linear-restricted: " << yesno(k.linear_restricted) << '\n';
  std::cout << "system: non-erasing: " << yesno(k.non_erasing) << '\n';
  ss_system_free(sys);
  return kExitOk;
}

int cmd_derive(const Options& opt) {
  ss_system* sys = nullptr;
  if (const int code = load_system(opt, &sys)) return code;

  ss_trace* trace = nullptr;
  if (const int code = derive_trace(opt, sys, &trace)) {
    ss_system_free(sys);
    return code;
  }

  char* mstring = nullptr;
  if (ss_trace_final_mstring(trace, &mstring) == SS_OK) {
    std::cout << mstring << '\n';
    ss_string_free(mstring);
  }

  int code = write_trace_file(opt, trace);
  if (code == kExitOk) code = exit_for_trace(trace);
  ss_trace_free(trace);
  ss_system_free(sys);
  return code;
}

int cmd_enumerate(const Options& opt) {
  ss_system* sys = nullptr;
  if (const int code = load_system(opt, &sys)) return code;

  char* listing = nullptr;
  int truncated = 0;
  const ss_status status =
      ss_enumerate(sys, opt.max_steps, opt.max_results, &listing, &truncated);
  if (status != SS_OK) {
    std::cerr << "scatterscore: " << ss_last_error() << '\n';
    ss_system_free(sys);
    return kExitError;
  }
  std::cout << listing;
  ss_string_free(listing);
  if (truncated) {
    std::cerr << "scatterscore: enumeration truncated (hit the "
              << opt.max_results
              << "-result cap or the search guard; the listing may be "
                 "incomplete)\n";
  }
  ss_system_free(sys);
  return kExitOk;
}

int cmd_render(const Options& opt) {
  ss_system* sys = nullptr;
  if (const int code = load_system(opt, &sys)) return code;

  ss_trace* trace = nullptr;
  if (const int code = derive_trace(opt, sys, &trace)) {
    ss_system_free(sys);
    return code;
  }
  if (ss_trace_get_status(trace) != SS_TRACE_TERMINAL) {
    std::cerr << "scatterscore: derivation did not reach a terminal m-string; "
                 "nothing rendered\n";
    const int code = exit_for_trace(trace);
    ss_trace_free(trace);
    ss_system_free(sys);
    return code;
  }

  ss_score* score = nullptr;
  if (ss_score_from_trace(sys, trace, &score) != SS_OK) {
    std::cerr << "scatterscore: " << ss_last_error() << '\n';
    ss_trace_free(trace);
    ss_system_free(sys);
    return kExitError;
  }

  int code = kExitOk;
  if (opt.format == "text" || opt.format == "both") {
    char* text = nullptr;
    if (ss_score_render_text(score, &text) != SS_OK) {
      std::cerr << "scatterscore: " << ss_last_error() << '\n';
      code = kExitError;
    } else {
      const std::string path = opt.out + ".txt";
      if (!write_file(path, text, std::string(text).size())) {
        std::cerr << "scatterscore: cannot write " << path << '\n';
        code = kExitIo;
      }
      ss_string_free(text);
    }
  }
  if (code == kExitOk && (opt.format == "midi" || opt.format == "both")) {
    uint8_t* bytes = nullptr;
    size_t len = 0;
    if (ss_score_render_midi(score, &bytes, &len) != SS_OK) {
      std::cerr << "scatterscore: " << ss_last_error() << '\n';
      code = kExitError;
    } else {
      const std::string path = opt.out + ".mid";
      if (!write_file(path, bytes, len)) {
        std::cerr << "scatterscore: cannot write " << path << '\n';
        code = kExitIo;
      }
      ss_bytes_free(bytes);
    }
  }

  ss_score_free(score);
  ss_trace_free(trace);
  ss_system_free(sys);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rule-synchronized scattered-context grammar systems: derive "
               "synchronized m-strings and render them as scores"};
  app.require_subcommand(1);

  Options opt;

  const auto add_input = [&opt](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "grammar system file (.mgs)")
        ->required();
    cmd->add_flag("--allow-erasing", opt.allow_erasing,
                  "permit empty rule right-hand parts");
  };
  const auto add_derivation = [&opt](CLI::App* cmd) {
    cmd->add_option("--script", opt.script,
                    "sync tuples to apply, e.g. \"2,2;3,3;6,6\"");
    cmd->add_option("--seed", opt.seed, "random seed (default 0)");
    cmd->add_option("--max-steps", opt.max_steps,
                    "step budget for random derivation (default 256)");
    cmd->add_option("--policy", opt.policy, "occurrence choice within a form")
        ->check(CLI::IsMember({"leftmost", "random"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a system");
  add_input(validate);

  CLI::App* classify = app.add_subcommand(
      "classify", "report per-rule and system-wide rule classes");
  add_input(classify);

  CLI::App* derive = app.add_subcommand(
      "derive", "run a synchronized derivation and print the final m-string");
  add_input(derive);
  add_derivation(derive);
  derive->add_option("--out", opt.out,
                     "also write a step report to <out>.trace");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list terminal m-strings reachable within the step budget");
  add_input(enumerate);
  enumerate->add_option("--max-steps", opt.max_steps, "step budget (default 256)");
  enumerate->add_option("--max-results", opt.max_results,
                        "result cap (default 10000)");

  CLI::App* render = app.add_subcommand(
      "render", "derive a terminal m-string and write it as a score");
  add_input(render);
  add_derivation(render);
  render->add_option("--format", opt.format, "text|midi|both (default midi)")
      ->check(CLI::IsMember({"text", "midi", "both"}));
  render->add_option("--out", opt.out, "output base path (extension appended)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) return cmd_validate(opt);
  if (classify->parsed()) return cmd_classify(opt);
  if (derive->parsed()) return cmd_derive(opt);
  if (enumerate->parsed()) return cmd_enumerate(opt);
  if (render->parsed()) return cmd_render(opt);
  return kExitError;
}
