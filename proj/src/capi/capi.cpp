#include "scatterscore.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "core/classify.hpp"
#include "core/errors.hpp"
#include "core/validate.hpp"
#include "dsl/parser.hpp"
#include "dsl/printer.hpp"
#include "engine/derive.hpp"
#include "engine/script.hpp"
#include "engine/system.hpp"
#include "music/music.hpp"
#include "render/render.hpp"

using namespace scatterscore;

namespace {

thread_local std::string g_last_error;

void set_error(std::string message) { g_last_error = std::move(message); }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

uint8_t* dup_bytes(const std::vector<std::uint8_t>& bytes) {
  auto* out = static_cast<uint8_t*>(std::malloc(bytes.empty() ? 1 : bytes.size()));
  if (!out) return nullptr;
  std::memcpy(out, bytes.data(), bytes.size());
  return out;
}

struct SystemCtx {
  GrammarSystem grammar;
  ValidationPolicy policy;
  engine::CompiledSystem compiled;

  SystemCtx(GrammarSystem g, ValidationPolicy p)
      : grammar(std::move(g)), policy(p), compiled(grammar, policy) {}
};

template <typename Fn>
ss_status wrap(Fn&& fn) {
  try {
    return fn();
  } catch (const ScriptStepFailed& e) {
    set_error(e.what());
    return SS_ERR_SCRIPT;
  } catch (const ScriptSyntaxError& e) {
    set_error(e.what());
    return SS_ERR_SCRIPT;
  } catch (const TupleInapplicable& e) {
    set_error(e.what());
    return SS_ERR_SCRIPT;
  } catch (const PolicyMismatch& e) {
    set_error(e.what());
    return SS_ERR_SCRIPT;
  } catch (const InvalidSystem& e) {
    set_error(e.what());
    return SS_ERR_VALIDATION;
  } catch (const TooManyTracks& e) {
    set_error(e.what());
    return SS_ERR_RENDER;
  } catch (const UnknownDuration& e) {
    set_error(e.what());
    return SS_ERR_MUSIC;
  } catch (const UnknownPitch& e) {
    set_error(e.what());
    return SS_ERR_MUSIC;
  } catch (const PitchOutOfRange& e) {
    set_error(e.what());
    return SS_ERR_MUSIC;
  } catch (const UnresolvedAlias& e) {
    set_error(e.what());
    return SS_ERR_MUSIC;
  } catch (const UnresolvedToken& e) {
    set_error(e.what());
    return SS_ERR_MUSIC;
  } catch (const std::exception& e) {
    set_error(e.what());
    return SS_ERR_UNKNOWN;
  }
}

}  // namespace

struct ss_system {
  std::shared_ptr<const SystemCtx> ctx;
};

struct ss_trace {
  std::shared_ptr<const SystemCtx> ctx;
  engine::DerivationTrace trace;
};

struct ss_score {
  music::Score score;
};

const char* ss_version(void) { return "0.1.0"; }

const char* ss_last_error(void) { return g_last_error.c_str(); }

void ss_string_free(char* s) { std::free(s); }

void ss_bytes_free(uint8_t* bytes) { std::free(bytes); }

ss_status ss_system_parse(const char* text, size_t len, int allow_erasing,
                          ss_system** out, char** diagnostics) {
  if (diagnostics) *diagnostics = nullptr;
  if (!text || !out) {
    set_error("text and out must not be NULL");
    return SS_ERR_INVALID_ARG;
  }
  *out = nullptr;
  return wrap([&]() -> ss_status {
    const std::string_view source(text, len);
    dsl::ParseResult parsed = dsl::parse_system(source);

    std::ostringstream report;
    for (const auto& d : parsed.diagnostics) {
      report << d.span.line << ':' << d.span.column << ": "
             << (d.severity == dsl::ParseDiagnostic::Severity::error
                     ? "error"
                     : "warning")
             << ": " << d.message << '\n';
    }
    if (!parsed.ok()) {
      if (diagnostics) *diagnostics = dup_string(report.str());
      set_error("system definition has syntax errors");
      return SS_ERR_PARSE;
    }

    const ValidationPolicy policy{allow_erasing != 0};
    const auto semantic = validate_system(*parsed.system, policy);
    for (const auto& d : semantic) {
      report << d.span.line << ':' << d.span.column << ": error: " << d.message
             << '\n';
    }
    if (diagnostics && report.tellp() > 0) {
      *diagnostics = dup_string(report.str());
    }
    if (!semantic.empty()) {
      set_error("system failed validation");
      return SS_ERR_VALIDATION;
    }

    auto ctx = std::make_shared<const SystemCtx>(std::move(*parsed.system), policy);
    *out = new ss_system{std::move(ctx)};
    return SS_OK;
  });
}

void ss_system_free(ss_system* sys) { delete sys; }

const char* ss_system_name(const ss_system* sys) {
  return sys ? sys->ctx->grammar.name.c_str() : nullptr;
}

int ss_system_component_count(const ss_system* sys) {
  return sys ? static_cast<int>(sys->ctx->grammar.components.size()) : -1;
}

const char* ss_component_name(const ss_system* sys, int component) {
  if (!sys || component < 0 ||
      component >= static_cast<int>(sys->ctx->grammar.components.size())) {
    return nullptr;
  }
  return sys->ctx->grammar.components[static_cast<std::size_t>(component)]
      .name.c_str();
}

int ss_component_rule_count(const ss_system* sys, int component) {
  if (!sys || component < 0 ||
      component >= static_cast<int>(sys->ctx->grammar.components.size())) {
    return -1;
  }
  return static_cast<int>(
      sys->ctx->grammar.components[static_cast<std::size_t>(component)]
          .rules.size());
}

int ss_component_rule_label(const ss_system* sys, int component, int index) {
  if (!sys || component < 0 ||
      component >= static_cast<int>(sys->ctx->grammar.components.size())) {
    return -1;
  }
  const auto& rules =
      sys->ctx->grammar.components[static_cast<std::size_t>(component)].rules;
  if (index < 0 || index >= static_cast<int>(rules.size())) return -1;
  return rules[static_cast<std::size_t>(index)].label;
}

ss_status ss_system_print(const ss_system* sys, char** out) {
  if (!sys || !out) {
    set_error("sys and out must not be NULL");
    return SS_ERR_INVALID_ARG;
  }
  return wrap([&]() -> ss_status {
    *out = dup_string(dsl::print_system(sys->ctx->grammar));
    return SS_OK;
  });
}

ss_status ss_rule_classify(const ss_system* sys, int component, int rule_label,
                           ss_rule_class* out) {
  if (!sys || !out || component < 0 ||
      component >= static_cast<int>(sys->ctx->grammar.components.size())) {
    set_error("bad system handle or component index");
    return SS_ERR_INVALID_ARG;
  }
  const auto& comp =
      sys->ctx->grammar.components[static_cast<std::size_t>(component)];
  const ScatteredRule* rule = comp.find_rule(rule_label);
  if (!rule) {
    set_error("component has no rule labeled " + std::to_string(rule_label));
    return SS_ERR_INVALID_ARG;
  }
  const RuleClass k = classify_rule(*rule, comp);
  out->context_free = k.context_free ? 1 : 0;
  out->simple = k.simple ? 1 : 0;
  out->linear = k.linear ? 1 : 0;
  out->erasing = k.erasing ? 1 : 0;
  return SS_OK;
}

ss_status ss_system_classify(const ss_system* sys, ss_system_class* out) {
  if (!sys || !out) {
    set_error("sys and out must not be NULL");
    return SS_ERR_INVALID_ARG;
  }
  const SystemClass k = classify_system(sys->ctx->grammar);
  out->context_free_restricted = k.context_free_restricted ? 1 : 0;
  out->linear_restricted = k.linear_restricted ? 1 : 0;
  out->non_erasing = k.non_erasing ? 1 : 0;
  return SS_OK;
}

ss_status ss_derive_scripted(const ss_system* sys, const char* script,
                             ss_policy policy, uint64_t seed, ss_trace** out) {
  if (!sys || !script || !out) {
    set_error("sys, script and out must not be NULL");
    return SS_ERR_INVALID_ARG;
  }
  *out = nullptr;
  return wrap([&]() -> ss_status {
    const auto tuples = engine::parse_script(script);
    const auto occurrence = policy == SS_POLICY_RANDOM
                                ? engine::OccurrencePolicy::random(seed)
                                : engine::OccurrencePolicy::leftmost();
    auto trace = engine::derive_scripted(sys->ctx->compiled, tuples, occurrence);
    *out = new ss_trace{sys->ctx, std::move(trace)};
    return SS_OK;
  });
}

ss_status ss_derive_random(const ss_system* sys, uint64_t seed, int max_steps,
                           ss_trace** out) {
  if (!sys || !out || max_steps < 0) {
    set_error("bad arguments to ss_derive_random");
    return SS_ERR_INVALID_ARG;
  }
  *out = nullptr;
  return wrap([&]() -> ss_status {
    auto trace = engine::derive_random(sys->ctx->compiled, seed, max_steps);
    *out = new ss_trace{sys->ctx, std::move(trace)};
    return SS_OK;
  });
}

void ss_trace_free(ss_trace* trace) { delete trace; }

ss_trace_status ss_trace_get_status(const ss_trace* trace) {
  switch (trace->trace.status) {
    case engine::TraceStatus::terminal: return SS_TRACE_TERMINAL;
    case engine::TraceStatus::stuck: return SS_TRACE_STUCK;
    case engine::TraceStatus::budget_exhausted: return SS_TRACE_BUDGET_EXHAUSTED;
  }
  return SS_TRACE_STUCK;
}

int ss_trace_step_count(const ss_trace* trace) {
  return trace ? static_cast<int>(trace->trace.steps.size()) : -1;
}

ss_status ss_trace_report(const ss_trace* trace, char** out) {
  if (!trace || !out) {
    set_error("trace and out must not be NULL");
    return SS_ERR_INVALID_ARG;
  }
  return wrap([&]() -> ss_status {
    *out = dup_string(render::export_trace(trace->ctx->compiled, trace->trace));
    return SS_OK;
  });
}

ss_status ss_trace_final_mstring(const ss_trace* trace, char** out) {
  if (!trace || !out) {
    set_error("trace and out must not be NULL");
    return SS_ERR_INVALID_ARG;
  }
  return wrap([&]() -> ss_status {
    *out = dup_string(
        trace->ctx->compiled.mstring_text(trace->trace.final_mform()));
    return SS_OK;
  });
}

ss_status ss_enumerate(const ss_system* sys, int max_steps, int max_results,
                       char** out, int* truncated) {
  if (!sys || !out || max_steps < 0 || max_results < 0) {
    set_error("bad arguments to ss_enumerate");
    return SS_ERR_INVALID_ARG;
  }
  return wrap([&]() -> ss_status {
    const auto result = engine::enumerate_terminal(
        sys->ctx->compiled, max_steps, static_cast<std::size_t>(max_results));
    std::vector<std::string> lines;
    lines.reserve(result.terminal.size());
    for (const auto& mf : result.terminal) {
      lines.push_back(sys->ctx->compiled.mstring_text(mf));
    }
    std::sort(lines.begin(), lines.end());
    std::string joined;
    for (const auto& line : lines) {
      joined += line;
      joined += '\n';
    }
    *out = dup_string(joined);
    if (truncated) *truncated = result.truncated ? 1 : 0;
    return SS_OK;
  });
}

ss_status ss_membership(const ss_system* sys, const char* mstring,
                        int max_steps, int* member) {
  if (!sys || !mstring || !member || max_steps < 0) {
    set_error("bad arguments to ss_membership");
    return SS_ERR_INVALID_ARG;
  }
  return wrap([&]() -> ss_status {
    // Split "a b | c d" into per-component token lists.
    std::vector<std::vector<std::string>> candidate(1);
    std::istringstream in(mstring);
    std::string word;
    while (in >> word) {
      if (word == "|") {
        candidate.emplace_back();
      } else {
        candidate.back().push_back(word);
      }
    }
    *member = engine::membership(sys->ctx->compiled, candidate, max_steps) ? 1 : 0;
    return SS_OK;
  });
}

ss_status ss_score_from_trace(const ss_system* sys, const ss_trace* trace,
                              ss_score** out) {
  if (!sys || !trace || !out) {
    set_error("sys, trace and out must not be NULL");
    return SS_ERR_INVALID_ARG;
  }
  *out = nullptr;
  if (trace->trace.status != engine::TraceStatus::terminal) {
    set_error("derivation did not reach a terminal m-string");
    return trace->trace.status == engine::TraceStatus::budget_exhausted
               ? SS_ERR_BUDGET
               : SS_ERR_STUCK;
  }
  return wrap([&]() -> ss_status {
    const auto names = sys->ctx->compiled.names(trace->trace.final_mform());
    auto score = music::score_from_mstring(sys->ctx->grammar, names);
    *out = new ss_score{std::move(score)};
    return SS_OK;
  });
}

void ss_score_free(ss_score* score) { delete score; }

ss_status ss_score_render_text(const ss_score* score, char** out) {
  if (!score || !out) {
    set_error("score and out must not be NULL");
    return SS_ERR_INVALID_ARG;
  }
  return wrap([&]() -> ss_status {
    *out = dup_string(render::render_text(score->score));
    return SS_OK;
  });
}

ss_status ss_score_render_midi(const ss_score* score, uint8_t** out,
                               size_t* len) {
  if (!score || !out || !len) {
    set_error("score, out and len must not be NULL");
    return SS_ERR_INVALID_ARG;
  }
  return wrap([&]() -> ss_status {
    const auto bytes = render::render_midi(score->score);
    *out = dup_bytes(bytes);
    *len = bytes.size();
    return SS_OK;
  });
}
