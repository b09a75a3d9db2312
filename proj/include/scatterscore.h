/* scatterscore — synchronized scattered-context grammar systems that
 * generate multi-track scores.
 *
 * C interface over the engine: parse a system from its textual form,
 * validate and classify it, run synchronized derivations (scripted or
 * seeded-random), enumerate terminal m-strings, and render results as a
 * canonical text score, a Standard MIDI File, or a derivation report.
 *
 * All handles are opaque; every function that can fail returns ss_status and
 * leaves a human-readable message in ss_last_error() (thread-local). Strings
 * and byte buffers returned through out-parameters are owned by the caller
 * and released with ss_string_free / ss_bytes_free.
 */
#ifndef SCATTERSCORE_H
#define SCATTERSCORE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ss_system ss_system;
typedef struct ss_trace ss_trace;
typedef struct ss_score ss_score;

typedef enum ss_status {
  SS_OK = 0,
  SS_ERR_INVALID_ARG = 1,
  SS_ERR_PARSE = 2,
  SS_ERR_VALIDATION = 3,
  SS_ERR_SCRIPT = 4,
  SS_ERR_STUCK = 5,
  SS_ERR_BUDGET = 6,
  SS_ERR_MUSIC = 7,
  SS_ERR_RENDER = 8,
  SS_ERR_UNKNOWN = 9
} ss_status;

typedef enum ss_trace_status {
  SS_TRACE_TERMINAL = 0,
  SS_TRACE_STUCK = 1,
  SS_TRACE_BUDGET_EXHAUSTED = 2
} ss_trace_status;

typedef enum ss_policy {
  SS_POLICY_LEFTMOST = 0,
  SS_POLICY_RANDOM = 1
} ss_policy;

typedef struct ss_rule_class {
  int context_free;
  int simple;
  int linear;
  int erasing;
} ss_rule_class;

typedef struct ss_system_class {
  int context_free_restricted;
  int linear_restricted;
  int non_erasing;
} ss_system_class;

const char* ss_version(void);

/* Message describing the most recent failure on this thread. */
const char* ss_last_error(void);

void ss_string_free(char* s);
void ss_bytes_free(uint8_t* bytes);

/* Parses and validates a system definition. On SS_OK *out owns the system.
 * `diagnostics`, when non-NULL, receives a newline-separated
 * "line:col: severity: message" listing (set on failure too, NULL when there
 * is nothing to report). allow_erasing permits empty rule right-hand parts. */
ss_status ss_system_parse(const char* text, size_t len, int allow_erasing,
                          ss_system** out, char** diagnostics);
void ss_system_free(ss_system* sys);

const char* ss_system_name(const ss_system* sys);
int ss_system_component_count(const ss_system* sys);

/* Components and rule indexes are 0-based; functions return NULL / -1 on a
 * bad index. */
const char* ss_component_name(const ss_system* sys, int component);
int ss_component_rule_count(const ss_system* sys, int component);
int ss_component_rule_label(const ss_system* sys, int component, int index);

/* Canonical text form; round-trips through ss_system_parse. */
ss_status ss_system_print(const ss_system* sys, char** out);

ss_status ss_rule_classify(const ss_system* sys, int component, int rule_label,
                           ss_rule_class* out);
ss_status ss_system_classify(const ss_system* sys, ss_system_class* out);

/* Scripted derivation; the script lists sync tuples by rule label, e.g.
 * "2,2;3,3;6,6". policy picks the rewritten occurrences (seed is used by
 * SS_POLICY_RANDOM). A tuple that is not in the sync set or not applicable
 * fails with SS_ERR_SCRIPT. A trace comes back even when the final m-form
 * still holds nonterminals — check ss_trace_get_status. */
ss_status ss_derive_scripted(const ss_system* sys, const char* script,
                             ss_policy policy, uint64_t seed, ss_trace** out);

/* Seeded uniform random walk over applicable tuples and embeddings;
 * deterministic for a fixed seed. */
ss_status ss_derive_random(const ss_system* sys, uint64_t seed, int max_steps,
                           ss_trace** out);
void ss_trace_free(ss_trace* trace);

ss_trace_status ss_trace_get_status(const ss_trace* trace);
int ss_trace_step_count(const ss_trace* trace);

/* Step-by-step derivation report (the .trace format). */
ss_status ss_trace_report(const ss_trace* trace, char** out);

/* Final m-form as "tok tok ... | tok tok ...". */
ss_status ss_trace_final_mstring(const ss_trace* trace, char** out);

/* Terminal m-strings reachable within max_steps, one per line, components
 * separated by " | ", sorted lexicographically. Sets *truncated when more
 * than max_results exist. */
ss_status ss_enumerate(const ss_system* sys, int max_steps, int max_results,
                       char** out, int* truncated);

/* Bounded membership test for an "a b | c d" m-string. */
ss_status ss_membership(const ss_system* sys, const char* mstring,
                        int max_steps, int* member);

/* Interprets the trace's terminal m-string as a score (one track per
 * component). Fails with SS_ERR_STUCK / SS_ERR_BUDGET when the trace did not
 * reach a terminal m-string. */
ss_status ss_score_from_trace(const ss_system* sys, const ss_trace* trace,
                              ss_score** out);
void ss_score_free(ss_score* score);

ss_status ss_score_render_text(const ss_score* score, char** out);

/* Standard MIDI File, format 1, division 480. */
ss_status ss_score_render_midi(const ss_score* score, uint8_t** out,
                               size_t* len);

#ifdef __cplusplus
}
#endif

#endif /* SCATTERSCORE_H */
