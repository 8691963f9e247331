#ifndef SWK_H
#define SWK_H

/* C interface to the subtractive K-theory workbench.  A session is built
 * from a DSL script (possibly empty) and runs named report commands.  All
 * returned strings are heap-allocated and must be released with
 * swk_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the CLI uses them verbatim as exit codes. */
#define SWK_STATUS_OK 0
#define SWK_STATUS_VIOLATIONS 1
#define SWK_STATUS_USAGE 2
#define SWK_STATUS_BUDGET 3

typedef struct swk_session swk_session;

/* Create a session from DSL text.  An empty script yields the default
 * finite-set session.  On failure returns NULL and, when err is non-NULL,
 * stores the error message in *err. */
swk_session* swk_session_create(const char* dsl_text, char** err);
void swk_session_destroy(swk_session* s);

/* Tuning knobs; out-of-range values are rejected with SWK_STATUS_USAGE. */
int swk_session_set_bound(swk_session* s, int bound);
int swk_session_set_degree(swk_session* s, int degree);
void swk_session_set_seed(swk_session* s, unsigned seed);
void swk_session_set_json(swk_session* s, int json);
void swk_session_set_golden_appendix(swk_session* s, int on);
/* budget <= 0 restores the default (SWK_POINT_BUDGET or built-in). */
void swk_session_set_budget(swk_session* s, long long budget);

/* Run one command: axioms | flags | k0 | snf | measure | additivity |
 * splitting.  When out is non-NULL it receives the report (text or JSON
 * per the json knob).  Returns a status code. */
int swk_session_run(swk_session* s, const char* command, char** out);

/* Human-readable instance description, e.g. "finset(3)". */
char* swk_session_instance_name(const swk_session* s);

void swk_string_free(char* p);

#ifdef __cplusplus
}
#endif

#endif /* SWK_H */
