/*
 * monomtest — decide whether a polynomial ideal contains a monomial,
 * i.e. whether its zero set misses the algebraic torus, by triangular
 * decomposition and minimal-polynomial solvability tests. Exact
 * arithmetic over Q or F_p.
 *
 * C interface over the C++ core: opaque handles, status codes, no
 * exceptions across the boundary. All handles are freed with their
 * matching *_free function; strings returned through handles stay valid
 * until the owning handle is freed.
 */
#ifndef MONOMTEST_H
#define MONOMTEST_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mt_ideal mt_ideal;     /* parsed ideal file */
typedef struct mt_report mt_report;   /* result of one run */
typedef struct mt_strings mt_strings; /* immutable string list */

typedef enum mt_status {
    MT_OK = 0,
    MT_ERROR = 1,           /* unspecified failure */
    MT_PARSE_ERROR = 2,     /* malformed input text */
    MT_RESOURCE_LIMIT = 3,  /* timeout or system/memory cap hit */
    MT_CONTRACT_ERROR = 4,  /* operation precondition violated */
    MT_INVALID_ARGUMENT = 5,
} mt_status;

/* Rewrite/trace callback; receives one formatted line per event
 * ("TRACE op=... in=... out=..."), without a trailing newline. May be
 * invoked from worker threads when jobs > 1. */
typedef void (*mt_trace_fn)(void* user, const char* line);

typedef struct mt_check_options {
    int eager;              /* nonzero: prune/answer as soon as systems become triangular */
    int deterministic;      /* nonzero: single worker, LIFO worklist, byte-reproducible */
    int jobs;               /* worker threads; values < 2 mean one worker */
    double timeout_seconds; /* < 0: unlimited */
    uint64_t max_systems;   /* 0: unlimited; run aborts with status "oom" beyond this */
    int expand_g_checks;    /* debug: cross-check factored inequations by expansion */
    mt_trace_fn trace;      /* optional */
    void* trace_user;
} mt_check_options;

/* fill in the defaults: eager, non-deterministic, one job, no limits */
void mt_check_options_init(mt_check_options* opt);

/* Parse an ideal file (see README for the grammar). On failure returns
 * MT_PARSE_ERROR, copies a message into errbuf (if given) and sets
 * err_line/err_col (1-based) when non-NULL. */
mt_status mt_ideal_parse(const char* text, mt_ideal** out, char* errbuf, size_t errbuf_size,
                         int* err_line, int* err_col);
void mt_ideal_free(mt_ideal* ideal);

int mt_ideal_var_count(const mt_ideal* ideal);
const char* mt_ideal_var_name(const mt_ideal* ideal, int index); /* 1-based */
uint64_t mt_ideal_characteristic(const mt_ideal* ideal);
int mt_ideal_generator_count(const mt_ideal* ideal);
int mt_ideal_has_inequation(const mt_ideal* ideal);

/* ContainsMonomial. Always produces a report when the return value is
 * MT_OK or MT_RESOURCE_LIMIT; the report's status tells which. */
mt_status mt_check_contains_monomial(const mt_ideal* ideal, const mt_check_options* opt,
                                     mt_report** out);

/* Ground-truth answer via Buchberger/Rabinowitsch on the same input. */
mt_status mt_oracle_contains_monomial(const mt_ideal* ideal, double timeout_seconds,
                                      mt_report** out);

/* -1 when the run did not complete (status != "ok") */
int mt_report_answer(const mt_report* report);
/* "ok" | "timeout" | "oom" */
const char* mt_report_status(const mt_report* report);
double mt_report_seconds(const mt_report* report);
/* counter names: "additions", "multiplications", "pseudo-divisions",
 * "systems-created", "minpoly-calls", "systems-examined" */
uint64_t mt_report_counter(const mt_report* report, const char* name);
void mt_report_free(mt_report* report);

/* Gröbner basis of the ideal, order "lex" or "degrevlex"; basis elements
 * are returned as expression strings in the file's variables. */
mt_status mt_groebner(const mt_ideal* ideal, const char* order, double timeout_seconds,
                      mt_strings** out);
size_t mt_strings_count(const mt_strings* list);
const char* mt_strings_get(const mt_strings* list, size_t i);
void mt_strings_free(mt_strings* list);

const char* mt_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MONOMTEST_H */
