/*
 * dmwe - weight enumeration for decreasing monomial codes (polar, Reed-Muller
 * and relatives): exact closed-form counts of codewords at the minimum weight
 * and at 1.5x the minimum weight, brute-force verification oracles, orbit
 * listings, and truncated union bounds.
 *
 * C interface of the shared library. Handles are opaque; every function
 * returns a dmwe_status, with DMWE_OK meaning success. On failure,
 * dmwe_last_error() returns a thread-local description of what went wrong.
 * Strings produced by the library are heap-allocated and must be released
 * with dmwe_string_free().
 */
#ifndef DMWE_H
#define DMWE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dmwe_status {
    DMWE_OK = 0,
    DMWE_ERR_ARGUMENT = 1,        /* malformed input or bad parameter */
    DMWE_ERR_INDEX_RANGE = 2,     /* row index out of range or duplicated */
    DMWE_ERR_NOT_DECREASING = 3,  /* generating set not downward closed (strict mode) */
    DMWE_ERR_NON_DIVISOR = 4,
    DMWE_ERR_BAD_PAIR = 5,
    DMWE_ERR_ROW_NOT_MAX_DEGREE = 6,
    DMWE_ERR_NOT_COPRIME = 7,
    DMWE_ERR_NOT_DEGREE_TWO = 8,
    DMWE_ERR_TOO_LARGE = 9,       /* exhaustive computation exceeds configured caps */
    DMWE_ERR_OVERFLOW = 10,       /* exact count does not fit in 128 bits */
    DMWE_ERR_UNSUPPORTED = 11,    /* e.g. 1.5*wmin count for a code with r = m */
    DMWE_ERR_MISMATCH = 12,       /* verification found a disagreement */
    DMWE_ERR_IO = 13,
} dmwe_status;

typedef struct dmwe_code dmwe_code;     /* a decreasing monomial code */
typedef struct dmwe_report dmwe_report; /* weight counts plus per-pair records */

const char* dmwe_version(void);

/* Thread-local message for the most recent failure in this thread. */
const char* dmwe_last_error(void);

void dmwe_string_free(char* s);

/* ---- code construction ------------------------------------------------ */

/* Builds a code over m variables from generator row indices. With
 * apply_closure = 0 a non-decreasing set is rejected; with 1 the downward
 * closure is applied and the added rows are recorded. */
dmwe_status dmwe_code_from_rows(const uint32_t* rows, size_t row_count, uint32_t m,
                                int apply_closure, dmwe_code** out);

/* Same, from file content: whitespace-separated decimal indices with
 * '#' line comments. */
dmwe_status dmwe_code_from_rows_text(const char* text, uint32_t m, int apply_closure,
                                     dmwe_code** out);

dmwe_status dmwe_code_reed_muller(uint32_t r, uint32_t m, dmwe_code** out);

void dmwe_code_free(dmwe_code* code);

/* ---- code queries ------------------------------------------------------ */

uint32_t dmwe_code_m(const dmwe_code* code);
uint32_t dmwe_code_max_degree(const dmwe_code* code);
uint64_t dmwe_code_length(const dmwe_code* code);
uint64_t dmwe_code_dimension(const dmwe_code* code);
uint64_t dmwe_code_min_weight(const dmwe_code* code);

/* Copies the sorted row indices into buf (up to cap entries) and returns the
 * total number available. Call with cap = 0 to size a buffer. */
size_t dmwe_code_rows(const dmwe_code* code, uint32_t* buf, size_t cap);
size_t dmwe_code_closure_added_rows(const dmwe_code* code, uint32_t* buf, size_t cap);

/* ---- weight enumeration ------------------------------------------------ */

dmwe_status dmwe_code_weight_report(const dmwe_code* code, dmwe_report** out);
void dmwe_report_free(dmwe_report* report);

/* Counts as decimal strings: which = 0 for A_wmin, 1 for A_1.5wmin. */
dmwe_status dmwe_report_count(const dmwe_report* report, int which, char** out);
uint64_t dmwe_report_wmin(const dmwe_report* report);
size_t dmwe_report_pair_count(const dmwe_report* report);

/* JSON document with canonical key order and counts as decimal strings. */
dmwe_status dmwe_report_json(const dmwe_report* report, char** out);
dmwe_status dmwe_report_from_json(const char* json_text, dmwe_report** out);

/* Aligned text table with one line per qualifying pair. */
dmwe_status dmwe_report_table(const dmwe_report* report, char** out);

/* ---- union bound ------------------------------------------------------- */

/* Truncated union bound (weights wmin and 1.5*wmin) at each Eb/N0 point,
 * given in dB. rate <= 0 uses the report's own K/N. */
dmwe_status dmwe_report_union_bound(const dmwe_report* report, double rate,
                                    const double* ebn0_db, size_t point_count, double* out);
dmwe_status dmwe_report_union_bound_csv(const dmwe_report* report, double rate,
                                        const double* ebn0_db, size_t point_count, char** out);

/* ---- orbits ------------------------------------------------------------ */

/* Lists the orbit of the monomial with variable mask var_mask under its own
 * subgroup: one polynomial per line in reduced ANF, then a cardinality line
 * with the exponent breakdown. */
dmwe_status dmwe_orbit_text(uint32_t var_mask, uint32_t m, char** out);

/* ---- brute-force oracle ------------------------------------------------ */

/* Exact weight distribution over all 2^K codewords. K must not exceed
 * k_limit (pass 0 for the default of 24). threads = 0 picks automatically.
 * format: 0 = JSON, 1 = CSV. */
dmwe_status dmwe_code_spectrum(const dmwe_code* code, uint32_t k_limit, uint32_t threads,
                               int format, char** out);

/* ---- verification ------------------------------------------------------ */

/* Runs the closed-form counts against the exhaustive oracle and writes a
 * per-check report. Returns DMWE_OK when every check passes and
 * DMWE_ERR_MISMATCH otherwise (the report is produced either way). */
dmwe_status dmwe_code_verify(const dmwe_code* code, uint32_t k_limit, uint32_t threads,
                             char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* DMWE_H */
