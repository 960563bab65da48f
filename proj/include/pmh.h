/*
 * pmh — packed-matrix Hopf algebra library, C interface.
 *
 * An exact-arithmetic library for the bigraded Hopf algebra whose bases are
 * indexed by square matrices over {0..k} without null rows or columns, its
 * alternating-sign-matrix subalgebra with six-vertex statistics, congruence
 * subalgebras on column words, and the classical embeddings into it.
 *
 * Conventions:
 *   - every object is an opaque handle freed by its pmh_*_free function;
 *   - every string output parameter is allocated by the library and must be
 *     released with pmh_string_free;
 *   - functions return PMH_OK on success, a negative status otherwise;
 *     pmh_last_error_message() describes the most recent failure on the
 *     calling thread.
 *
 * Matrix text format (bit-exact, shared with the CLI): one line per row,
 * single-digit entries separated by single spaces; the empty matrix is the
 * literal "empty".
 */

#ifndef PMH_H
#define PMH_H

#include <stddef.h>

#ifdef _WIN32
#define PMH_API __declspec(dllexport)
#else
#define PMH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pmh_status {
  PMH_OK = 0,
  PMH_ERR_PARSE = -1,     /* malformed text input */
  PMH_ERR_DOMAIN = -2,    /* invariant violation or operand mismatch */
  PMH_ERR_ARGUMENT = -3,  /* unknown selector, suite, statistic, ... */
  PMH_ERR_VERIFY = -4,    /* a verification suite found violations */
  PMH_ERR_INTERNAL = -5
} pmh_status;

typedef struct pmh_matrix pmh_matrix;   /* a packed matrix */
typedef struct pmh_element pmh_element; /* a formal linear combination */
typedef struct pmh_iter pmh_iter;       /* a matrix enumeration */

PMH_API const char* pmh_version(void);
PMH_API const char* pmh_status_name(pmh_status status);
/* Thread-local message for the last failing call; never NULL. */
PMH_API const char* pmh_last_error_message(void);
PMH_API void pmh_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Matrices                                                            */

PMH_API pmh_status pmh_matrix_parse(const char* text, int alphabet, pmh_matrix** out);
PMH_API pmh_status pmh_matrix_format(const pmh_matrix* m, char** out);
PMH_API void pmh_matrix_free(pmh_matrix* m);

PMH_API int pmh_matrix_size(const pmh_matrix* m);
PMH_API int pmh_matrix_weight(const pmh_matrix* m);
PMH_API int pmh_matrix_alphabet(const pmh_matrix* m);
PMH_API pmh_status pmh_matrix_transpose(const pmh_matrix* m, pmh_matrix** out);
PMH_API pmh_status pmh_matrix_over(const pmh_matrix* a, const pmh_matrix* b, pmh_matrix** out);
PMH_API pmh_status pmh_matrix_under(const pmh_matrix* a, const pmh_matrix* b, pmh_matrix** out);
/* 1 / 0; PMH_ERR_DOMAIN for the empty matrix. */
PMH_API int pmh_matrix_is_connected(const pmh_matrix* m);
PMH_API int pmh_matrix_is_anti_connected(const pmh_matrix* m);
/* Partial order comparison; writes 1 or 0 to *out. */
PMH_API pmh_status pmh_matrix_leq(const pmh_matrix* lo, const pmh_matrix* hi, int* out);

/* ------------------------------------------------------------------ */
/* Counting and enumeration                                            */

/* Exact counts as decimal strings. */
PMH_API pmh_status pmh_count(int k, int n, int l, char** out);
PMH_API pmh_status pmh_count_by_size(int k, int n, char** out);
PMH_API pmh_status pmh_count_by_weight(int k, int l, char** out);

/* grading: "size" or "weight". */
PMH_API pmh_status pmh_enum_packed(int k, const char* grading, int degree, pmh_iter** out);
PMH_API pmh_status pmh_enum_asm(int n, pmh_iter** out);
/* 1: wrote a handle; 0: exhausted; negative: pmh_status error. */
PMH_API int pmh_iter_next(pmh_iter* it, pmh_matrix** out);
PMH_API void pmh_iter_free(pmh_iter* it);

/* ------------------------------------------------------------------ */
/* Hopf operations in the fundamental basis                            */

PMH_API pmh_status pmh_product(const pmh_matrix* a, const pmh_matrix* b, pmh_element** out);
PMH_API pmh_status pmh_dual_product(const pmh_matrix* a, const pmh_matrix* b,
                                    pmh_element** out);
PMH_API pmh_status pmh_coproduct(const pmh_matrix* m, pmh_element** out);
PMH_API pmh_status pmh_dual_coproduct(const pmh_matrix* m, pmh_element** out);
PMH_API pmh_status pmh_antipode(const pmh_matrix* m, pmh_element** out);

PMH_API size_t pmh_element_term_count(const pmh_element* e);
/* One JSON record: {"basis":...,"terms":[{"matrix"| "left"/"right","coeff"}]}. */
PMH_API pmh_status pmh_element_format(const pmh_element* e, char** out);
PMH_API void pmh_element_free(pmh_element* e);

/* ------------------------------------------------------------------ */
/* Alternating sign matrices                                           */

/* Signs a 0/1 support; PMH_ERR_DOMAIN when no ASM has this support.
   The text form uses entries 0, +, -. */
PMH_API pmh_status pmh_asm_sign(const pmh_matrix* support, char** out_text);
PMH_API int pmh_is_asm_support(const pmh_matrix* m);
/* Order: ne, sw, se, nw, oi, io. */
PMH_API pmh_status pmh_asm_stats(const pmh_matrix* support, long out_stats[6]);

/* ------------------------------------------------------------------ */
/* Tables, verification, sequence cross-checks                         */

/* Selectors as in the CLI: "all", "generators", "primitives",
   "congruence:<name>", "asm", "quotient:<stats>". */
PMH_API pmh_status pmh_dims_csv(const char* what, int k, const char* grading, int max_degree,
                                char** out);
PMH_API pmh_status pmh_asm_stats_csv(int n, char** out);

/* Suites: "hopf", "congruences", "asm-closure", "asm-morphisms",
   "embeddings", "all".  fault may be NULL or one of "drop-shuffle-term",
   "broken-congruence", "non-closed-image".  Returns PMH_ERR_VERIFY when the
   report contains violations; *out_report is written either way. */
PMH_API pmh_status pmh_verify(const char* suite, int k, int max_size, unsigned seed,
                              const char* fault, char** out_report);

/* Compares computed sequences against vendored OEIS prefixes; returns
   PMH_ERR_VERIFY on any mismatch. */
PMH_API pmh_status pmh_oeis_check(char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* PMH_H */
