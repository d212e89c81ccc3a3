/* C interface to the metabelian-algebra engine.
 *
 * Conventions:
 *  - every function returning mba_status sets a thread-local error message
 *    retrievable with mba_last_error() on failure;
 *  - strings returned through char** are heap-allocated and must be released
 *    with mba_string_free();
 *  - structured results are JSON text (see schema/report.schema.json).
 */
#ifndef MBA_H
#define MBA_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    MBA_OK = 0,
    MBA_EINVAL = 1,   /* bad argument / unknown name */
    MBA_EPARSE = 2,   /* term grammar violation; offset reported */
    MBA_ELIMIT = 3,   /* outside supported degree/arity caps */
    MBA_EINTERNAL = 4 /* rewriting cap or other internal defect */
} mba_status;

const char* mba_version(void);
/* never NULL; empty string when no error occurred on this thread */
const char* mba_last_error(void);
void mba_string_free(char* s);

/* ----- terms ----- */
typedef struct mba_term mba_term; /* opaque */

/* grammar: t := x<N> | a..e | (com t t) | (lie t t) */
mba_status mba_term_parse(const char* text, mba_term** out, size_t* error_offset);
mba_status mba_term_format(const mba_term* t, char** out);
int mba_term_degree(const mba_term* t);
void mba_term_free(mba_term* t);

/* ----- normal forms -----
 * JSON: [{"monomial": <term string>, "coefficient": <rational string>}, ...]
 * in the deterministic basis order. */
mba_status mba_mtp_normalize(const mba_term* t, char** json_out);
mba_status mba_fman_normalize(const mba_term* t, char** json_out);

/* ----- basis enumeration -----
 * JSON array of term strings.  multilinear != 0 restricts to monomials using
 * x1..x<degree> exactly once (max_index is ignored in that mode). */
mba_status mba_mtp_basis(int max_index, int degree, int multilinear, char** json_out);
mba_status mba_fman_basis(int max_index, int degree, int multilinear, char** json_out);

/* multilinear dimensions 1..max_n; JSON array of integers */
mba_status mba_fman_dims(int max_n, int threads, char** json_out);

/* per-coloring-pattern multilinear census at the given degree (4..6);
 * JSON: [{"pattern": "bwb...", "count": N, "c7_removed": N}, ...] */
mba_status mba_fman_census(int n, int threads, char** json_out);

/* ----- identities ----- */
mba_status mba_identities_list(char** json_out);
mba_status mba_identity_show(const char* name, char** json_out);

/* random substitution annihilation check; variety is "mtp" or "mfm";
 * JSON: {"trials", "max_degree", "failures", "failed_identities"} */
mba_status mba_verify_identities(const char* variety, int max_degree, int trials,
                                 unsigned seed, char** json_out);

/* table vs. rewriting cross-check over x1..max_index;
 * JSON: {"max_index", "min_degree", "max_degree", "issues"} */
mba_status mba_mtp_table_check(int max_index, int min_degree, int max_degree,
                               int threads, char** json_out);

/* ----- oracle ----- */
/* JSON: {"variety","arity","columns","rank","dimension","rows"} */
mba_status mba_oracle_dim(const char* variety, int n, int threads, int allow_huge,
                          char** json_out);
/* labels: multiset of generator indices (total degree <= 5, <= 3 distinct) */
mba_status mba_oracle_graded(const char* variety, const int* labels, size_t nlabels,
                             int threads, char** json_out);
/* certify a candidate multilinear basis at arity n; basis_json is a JSON
 * array of term strings, or NULL for the enumerated basis;
 * JSON: {"certified": bool, "dimension", "candidates", "witness", "reason"} */
mba_status mba_oracle_certify(const char* variety, int n, const char* basis_json,
                              int threads, char** json_out);
/* relation matrix in Matrix-Market-like coordinate text (debugging aid) */
mba_status mba_oracle_matrix(const char* variety, int n, int threads, char** text_out);
/* derived-identity span membership, e.g. "eq-13"; JSON: {"variety","name","holds"} */
mba_status mba_oracle_verify_derived(const char* variety, const char* name, int threads,
                                     char** json_out);

#ifdef __cplusplus
}
#endif
#endif /* MBA_H */
