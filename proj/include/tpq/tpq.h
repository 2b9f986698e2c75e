/* tpq — ternary power quotients.
 *
 * C interface to a library that decides, enumerates, classifies and
 * catalogs representations of integers as quotients of sums of distinct
 * powers of 3.
 *
 * Conventions:
 *   - integers cross the boundary as decimal strings (arbitrary precision);
 *   - digit strings over {0,1} are written most-significant-first, exactly
 *     as in the bracket notation [1101]_3 without the brackets;
 *   - every char* output parameter receives a heap string owned by the
 *     caller; release it with tpq_string_free;
 *   - list-shaped results are JSON lines (one object per line).
 */

#ifndef TPQ_H
#define TPQ_H

#include <stddef.h>

#ifndef TPQ_API
#if defined(_WIN32)
#define TPQ_API
#else
#define TPQ_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tpq_status {
    TPQ_OK = 0,
    TPQ_ERR_INVALID_ARGUMENT = 1, /* malformed input (bad decimal, bad digits, null) */
    TPQ_ERR_DOMAIN = 2,           /* precondition violated (m % 3 != 1, n < 3, ...) */
    TPQ_ERR_LIMIT = 3,            /* resource guard hit (oracle degree, word size) */
    TPQ_ERR_IO = 4,               /* file could not be read or written */
    TPQ_ERR_INTERNAL = 5
} tpq_status;

TPQ_API const char* tpq_status_name(tpq_status status);
TPQ_API const char* tpq_version(void);
TPQ_API void tpq_string_free(char* s);

/* When a call fails, a malloc'd description of the failure is stored in
 * *error_out (when non-null). */

/* Decides representability of m >= 1 (any residue; factors of 3 are
 * stripped first). *representable_out is 1 or 0; *reason_out receives a
 * one-line explanation, including a shortest witness when one exists. */
TPQ_API tpq_status tpq_decide(const char* m_decimal, int* representable_out, char** reason_out,
                              char** error_out);

/* JSON lines for the indecomposable representations of m == 1 (mod 3) with
 * at most max_len digits in p, in canonical order. With
 * include_decomposable != 0, compositions (with interior zero padding) up to
 * the same length bound follow. max_len is capped at 64. */
TPQ_API tpq_status tpq_enumerate(const char* m_decimal, int max_len, int include_decomposable,
                                 char** jsonl_out, char** error_out);

/* Verifies p(3) == m * q(3) for most-significant-first digit strings and
 * classifies the pair; *json_out receives one JSON object. */
TPQ_API tpq_status tpq_classify(const char* m_decimal, const char* p_ternary,
                                const char* q_ternary, char** json_out, char** error_out);

/* JSON lines, one per closed-form family containing m. */
TPQ_API tpq_status tpq_families(const char* m_decimal, char** jsonl_out, char** error_out);

/* Closed-form representation generators. */
TPQ_API tpq_status tpq_gen_3n2(int n, int k, char** json_out, char** error_out);
TPQ_API tpq_status tpq_gen_100(int j, char** json_out, char** error_out);

/* Brute-force search over 0,1-polynomials p with deg p <= max_degree
 * (max 24); JSON lines tagged "source": "oracle". */
TPQ_API tpq_status tpq_oracle(const char* m_decimal, int max_degree, char** jsonl_out,
                              char** error_out);

/* Compares oracle hits against walk-generated representations; *json_out
 * receives one JSON object with any discrepancies. */
TPQ_API tpq_status tpq_cross_check(const char* m_decimal, int max_degree, int max_len,
                                   char** json_out, char** error_out);

/* JSON lines {"m": "..."} for every feasible m == 1 (mod 3) up to max_m
 * with no representation, ascending. */
TPQ_API tpq_status tpq_scan_exceptions(const char* max_m_decimal, int threads, char** jsonl_out,
                                       char** error_out);

/* ---- carry digraph handle ---- */

typedef struct tpq_digraph tpq_digraph;

/* Builds D_m for m == 1 (mod 3). */
TPQ_API tpq_status tpq_digraph_build(const char* m_decimal, tpq_digraph** digraph_out,
                                     char** error_out);
TPQ_API void tpq_digraph_free(tpq_digraph* g);
TPQ_API size_t tpq_digraph_vertex_count(const tpq_digraph* g);
TPQ_API size_t tpq_digraph_coreachable_count(const tpq_digraph* g);
TPQ_API int tpq_digraph_is_representable(const tpq_digraph* g);
/* Graphviz text; pruned != 0 keeps only vertices from which 0 is reachable. */
TPQ_API tpq_status tpq_digraph_dot(const tpq_digraph* g, int pruned, char** dot_out,
                                   char** error_out);

/* ---- catalog handle ---- */

typedef struct tpq_catalog tpq_catalog;

/* Classifies every feasible m == 1 (mod 3) up to max_m, searching walks of
 * at most max_len edges and oracle hits of degree at most oracle_degree.
 * cache_path may be NULL; when given, rows computed earlier under the same
 * bounds are reused and the merged cache is written back. */
TPQ_API tpq_status tpq_catalog_build(const char* max_m_decimal, int max_len, int oracle_degree,
                                     const char* cache_path, int threads,
                                     tpq_catalog** catalog_out, char** error_out);
TPQ_API void tpq_catalog_free(tpq_catalog* c);
TPQ_API size_t tpq_catalog_row_count(const tpq_catalog* c);
/* format is "md", "csv" or "json". */
TPQ_API tpq_status tpq_catalog_render(const tpq_catalog* c, const char* format, char** text_out,
                                      char** error_out);
TPQ_API tpq_status tpq_catalog_save(const tpq_catalog* c, const char* path, char** error_out);

#ifdef __cplusplus
}
#endif

#endif /* TPQ_H */
