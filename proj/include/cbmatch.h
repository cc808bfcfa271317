/* C interface to the convex bipartite matching library.
 *
 * Conventions:
 *   - Every function that can fail returns cbm_status; out-parameters are
 *     written only on CBM_OK.
 *   - cbm_last_error() describes the most recent failure on this thread.
 *   - Objects returned through ** parameters are owned by the caller and
 *     released with the matching *_free function; strings with
 *     cbm_string_free. Passing NULL to a free function is a no-op.
 *   - U-vertices (rows) and V-vertices (columns) are numbered from 1.
 *
 * Text formats (line-oriented ASCII, whitespace-separated integers):
 *   graph      "n_u n_v" then one line per row: "L R" for the neighborhood
 *              interval [L, R], "0 0" for a row without edges; a weighted
 *              graph appends the R-L+1 edge weights to each row line
 *   matching   "size" then size lines "u v"
 *   colorings  one line per non-empty row: "row value B E [B2 E2]"
 *   cover      "chain_count k" then k lines "chain row begin end"
 */

#ifndef CBMATCH_H
#define CBMATCH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cbm_status {
    CBM_OK = 0,
    CBM_ERR_ARGUMENT = 1,     /* invalid argument or malformed structure */
    CBM_ERR_PARSE = 2,        /* text input rejected; see cbm_last_error() */
    CBM_ERR_IO = 3,           /* file could not be read or written */
    CBM_ERR_TOO_LARGE = 4,    /* instance exceeds a documented limit */
    CBM_ERR_INCONSISTENT = 5, /* colorings do not describe the graph */
    CBM_ERR_INTERNAL = 6,     /* invariant violation or allocation failure */
} cbm_status;

typedef struct cbm_graph cbm_graph;         /* convex bipartite graph, optional weights */
typedef struct cbm_matching cbm_matching;   /* list of edges plus total weight */
typedef struct cbm_colorings cbm_colorings; /* per-row value spans from the sweep */
typedef struct cbm_cover cbm_cover;         /* chain cover entries */

const char* cbm_version(void);

/* Message for the last failing call on the calling thread; never NULL. */
const char* cbm_last_error(void);

void cbm_string_free(char* s);

/* ---- graph construction -------------------------------------------- */

/* lefts/rights hold n_u entries; lefts[i] == rights[i] == 0 marks an empty
 * row. weights may be NULL for an unweighted graph, otherwise it holds the
 * concatenated per-row weight runs (weight_count entries, one per edge). */
cbm_status cbm_graph_create(int32_t n_u, int32_t n_v, const int32_t* lefts,
                            const int32_t* rights, const int64_t* weights,
                            int64_t weight_count, cbm_graph** out);

/* with_weights selects the weighted flavor of the graph format. */
cbm_status cbm_graph_parse(const char* text, int with_weights, cbm_graph** out);
cbm_status cbm_graph_read(const char* path, int with_weights, cbm_graph** out);

/* Seeded random instance. model is one of "uniform", "fixed-length",
 * "shared-endpoint", "full". empty_per_mille rows out of 1000 get no edges.
 * When with_weights is nonzero, weights are uniform in [weight_min,
 * weight_max]. */
cbm_status cbm_graph_generate(const char* model, int32_t n_u, int32_t n_v,
                              uint64_t seed, int32_t empty_per_mille,
                              int with_weights, int64_t weight_min,
                              int64_t weight_max, cbm_graph** out);

void cbm_graph_free(cbm_graph* g);

int32_t cbm_graph_n_u(const cbm_graph* g);
int32_t cbm_graph_n_v(const cbm_graph* g);
int64_t cbm_graph_edge_count(const cbm_graph* g);
int cbm_graph_is_weighted(const cbm_graph* g);
cbm_status cbm_graph_row(const cbm_graph* g, int32_t u, int32_t* left, int32_t* right);

cbm_status cbm_graph_format(const cbm_graph* g, char** out);
cbm_status cbm_graph_write(const cbm_graph* g, const char* path);

/* ---- solvers -------------------------------------------------------- */

/* Maximum-weight induced matching, O(n + m). Unweighted graphs are solved
 * with unit weights (the expansion is refused above 10^9 edges). When
 * require_nonempty is nonzero and the optimum would be empty although edges
 * exist, the heaviest single edge is returned instead. */
cbm_status cbm_solve_weighted(const cbm_graph* g, int require_nonempty,
                              cbm_matching** out);

/* Maximum-cardinality induced matching, O(n_u + n_v); ignores weights.
 * out_colorings may be NULL. */
cbm_status cbm_solve_unweighted(const cbm_graph* g, cbm_matching** out,
                                cbm_colorings** out_colorings);

void cbm_matching_free(cbm_matching* m);
int64_t cbm_matching_size(const cbm_matching* m);
int64_t cbm_matching_total(const cbm_matching* m);
cbm_status cbm_matching_edge(const cbm_matching* m, int64_t index, int32_t* u,
                             int32_t* v);
cbm_status cbm_matching_parse(const char* text, cbm_matching** out);
cbm_status cbm_matching_format(const cbm_matching* m, char** out);
/* "total k" header followed by the edges. */
cbm_status cbm_matching_format_weighted(const cbm_matching* m, char** out);

void cbm_colorings_free(cbm_colorings* c);
int64_t cbm_colorings_count(const cbm_colorings* c);
cbm_status cbm_colorings_format(const cbm_colorings* c, char** out);

/* ---- chain cover ---------------------------------------------------- */

/* Minimum chain cover, O(n_u + n_v). The chain count always equals the
 * maximum induced matching size. */
cbm_status cbm_cover_compute(const cbm_graph* g, cbm_cover** out);

/* Same construction from previously computed colorings. Fails with
 * CBM_ERR_INCONSISTENT when they do not describe g. */
cbm_status cbm_cover_from_colorings(const cbm_graph* g, const cbm_colorings* c,
                                    cbm_cover** out);

void cbm_cover_free(cbm_cover* c);
int32_t cbm_cover_chain_count(const cbm_cover* c);
int64_t cbm_cover_entry_count(const cbm_cover* c);
cbm_status cbm_cover_entry(const cbm_cover* c, int64_t index, int32_t* chain,
                           int32_t* row, int32_t* begin, int32_t* end);
cbm_status cbm_cover_parse(const char* text, cbm_cover** out);
cbm_status cbm_cover_format(const cbm_cover* c, char** out);

/* ---- certification --------------------------------------------------- */

/* Each check treats matching and cover as untrusted data: structural
 * problems set *valid = 0 with a diagnostic in *reason, they never fail the
 * call. On *valid = 1, *reason is NULL; otherwise the caller frees it with
 * cbm_string_free. reason may be NULL if the text is not wanted. */
cbm_status cbm_check_matching(const cbm_graph* g, const cbm_matching* m,
                              int* valid, char** reason);
cbm_status cbm_check_cover(const cbm_graph* g, const cbm_cover* c, int* valid,
                           char** reason);

/* Valid iff matching and cover each check out and the matching size equals
 * the chain count, which certifies both as optimal. */
cbm_status cbm_check_certificate(const cbm_graph* g, const cbm_matching* m,
                                 const cbm_cover* c, int* valid, char** reason);

/* ---- reference baseline ---------------------------------------------- */

/* Quadratic dynamic program over all edges; benchmark baseline. Refused
 * above 200000 edges. */
cbm_status cbm_naive_dp_max(const cbm_graph* g, int64_t* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CBMATCH_H */
