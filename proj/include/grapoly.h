/* C interface to the graph-polynomial library. Graphs are opaque handles;
 * every computed result is returned as a JSON string allocated by the
 * library (release with gp_string_free). Functions return GP_OK on success
 * and an error code otherwise; gp_last_error() carries the detail message
 * for the calling thread. */

#ifndef GRAPOLY_H
#define GRAPOLY_H

#include <stddef.h>

#if defined(_WIN32)
#define GRAPOLY_API __declspec(dllexport)
#else
#define GRAPOLY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gp_graph gp_graph;

typedef enum gp_status {
  GP_OK = 0,
  GP_ERROR_VERIFY = 1,   /* a verification-style run had failing checks  */
  GP_ERROR_INPUT = 2,    /* malformed input, unknown names, bad options  */
  GP_ERROR_GUARD = 3,    /* a size guard refused an exponential run      */
  GP_ERROR_DOMAIN = 4,   /* numeric parameters outside the valid region  */
  GP_ERROR_NUMERIC = 5,  /* an iterative numeric routine failed          */
  GP_ERROR_INTERNAL = 6
} gp_status;

GRAPOLY_API const char* gp_version(void);
/* Detail message for the latest failure on this thread; empty if none. */
GRAPOLY_API const char* gp_last_error(void);
GRAPOLY_API void gp_string_free(char* s);

/* Graph construction. Text format: '#' comments, a header line "N M", then
 * M lines "u v" (0-based; u == v is a loop, duplicates are parallel edges).
 * Named graphs accept corpus names ("k4", "petersen", "theta", ...) and the
 * parametric families "bouquet:N", "cycle:N", "complete:N", "path:N". */
GRAPOLY_API gp_status gp_graph_from_text(const char* text, gp_graph** out);
GRAPOLY_API gp_status gp_graph_from_file(const char* path, gp_graph** out);
GRAPOLY_API gp_status gp_graph_named(const char* name, gp_graph** out);
GRAPOLY_API void gp_graph_free(gp_graph* g);
GRAPOLY_API int gp_graph_vertex_count(const gp_graph* g);
GRAPOLY_API int gp_graph_edge_count(const gp_graph* g);

/* Guards: pass 0 (or negative) to use the defaults, 26 edges / 24 vertices.
 *
 * algorithm: "enum" | "dc" | "vexp"
 * route:     "spec" | "vexp" | "dc" | "md" | "det"                        */
GRAPOLY_API gp_status gp_compute_theta(const gp_graph* g, const char* algorithm, int max_edges,
                                       char** json_out);
GRAPOLY_API gp_status gp_compute_omega(const gp_graph* g, const char* route, int max_edges,
                                       char** json_out);
GRAPOLY_API gp_status gp_compute_tutte(const gp_graph* g, int max_edges, char** json_out);
GRAPOLY_API gp_status gp_compute_matching(const gp_graph* g, int max_vertices, char** json_out);
GRAPOLY_API gp_status gp_omega_zeros(const gp_graph* g, int max_edges, char** json_out);
GRAPOLY_API gp_status gp_count_subcoregraphs(const gp_graph* g, int max_edges, char** json_out);
GRAPOLY_API gp_status gp_count_by_degree3(const gp_graph* g, int max_edges, char** json_out);

/* Bethe-ratio report over seeded random in-domain parameter draws. Returns
 * GP_ERROR_VERIFY (with the JSON still populated) when a draw failed or the
 * worst relative error exceeded tol. */
GRAPOLY_API gp_status gp_bethe_report(const gp_graph* g, unsigned long seed, int draws,
                                      double tol, char** json_out);

/* Full invariant suite over the built-in corpus plus an optional extra
 * graph. Returns GP_ERROR_VERIFY when checks failed (JSON still populated).
 * With self_test != 0 only a deliberately corrupted expectation runs and
 * GP_OK means the harness caught it. include_timings adds per-check
 * elapsed milliseconds (off by default so identical runs are byte-equal). */
GRAPOLY_API gp_status gp_verify(const gp_graph* extra_or_null, const char* extra_name_or_null,
                                int max_edges, int max_vertices, unsigned long seed,
                                int random_count, int self_test, int include_timings,
                                char** json_out);

/* Names and sizes of the built-in corpus. */
GRAPOLY_API gp_status gp_corpus_list(char** json_out);

#ifdef __cplusplus
}
#endif

#endif
