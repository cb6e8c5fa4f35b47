/* C interface to the p6c4 coloring library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returning p6c4_status leaves a thread-local message behind on
 * failure (p6c4_last_error). Strings handed out through `char** out` are
 * NUL-terminated, owned by the caller, and released with p6c4_string_free.
 * Structured results are JSON documents. */
#ifndef P6C4_H
#define P6C4_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(P6C4_BUILDING)
#    define P6C4_API __declspec(dllexport)
#  else
#    define P6C4_API __declspec(dllimport)
#  endif
#else
#  define P6C4_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum p6c4_status {
  P6C4_OK = 0,
  P6C4_ERR_INVALID_ARGUMENT = 1, /* bad handle, id, flag value or precondition */
  P6C4_ERR_PARSE = 2,            /* malformed graph, coloring or spec text */
  P6C4_ERR_LIMIT = 3,            /* exact oracle above its size limit */
  P6C4_ERR_IO = 4,               /* file system failure */
  P6C4_ERR_INTERNAL = 5          /* library invariant failed (a bug) */
} p6c4_status;

typedef enum p6c4_format {
  P6C4_FORMAT_AUTO = 0,
  P6C4_FORMAT_EDGE_LIST = 1,
  P6C4_FORMAT_DIMACS = 2
} p6c4_format;

typedef struct p6c4_graph p6c4_graph;
typedef struct p6c4_coloring p6c4_coloring;

typedef struct p6c4_options {
  int oracle_limit;  /* max vertices for the exact clique oracle; <= 0 means 24 */
  int verify_class;  /* non-zero: test (P6,C4)-freeness and report the guarantee */
  int threads;       /* corpus generation workers; <= 1 means sequential */
} p6c4_options;

P6C4_API const char* p6c4_version(void);
P6C4_API const char* p6c4_last_error(void);
P6C4_API const char* p6c4_status_name(p6c4_status status);
P6C4_API void p6c4_string_free(char* s);
P6C4_API p6c4_options p6c4_default_options(void);

/* ---- graphs ---- */
P6C4_API p6c4_status p6c4_graph_parse(const char* text, size_t length, p6c4_format format, p6c4_graph** out);
/* edges holds 2*edge_count endpoints, 0-based. */
P6C4_API p6c4_status p6c4_graph_from_edges(int n, const int* edges, size_t edge_count, p6c4_graph** out);
/* name: petersen | f | f1 | f2 | f3 | cycle | path | complete | tightness; param is k or s. */
P6C4_API p6c4_status p6c4_graph_named(const char* name, int param, p6c4_graph** out);
P6C4_API void p6c4_graph_free(p6c4_graph* g);
P6C4_API int p6c4_graph_order(const p6c4_graph* g);
P6C4_API long long p6c4_graph_size(const p6c4_graph* g);
P6C4_API int p6c4_graph_adjacent(const p6c4_graph* g, int u, int v);
P6C4_API p6c4_status p6c4_graph_serialize(const p6c4_graph* g, p6c4_format format, char** out);
P6C4_API p6c4_status p6c4_graph_stats_json(const p6c4_graph* g, char** out);
P6C4_API p6c4_status p6c4_export_dot(const p6c4_graph* g, const p6c4_coloring* coloring /* nullable */, char** out);

/* ---- coloring ---- */
P6C4_API p6c4_status p6c4_color(const p6c4_graph* g, p6c4_coloring** out);
/* Colors g and returns {palette, assignment, omega, bound, guarantee}. Fails
 * with P6C4_ERR_INTERNAL when the result is improper or, for a certified
 * (P6,C4)-free graph, above floor(3/2 omega). */
P6C4_API p6c4_status p6c4_color_report_json(const p6c4_graph* g, const p6c4_options* options, char** out);
/* "v c" lines or {"assignment": [...]}; n is the graph order. */
P6C4_API p6c4_status p6c4_coloring_parse(const char* text, size_t length, int n, p6c4_coloring** out);
P6C4_API p6c4_status p6c4_coloring_from_array(const int* colors, int n, p6c4_coloring** out);
P6C4_API void p6c4_coloring_free(p6c4_coloring* c);
P6C4_API int p6c4_coloring_order(const p6c4_coloring* c);
P6C4_API int p6c4_coloring_palette(const p6c4_coloring* c);
P6C4_API int p6c4_coloring_color(const p6c4_coloring* c, int v);
P6C4_API p6c4_status p6c4_coloring_serialize(const p6c4_coloring* c, int as_json, char** out);
/* proper is set to 1 or 0. */
P6C4_API p6c4_status p6c4_verify_coloring(const p6c4_graph* g, const p6c4_coloring* c, int* proper);
/* {proper, palette, omega, bound, ratio_ok}; omega fields are null above the oracle limit. */
P6C4_API p6c4_status p6c4_verify_report_json(const p6c4_graph* g, const p6c4_coloring* c,
                                             const p6c4_options* options, char** out);

/* ---- structure ---- */
/* {components: [{vertices, tree}]}, trees in root vertex ids. */
P6C4_API p6c4_status p6c4_decompose_json(const p6c4_graph* g, char** out);
/* {c4_free, p6_free, in_class, c4_witness, p6_witness, chordal}. */
P6C4_API p6c4_status p6c4_check_class_json(const p6c4_graph* g, char** out);
P6C4_API p6c4_status p6c4_audit_json(const p6c4_graph* g, const p6c4_options* options, char** out);

/* ---- corpus ---- */
/* spec_json may be NULL or partial (missing keys take defaults); seed
 * overrides the spec's seed when seed_override is non-zero. Writes one edge
 * list per graph plus manifest.json into out_dir (created if missing) and
 * returns the manifest. */
P6C4_API p6c4_status p6c4_generate_corpus(const char* spec_json, uint64_t seed, int seed_override,
                                          const char* out_dir, const p6c4_options* options, char** manifest_out);

#ifdef __cplusplus
}
#endif

#endif /* P6C4_H */
