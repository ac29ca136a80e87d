/* C interface to the rainbow3 library. Every function returns an r3_status;
 * on failure r3_last_error() describes the problem (thread-local, valid until
 * the next call on the same thread). Strings returned through char** are
 * owned by the caller and released with r3_string_free. */
#ifndef RAINBOW3_H
#define RAINBOW3_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define R3_API __declspec(dllexport)
#else
#define R3_API __attribute__((visibility("default")))
#endif

typedef struct r3_graph r3_graph;
typedef struct r3_coloring r3_coloring;

typedef enum r3_status {
  R3_OK = 0,
  R3_INVALID_ARGUMENT = 1,
  R3_PARSE = 2,
  R3_PRECONDITION = 3,
  R3_LIMIT = 4,
  R3_INTERNAL = 5,
  R3_IO = 6
} r3_status;

typedef enum r3_method { R3_METHOD_THEOREM3 = 0, R3_METHOD_THEOREM4 = 1, R3_METHOD_SPANNING = 2 } r3_method;

/* Family parameters; fields a family does not use are ignored. Call
 * r3_family_params_init first so unused fields hold -1. */
typedef struct r3_family_params {
  int64_t delta;
  int64_t m;
  int64_t t;
  int64_t k;
  int64_t n;
  int64_t s;
  uint64_t seed;
} r3_family_params;

R3_API const char* r3_last_error(void);
R3_API const char* r3_status_name(r3_status status);
R3_API void r3_string_free(char* s);

/* pairs holds m (u, v) pairs, 2*m entries. */
R3_API r3_status r3_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, r3_graph** out);
R3_API r3_status r3_graph_parse(const char* edge_list, r3_graph** out);
R3_API r3_status r3_graph_format(const r3_graph* g, char** out);
R3_API size_t r3_graph_num_vertices(const r3_graph* g);
R3_API size_t r3_graph_num_edges(const r3_graph* g);
R3_API void r3_graph_free(r3_graph* g);

R3_API void r3_family_params_init(r3_family_params* p);
/* Families: complete (n), complete-bipartite (s, t), path (n), cycle (n),
 * star (n leaves), gstar (delta, m), threshold (t), chain (k, t),
 * french-windmill (t), random (n, delta, seed). labels_json may be NULL. */
R3_API r3_status r3_generate(const char* family, const r3_family_params* params, r3_graph** out,
                             char** labels_json);
/* Interval graph from "lo hi" lines; the labels name the greedy dominating
 * path as p1, p2, ... */
R3_API r3_status r3_interval_graph(const char* intervals, r3_graph** out, char** labels_json);

/* dom == NULL selects a dominating set automatically (ignored for
 * R3_METHOD_SPANNING). */
R3_API r3_status r3_color(const r3_graph* g, r3_method method, const uint32_t* dom, size_t dom_len,
                          r3_coloring** out);
R3_API r3_status r3_coloring_format(const r3_coloring* c, char** out);
R3_API r3_status r3_coloring_parse(const char* text, r3_coloring** out);
R3_API size_t r3_coloring_num_colors(const r3_coloring* c);
/* Graph the coloring is defined on; owned by the coloring. */
R3_API const r3_graph* r3_coloring_graph(const r3_coloring* c);
R3_API void r3_coloring_free(r3_coloring* c);

/* Full 3-rainbow check plus any certificates the coloring carries.
 * verdict: 1 true, 0 false. json may be NULL. */
R3_API r3_status r3_verify(const r3_coloring* c, int* verdict, char** json);

/* value is -1 when no coloring with at most kmax colors exists. */
R3_API r3_status r3_exact_rx3(const r3_graph* g, int kmax, int* value, char** json);
R3_API r3_status r3_bounds_report(const r3_graph* g, char** json);
R3_API r3_status r3_steiner_report(const r3_graph* g, char** json);

#ifdef __cplusplus
}
#endif

#endif /* RAINBOW3_H */
