#ifndef ECCX_H
#define ECCX_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Named graph families for [`eccx_graph_family`].
typedef enum EccxFamily {
  ECCX_FAMILY_COMPLETE = 0,
  ECCX_FAMILY_COMPLETE_BIPARTITE = 1,
  ECCX_FAMILY_CYCLE = 2,
  ECCX_FAMILY_PATH = 3,
  ECCX_FAMILY_STAR = 4,
  ECCX_FAMILY_PETERSEN = 5,
  ECCX_FAMILY_PRISM = 6,
} EccxFamily;

// Result codes shared by every function in this library.
typedef enum EccxStatus {
  ECCX_STATUS_OK = 0,
  ECCX_STATUS_NULL_POINTER = 1,
  ECCX_STATUS_INVALID_UTF8 = 2,
  ECCX_STATUS_PARSE = 3,
  ECCX_STATUS_INPUT = 4,
  ECCX_STATUS_PARAMETER = 5,
  ECCX_STATUS_STRUCTURE = 6,
  ECCX_STATUS_DISCONNECTED = 7,
  ECCX_STATUS_HYPOTHESIS = 8,
  ECCX_STATUS_NUMERIC = 9,
  ECCX_STATUS_CONTRACT = 10,
  ECCX_STATUS_PARTITION = 11,
  ECCX_STATUS_BUFFER_TOO_SMALL = 12,
  ECCX_STATUS_INDEX_OUT_OF_RANGE = 13,
  ECCX_STATUS_PANIC = 14,
} EccxStatus;

// Opaque immutable graph.
typedef struct EccxGraph EccxGraph;

// Opaque grouped spectrum.
typedef struct EccxSpectrum EccxSpectrum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread; empty if none. The
// pointer stays valid until the next failing call on the same thread.
const char *eccx_last_error_message(void);

// Releases a string returned by this library.
void eccx_string_free(char *s);

// Decodes one graph6 line.
enum EccxStatus eccx_graph_from_graph6(const char *text_in, struct EccxGraph **out);

// Parses a JSON edge list `{"n": .., "edges": [[i, j], ..]}`.
enum EccxStatus eccx_graph_from_edge_list_json(const char *text_in, struct EccxGraph **out);

// Parses an operand spec such as `C5`, `K3,3`, `L2(prism)` or `g6:A_`.
enum EccxStatus eccx_graph_from_spec(const char *spec, struct EccxGraph **out);

// Builds a member of a named family from `len` parameters.
enum EccxStatus eccx_graph_family(enum EccxFamily kind,
                                  const size_t *params,
                                  size_t len,
                                  struct EccxGraph **out);

void eccx_graph_free(struct EccxGraph *g);

// Vertex count; 0 for NULL.
size_t eccx_graph_order(const struct EccxGraph *g);

// Edge count; 0 for NULL.
size_t eccx_graph_size(const struct EccxGraph *g);

// graph6 encoding; free with [`eccx_string_free`].
enum EccxStatus eccx_graph_to_graph6(const struct EccxGraph *g, char **out);

enum EccxStatus eccx_graph_complement(const struct EccxGraph *g, struct EccxGraph **out);

enum EccxStatus eccx_graph_line_graph(const struct EccxGraph *g, struct EccxGraph **out);

enum EccxStatus eccx_graph_subdivision(const struct EccxGraph *g, struct EccxGraph **out);

// Disjoint union, vertices of `a` first.
enum EccxStatus eccx_graph_union(const struct EccxGraph *a,
                                 const struct EccxGraph *b,
                                 struct EccxGraph **out);

enum EccxStatus eccx_graph_join(const struct EccxGraph *a,
                                const struct EccxGraph *b,
                                struct EccxGraph **out);

// Subdivision-vertex join; `a` needs at least one edge.
enum EccxStatus eccx_graph_subdivision_vertex_join(const struct EccxGraph *a,
                                                   const struct EccxGraph *b,
                                                   struct EccxGraph **out);

// Subdivision-edge join; `a` needs at least one edge.
enum EccxStatus eccx_graph_subdivision_edge_join(const struct EccxGraph *a,
                                                 const struct EccxGraph *b,
                                                 struct EccxGraph **out);

enum EccxStatus eccx_graph_is_connected(const struct EccxGraph *g, bool *out);

// Copies the row-major eccentricity matrix into `buf`. `out_order`
// receives the order even when `capacity < order²`, in which case
// `ECCX_STATUS_BUFFER_TOO_SMALL` is returned and `buf` is untouched.
enum EccxStatus eccx_graph_epsilon_matrix(const struct EccxGraph *g,
                                          int64_t *buf,
                                          size_t capacity,
                                          size_t *out_order);

// Grouped ε-spectrum; free with [`eccx_spectrum_free`].
enum EccxStatus eccx_graph_epsilon_spectrum(const struct EccxGraph *g, struct EccxSpectrum **out);

enum EccxStatus eccx_graph_is_epsilon_irreducible(const struct EccxGraph *g, bool *out);

// ε-Wiener index (half the entry sum of the eccentricity matrix).
enum EccxStatus eccx_graph_epsilon_wiener(const struct EccxGraph *g, int64_t *out);

void eccx_spectrum_free(struct EccxSpectrum *s);

// Number of distinct eigenvalues; 0 for NULL.
size_t eccx_spectrum_len(const struct EccxSpectrum *s);

// The `index`-th (value, multiplicity) pair, values descending.
enum EccxStatus eccx_spectrum_get(const struct EccxSpectrum *s,
                                  size_t index,
                                  double *value,
                                  size_t *multiplicity);

enum EccxStatus eccx_spectrum_energy(const struct EccxSpectrum *s, double *out);

enum EccxStatus eccx_spectrum_is_integral(const struct EccxSpectrum *s, double tol, bool *out);

// JSON array of `{"value", "multiplicity"}`; free with [`eccx_string_free`].
enum EccxStatus eccx_spectrum_to_json(const struct EccxSpectrum *s, char **out);

// Compares the closed-form ε-spectrum named by `theorem` (for example
// `"sv-join"`) with the computed one for `count` operands.
enum EccxStatus eccx_verify(const char *theorem,
                            const struct EccxGraph *const *operands,
                            size_t count,
                            double tol,
                            bool *out_pass,
                            double *out_max_deviation);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ECCX_H */
