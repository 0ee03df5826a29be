#ifndef BICOVER_H
#define BICOVER_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Distance reported for vertices the root cannot reach.
 */
#define BC_UNREACHABLE UINT32_MAX

typedef enum BcStatus {
  BC_STATUS_OK = 0,
  BC_STATUS_NULL_POINTER = 1,
  BC_STATUS_UTF8 = 2,
  BC_STATUS_PARSE = 3,
  BC_STATUS_INPUT = 4,
  /**
   * The input violates a structural precondition (not capped, crossing
   * segments of one color, collinear overlap).
   */
  BC_STATUS_PRECONDITION = 5,
  /**
   * A certificate or soundness check failed.
   */
  BC_STATUS_CERTIFICATE = 6,
  BC_STATUS_OVERFLOW = 7,
  BC_STATUS_BUFFER_TOO_SMALL = 8,
  BC_STATUS_PANIC = 9,
} BcStatus;

/**
 * Opaque biclique cover handle.
 */
typedef struct BcCover BcCover;

/**
 * Opaque graph handle.
 */
typedef struct BcGraph BcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *bc_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void bc_string_free(char *s);

/**
 * Parses a graph file.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum BcStatus bc_graph_parse(const char *text, struct BcGraph **out);

/**
 * Graph on `n` vertices from `m` edges given as `2m` endpoints.
 *
 * # Safety
 * `edges` holds `2 * m` values; `out` is writable.
 */
enum BcStatus bc_graph_from_edges(size_t n, const size_t *edges, size_t m, struct BcGraph **out);

/**
 * Brute-force graph of any instance file.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum BcStatus bc_instance_graph(const char *text, struct BcGraph **out);

/**
 * # Safety
 * `g` is a live handle.
 */
size_t bc_graph_n(const struct BcGraph *g);

/**
 * # Safety
 * `g` is a live handle.
 */
size_t bc_graph_m(const struct BcGraph *g);

/**
 * # Safety
 * `g` is null or a handle not yet freed.
 */
void bc_graph_free(struct BcGraph *g);

/**
 * Parses a cover file.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum BcStatus bc_cover_parse(const char *text, struct BcCover **out);

/**
 * Cover of any instance file with the construction for its kind. With
 * `strict`, preconditions are checked first.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum BcStatus bc_instance_cover(const char *text, bool strict, struct BcCover **out);

/**
 * Cover of the intersection graph of closed integer intervals
 * `[lo[i], hi[i]]`.
 *
 * # Safety
 * `lo` and `hi` hold `n` values; `out` is writable.
 */
enum BcStatus bc_cover_intervals(const int64_t *lo,
                                 const int64_t *hi,
                                 size_t n,
                                 struct BcCover **out);

/**
 * Number of bicliques.
 *
 * # Safety
 * `c` is a live handle.
 */
size_t bc_cover_len(const struct BcCover *c);

/**
 * Sum of `|L| + |R|` over the bicliques.
 *
 * # Safety
 * `c` is a live handle.
 */
size_t bc_cover_size(const struct BcCover *c);

/**
 * Writes the cover file text to `*out`; free it with [`bc_string_free`].
 *
 * # Safety
 * `c` is a live handle; `out` is writable.
 */
enum BcStatus bc_cover_to_text(const struct BcCover *c, char **out);

/**
 * # Safety
 * `c` is null or a handle not yet freed.
 */
void bc_cover_free(struct BcCover *c);

/**
 * Sets `*valid` when the cover generates exactly the edges of `g` (and
 * each once, for partitions).
 *
 * # Safety
 * `g` and `c` are live handles; `valid` is writable.
 */
enum BcStatus bc_cover_validate(const struct BcGraph *g, const struct BcCover *c, bool *valid);

/**
 * Hop distances from `root` over the graph the cover generates, written
 * to `dist[0..n]`; unreachable vertices get [`BC_UNREACHABLE`].
 *
 * # Safety
 * `c` is a live handle; `dist` has room for `n` values.
 */
enum BcStatus bc_bfs(const struct BcCover *c, size_t n, size_t root, uint32_t *dist);

/**
 * Edges of the 3-hop spanner as `2 * len` endpoints. `*len` is always set;
 * when `cap` edges do not fit, nothing is written and the status is
 * `BufferTooSmall`.
 *
 * # Safety
 * `c` is a live handle; `edges` has room for `2 * cap` values; `len` is
 * writable.
 */
enum BcStatus bc_spanner(const struct BcCover *c, size_t *edges, size_t cap, size_t *len);

/**
 * Sets `*ok` when every edge of `g` has endpoints within `t` hops in the
 * subgraph given by `m` edges.
 *
 * # Safety
 * `g` is a live handle; `edges` holds `2 * m` values; `ok` is writable.
 */
enum BcStatus bc_verify_spanner(const struct BcGraph *g,
                                const size_t *edges,
                                size_t m,
                                size_t t,
                                bool *ok);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BICOVER_H */
