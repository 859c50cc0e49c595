#ifndef ROLEPRISM_H
#define ROLEPRISM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Side of a matched exception condition.
typedef enum RpSide {
  RP_SIDE_NONE = 0,
  RP_SIDE_GRAPH = 1,
  RP_SIDE_COMPLEMENT = 2,
} RpSide;

typedef enum RpStatus {
  RP_STATUS_OK = 0,
  RP_STATUS_NULL_POINTER = 1,
  RP_STATUS_PARSE_ERROR = 2,
  RP_STATUS_INVALID_GRAPH = 3,
  // The prism has no 3-role assignment.
  RP_STATUS_NO_ASSIGNMENT = 4,
  RP_STATUS_INTERNAL = 5,
  RP_STATUS_BUFFER_TOO_SMALL = 6,
} RpStatus;

// Opaque graph handle.
typedef struct RpGraph RpGraph;

// Opaque witness handle.
typedef struct RpWitness RpWitness;

typedef struct RpDecision {
  bool has_assignment;
  // `None` when `has_assignment` is true.
  enum RpSide side;
  // Matched condition 1..=5, or 0.
  uint8_t condition;
} RpDecision;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` (`u0 v0 u1 v1 ...`).
//
// # Safety
// `edges` must be valid for `2 * edge_count` reads (it may be null when
// `edge_count` is 0). `out` must be valid for a write.
enum RpStatus rp_graph_from_edges(size_t n,
                                  const size_t *edges,
                                  size_t edge_count,
                                  struct RpGraph **out);

// Parses graph6 or edge-list text (detected from the first line).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be valid for a write.
enum RpStatus rp_graph_parse(const char *text, struct RpGraph **out);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle from this library.
size_t rp_graph_order(const struct RpGraph *g);

// Releases a graph. Null is ignored.
//
// # Safety
// `g` must be null or a handle not yet freed.
void rp_graph_free(struct RpGraph *g);

// Decides whether the prism of `g` has a 3-role assignment.
//
// # Safety
// `g` must be a live graph handle; `out` must be valid for a write.
enum RpStatus rp_decide(const struct RpGraph *g, struct RpDecision *out);

// Constructs a verified assignment of the prism of `g`. Returns
// `RP_STATUS_NO_ASSIGNMENT` and leaves `*out` untouched if none exists.
//
// # Safety
// `g` must be a live graph handle; `out` must be valid for a write.
enum RpStatus rp_witness_new(const struct RpGraph *g, struct RpWitness **out);

// Length of the role vector: twice the order of the input graph.
//
// # Safety
// `w` must be null or a live witness handle.
size_t rp_witness_len(const struct RpWitness *w);

// Copies the roles (1..=3) of the prism vertices into `roles`: vertex `i`
// of the input graph first, its mirror at `n + i`.
//
// # Safety
// `w` must be a live witness handle; `roles` must be valid for `capacity`
// writes.
enum RpStatus rp_witness_roles(const struct RpWitness *w, uint8_t *roles, size_t capacity);

// Whether the oracle produced the witness instead of a construction.
//
// # Safety
// `w` must be null or a live witness handle.
bool rp_witness_fallback(const struct RpWitness *w);

// Copies the construction id as a C string.
//
// # Safety
// `w` must be a live witness handle; `buf` must be null or valid for
// `capacity` bytes; `needed` must be null or valid for a write.
enum RpStatus rp_witness_construction(const struct RpWitness *w,
                                      char *buf,
                                      size_t capacity,
                                      size_t *needed);

// Copies the full text trace, as printed by `roleprism witness`.
//
// # Safety
// Same as [`rp_witness_construction`].
enum RpStatus rp_witness_trace(const struct RpWitness *w,
                               char *buf,
                               size_t capacity,
                               size_t *needed);

// Releases a witness. Null is ignored.
//
// # Safety
// `w` must be null or a handle not yet freed.
void rp_witness_free(struct RpWitness *w);

// Checks whether `roles` (length `2n`, values 1..=3) is a 3-role assignment
// of the prism of `g`, against its own quotient.
//
// # Safety
// `g` must be a live graph handle; `roles` must be valid for `len` reads;
// `valid` must be valid for a write.
enum RpStatus rp_verify(const struct RpGraph *g, const uint8_t *roles, size_t len, bool *valid);

// Static description of a status code.
const char *rp_status_message(enum RpStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ROLEPRISM_H */
