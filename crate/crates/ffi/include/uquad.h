#ifndef UQUAD_H
#define UQUAD_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result of every fallible call.
typedef enum UqStatus {
  UQ_STATUS_OK = 0,
  UQ_STATUS_NULL_ARGUMENT = 1,
  // Malformed text input or invalid UTF-8.
  UQ_STATUS_PARSE = 2,
  // The family violates a learning-space axiom.
  UQ_STATUS_INVALID_FAMILY = 3,
  // A valid learning space without an st-planar drawing.
  UQ_STATUS_NOT_ST_PLANAR = 4,
  // The drawing fails the upright-quad or dominance checks.
  UQ_STATUS_INVALID_DRAWING = 5,
  // Input exceeds a size limit.
  UQ_STATUS_TOO_LARGE = 6,
  // A buffer or argument has the wrong size or content.
  UQ_STATUS_INVALID_ARGUMENT = 7,
  // A bug in the library; the message describes the panic.
  UQ_STATUS_INTERNAL = 8,
} UqStatus;

// A learning graph together with vertex coordinates.
typedef struct UqDrawing UqDrawing;

// A set family.
typedef struct UqFamily UqFamily;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failed call on this thread, or an empty
// string after a successful one. Valid until the next call on this thread.
const char *uq_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void uq_string_free(char *s);

// Parses a family file.
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum UqStatus uq_family_parse(const char *text, struct UqFamily **out);

// Region family of the arrangement placing element `i` at
// `(i, permutation[i])`, with elements named `a`, `b`, ... and `e26`
// onwards past `z`.
//
// # Safety
// `permutation` must point to `len` readable values (or be null when
// `len` is 0) and `out` must be writable.
enum UqStatus uq_family_from_permutation(const size_t *permutation,
                                         size_t len,
                                         struct UqFamily **out);

// # Safety
// `family` must be null or a handle not yet freed.
void uq_family_free(struct UqFamily *family);

// Number of elements in the universe; 0 for a null handle.
//
// # Safety
// `family` must be null or a live handle.
size_t uq_family_universe_size(const struct UqFamily *family);

// Number of states; 0 for a null handle.
//
// # Safety
// `family` must be null or a live handle.
size_t uq_family_state_count(const struct UqFamily *family);

// `Ok` for a learning space, `InvalidFamily` with the violations listed in
// the error message otherwise.
//
// # Safety
// `family` must be a live handle.
enum UqStatus uq_family_validate(const struct UqFamily *family);

// Writes the family in file format.
//
// # Safety
// `family` must be a live handle and `out` writable.
enum UqStatus uq_family_to_text(const struct UqFamily *family, char **out);

// Fills `x_order` and `y_order` (each of the universe's size) with element
// indices along the two boundary orders. Returns `NotStPlanar` for a
// learning space that has none.
//
// # Safety
// `family` must be a live handle; both buffers must hold `len` writable
// values.
enum UqStatus uq_recognize(const struct UqFamily *family,
                           size_t *x_order,
                           size_t *y_order,
                           size_t len);

// Grid drawing of an st-planar learning space, optionally compacted.
//
// # Safety
// `family` must be a live handle and `out` writable.
enum UqStatus uq_draw(const struct UqFamily *family, bool compacted, struct UqDrawing **out);

// Parses a drawing file. The drawing is not validated; see
// [`uq_drawing_validate`].
//
// # Safety
// `text` must be a NUL-terminated string and `out` writable.
enum UqStatus uq_drawing_parse(const char *text, struct UqDrawing **out);

// # Safety
// `drawing` must be null or a handle not yet freed.
void uq_drawing_free(struct UqDrawing *drawing);

// Number of vertices; 0 for a null handle.
//
// # Safety
// `drawing` must be null or a live handle.
size_t uq_drawing_vertex_count(const struct UqDrawing *drawing);

// Copies vertex coordinates, in the vertex order of the drawing file.
//
// # Safety
// `drawing` must be a live handle; `xs` and `ys` must hold `len` writable
// values.
enum UqStatus uq_drawing_coords(const struct UqDrawing *drawing,
                                int64_t *xs,
                                int64_t *ys,
                                size_t len);

// `Ok` if the drawing passes the upright-quad and dominance checks,
// `InvalidDrawing` with the violations in the error message otherwise.
//
// # Safety
// `drawing` must be a live handle.
enum UqStatus uq_drawing_validate(const struct UqDrawing *drawing);

// Fills `permutation` (of the universe's size) with the canonical
// arrangement permutation of a valid drawing.
//
// # Safety
// `drawing` must be a live handle and `permutation` must hold `len`
// writable values.
enum UqStatus uq_drawing_permutation(const struct UqDrawing *drawing,
                                     size_t *permutation,
                                     size_t len);

// Writes the drawing in file format.
//
// # Safety
// `drawing` must be a live handle and `out` writable.
enum UqStatus uq_drawing_to_text(const struct UqDrawing *drawing, char **out);

// Renders the drawing as SVG with `unit` pixels per grid step.
//
// # Safety
// `drawing` must be a live handle and `out` writable.
enum UqStatus uq_drawing_svg(const struct UqDrawing *drawing,
                             uint32_t unit,
                             bool labels,
                             char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UQUAD_H */
