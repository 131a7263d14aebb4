/* C interface to the freeknot Gauss-diagram library. */

#ifndef FREEKNOT_H
#define FREEKNOT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call. Zero is success.
typedef enum FkStatus {
  FK_OK = 0,
  FK_NULL_POINTER = 1,
  FK_INVALID_UTF8 = 2,
  FK_PARSE_ERROR = 3,
  FK_UNSUPPORTED = 4,
  FK_UNDEFINED = 5,
  FK_PANIC = 6,
} FkStatus;

// Opaque diagram handle.
typedef struct FkDiagram FkDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread. The pointer stays
// valid until the next failing call on the same thread. Never null.
const char *fk_last_error(void);

// Frees a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must have been returned by a function from this library.
void fk_string_free(char *s);

// Parses one diagram line ("long: ..." or "closed: ...") into a handle.
//
// # Safety
// `text` must be a valid NUL-terminated string; `out` must be writable.
enum FkStatus fk_diagram_parse(const char *text, struct FkDiagram **out);

// Releases a diagram handle. Null is a no-op.
//
// # Safety
// `d` must have come from this library and not be freed twice.
void fk_diagram_free(struct FkDiagram *d);

// Writes the diagram in its line form, e.g. "long: A B A B".
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum FkStatus fk_diagram_display(const struct FkDiagram *d, char **out);

// Writes the label-renamed canonical form used for deduplication.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum FkStatus fk_diagram_canonical(const struct FkDiagram *d, char **out);

// # Safety
// `d` must be a live handle; `out` must be writable.
enum FkStatus fk_diagram_chord_count(const struct FkDiagram *d, uintptr_t *out);

// Writes 1 for a closed diagram, 0 for a long one.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum FkStatus fk_diagram_is_closed(const struct FkDiagram *d, int32_t *out);

// The even integer invariant of a long diagram.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum FkStatus fk_invariant_l(const struct FkDiagram *d, int64_t *out);

// Normal form of the phi word of a long diagram, e.g. "b a b a".
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum FkStatus fk_phi_normal_form(const struct FkDiagram *d, char **out);

// Normal form of the psi word of a long diagram.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum FkStatus fk_psi_normal_form(const struct FkDiagram *d, char **out);

// Half the dihedral translation of phi. FkUndefined when the translation
// is odd (not observed in practice) or the diagram is closed.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum FkStatus fk_dihedral_shift(const struct FkDiagram *d, int64_t *out);

// |l| of a closed diagram, stable under basepoint rotation.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum FkStatus fk_closed_l_abs(const struct FkDiagram *d, int64_t *out);

// Lexicographically least psi conjugacy class over all cuts of a closed
// diagram.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum FkStatus fk_closed_canonical_psi(const struct FkDiagram *d, char **out);

// Writes 1 when nonzero |l| rules out a disc filling, else 0.
//
// # Safety
// `d` must be a live handle; `out` must be writable.
enum FkStatus fk_slice_obstructed(const struct FkDiagram *d, int32_t *out);

// Connected sum of two long diagrams into a fresh handle.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum FkStatus fk_connected_sum(const struct FkDiagram *a,
                               const struct FkDiagram *b,
                               struct FkDiagram **out);

// Reduces a word to its normal form. `group` is "g" or "gp"; the word
// uses the letters a, b, b' with optional ^exponents, or "1".
//
// # Safety
// `group` and `word` must be valid NUL-terminated strings; `out` must be
// writable.
enum FkStatus fk_reduce_word(const char *group, const char *word, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FREEKNOT_H */
