#ifndef CHOWCALC_H
#define CHOWCALC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ChowcalcCommand {
  CHOWCALC_COMMAND_SEGRE = 0,
  CHOWCALC_COMMAND_FULTON = 1,
  CHOWCALC_COMMAND_CSM = 2,
  CHOWCALC_COMMAND_MILNOR = 3,
  CHOWCALC_COMMAND_EULER = 4,
  CHOWCALC_COMMAND_INVERT_MILNOR = 5,
  CHOWCALC_COMMAND_CHECK_IDENTITIES = 6,
} ChowcalcCommand;

typedef enum ChowcalcFormat {
  CHOWCALC_FORMAT_TEXT = 0,
  CHOWCALC_FORMAT_MACHINE = 1,
} ChowcalcFormat;

// Result code of every fallible call.
typedef enum ChowcalcStatus {
  CHOWCALC_STATUS_OK = 0,
  CHOWCALC_STATUS_NULL_POINTER = 1,
  CHOWCALC_STATUS_INVALID_ARGUMENT = 2,
  CHOWCALC_STATUS_DIMENSION_MISMATCH = 3,
  CHOWCALC_STATUS_AMBIENT_MISMATCH = 4,
  CHOWCALC_STATUS_NOT_INVERTIBLE = 5,
  CHOWCALC_STATUS_PARSE = 6,
  CHOWCALC_STATUS_IO = 7,
  CHOWCALC_STATUS_UNSUPPORTED = 8,
  CHOWCALC_STATUS_PANIC = 9,
} ChowcalcStatus;

// Opaque class in `A_*(P^n)`.
typedef struct ChowcalcClass ChowcalcClass;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL after a
// successful one. The pointer stays valid until the next call into the
// library from the same thread.
const char *chowcalc_last_error(void);

// Releases a string returned by the library. NULL is ignored.
//
// # Safety
// `s` must come from this library and must not be used afterwards.
void chowcalc_string_free(char *s);

// Releases a class handle. NULL is ignored.
//
// # Safety
// `class` must come from this library and must not be used afterwards.
void chowcalc_class_free(struct ChowcalcClass *class_);

// Parses comma-separated rationals by codimension (`"0,0,2,-4"`,
// `"1/2,3"`) into a class in `A_*(P^dim)`. Missing entries are zero.
//
// # Safety
// `csv` must be a NUL-terminated string; `out` must be writable.
enum ChowcalcStatus chowcalc_class_parse(const char *csv, size_t dim, struct ChowcalcClass **out);

// Builds a class from `len` integer coefficients by codimension.
//
// # Safety
// `coeffs` must point to `len` readable values; `out` must be writable.
enum ChowcalcStatus chowcalc_class_from_ints(const int64_t *coeffs,
                                             size_t len,
                                             size_t dim,
                                             struct ChowcalcClass **out);

// Ambient dimension `n` of the class, or 0 for NULL.
//
// # Safety
// `class` must be NULL or a live handle.
size_t chowcalc_class_dim(const struct ChowcalcClass *class_);

// Writes `1` to `out` when the classes are equal, `0` otherwise.
//
// # Safety
// Both handles must be live; `out` must be writable.
enum ChowcalcStatus chowcalc_class_equal(const struct ChowcalcClass *a,
                                         const struct ChowcalcClass *b,
                                         bool *out);

// The codimension-`codim` coefficient as `"p"` or `"p/q"`.
//
// # Safety
// `class` must be live; `out` must be writable.
enum ChowcalcStatus chowcalc_class_coefficient(const struct ChowcalcClass *class_,
                                               size_t codim,
                                               char **out);

// Renders a class: `Text` gives `2[P^2] - 4[P^1]`, `Machine` the
// comma-separated coefficients by codimension.
//
// # Safety
// `class` must be live; `out` must be writable.
enum ChowcalcStatus chowcalc_class_render(const struct ChowcalcClass *class_,
                                          enum ChowcalcFormat format,
                                          char **out);

// Sign change `(-1)^i` on the codimension-`i` part.
//
// # Safety
// `class` must be live; `out` must be writable.
enum ChowcalcStatus chowcalc_dual(const struct ChowcalcClass *class_, struct ChowcalcClass **out);

// Tensor of a class with the line bundle `O(degree)`.
//
// # Safety
// `class` must be live; `out` must be writable.
enum ChowcalcStatus chowcalc_tensor_line(const struct ChowcalcClass *class_,
                                         int64_t degree,
                                         struct ChowcalcClass **out);

// Segre class of a reduced linear `P^k` in `P^dim`.
//
// # Safety
// `out` must be writable.
enum ChowcalcStatus chowcalc_segre_linear_subspace(size_t k,
                                                   size_t dim,
                                                   struct ChowcalcClass **out);

// Segre class of the complete intersection of hypersurfaces of the given
// degrees in `P^dim`.
//
// # Safety
// `degrees` must point to `len` readable values; `out` must be writable.
enum ChowcalcStatus chowcalc_segre_ci(const uint32_t *degrees,
                                      size_t len,
                                      size_t dim,
                                      struct ChowcalcClass **out);

// Fulton class of the complete intersection of the given degrees.
//
// # Safety
// `degrees` must point to `len` readable values; `out` must be writable.
enum ChowcalcStatus chowcalc_fulton_ci(const uint32_t *degrees,
                                       size_t len,
                                       size_t dim,
                                       struct ChowcalcClass **out);

// Chern-Schwartz-MacPherson class of a degree-`degree` hypersurface whose
// singular scheme has Segre class `singular_segre`.
//
// # Safety
// `singular_segre` must be live; `out` must be writable.
enum ChowcalcStatus chowcalc_csm_hypersurface(uint32_t degree,
                                              const struct ChowcalcClass *singular_segre,
                                              struct ChowcalcClass **out);

// Milnor class of a degree-`degree` hypersurface.
//
// # Safety
// `singular_segre` must be live; `out` must be writable.
enum ChowcalcStatus chowcalc_milnor_hypersurface(uint32_t degree,
                                                 const struct ChowcalcClass *singular_segre,
                                                 struct ChowcalcClass **out);

// Milnor class of the complete intersection of smooth hypersurfaces of
// degrees `smooth_degrees` with a last hypersurface of degree
// `last_degree`. With `signed` false the raw class is returned; otherwise
// it is multiplied by `(-1)^(k-1)` for `k` hypersurfaces, matching
// `c_SM - c_F`.
//
// # Safety
// `smooth_degrees` must point to `len` readable values; `singular_segre`
// must be live; `out` must be writable.
enum ChowcalcStatus chowcalc_milnor_ci(const uint32_t *smooth_degrees,
                                       size_t len,
                                       uint32_t last_degree,
                                       const struct ChowcalcClass *singular_segre,
                                       bool signed_,
                                       struct ChowcalcClass **out);

// Recovers the Segre class of the singular scheme of a degree-`degree`
// hypersurface from its Milnor class.
//
// # Safety
// `milnor` must be live; `out` must be writable.
enum ChowcalcStatus chowcalc_invert_milnor(const struct ChowcalcClass *milnor,
                                           uint32_t degree,
                                           struct ChowcalcClass **out);

// Degree of the dimension-zero part of a CSM class, as `"p"` or `"p/q"`.
//
// # Safety
// `csm` must be live; `out` must be writable.
enum ChowcalcStatus chowcalc_euler(const struct ChowcalcClass *csm, char **out);

// Checks that `text` parses as an exact rational `p` or `p/q`.
//
// # Safety
// `text` must be a NUL-terminated string.
enum ChowcalcStatus chowcalc_rational_validate(const char *text);

// Runs a command on a scenario given as TOML text and writes the rendered
// report, byte-identical to the CLI output. `all_flags_hold` (optional)
// receives whether every identity flag in the report is true.
//
// # Safety
// `toml` must be a NUL-terminated string; `out` must be writable;
// `all_flags_hold` must be NULL or writable.
enum ChowcalcStatus chowcalc_scenario_run(const char *toml,
                                          enum ChowcalcCommand command,
                                          enum ChowcalcFormat format,
                                          char **out,
                                          bool *all_flags_hold);

// Runs the built-in golden checks; writes the report and whether every
// item passed.
//
// # Safety
// `out` must be writable; `all_passed` must be NULL or writable.
enum ChowcalcStatus chowcalc_verify_golden(char **out, bool *all_passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHOWCALC_H */
