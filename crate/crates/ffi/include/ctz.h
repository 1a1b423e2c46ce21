#ifndef CTZ_H
#define CTZ_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Order method selector for [`ct_product_order`].
typedef enum CtMethod {
  CT_METHOD_FINITE = 0,
  CT_METHOD_GRAPH = 1,
  CT_METHOD_TRACE = 2,
} CtMethod;

// Certification level of a computed order.
typedef enum CtOrderStatus {
  CT_ORDER_STATUS_EXACT = 0,
  CT_ORDER_STATUS_WINDOW_EXACT = 1,
  CT_ORDER_STATUS_UNKNOWN = 2,
} CtOrderStatus;

// Status code of every fallible call.
typedef enum CtStatus {
  CT_STATUS_OK = 0,
  CT_STATUS_NULL_POINTER = 1,
  CT_STATUS_PARSE = 2,
  CT_STATUS_INVALID_ARGUMENT = 3,
  CT_STATUS_NOT_HORIZONTAL = 4,
  CT_STATUS_OVERFLOW = 5,
  CT_STATUS_RESOURCE_LIMIT = 6,
  // A mathematical invariant failed (unexpected component shape).
  CT_STATUS_INVARIANT = 7,
  // Unclassified failure, including a caught panic.
  CT_STATUS_INTERNAL = 8,
} CtStatus;

// Opaque permutation group, held as a stabilizer chain.
typedef struct CtGroup CtGroup;

// Opaque permutation of `{0, ..., degree-1}`.
typedef struct CtPermutation CtPermutation;

// Opaque class transposition.
typedef struct CtTransposition CtTransposition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread, or NULL. Release with
// [`ct_string_free`].
char *ct_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void ct_string_free(char *s);

// Parses `"r1(m1),r2(m2)"`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum CtStatus ct_transposition_parse(const char *text, struct CtTransposition **out);

// # Safety
// `t` must be NULL or a handle from [`ct_transposition_parse`], not yet freed.
void ct_transposition_free(struct CtTransposition *t);

// Image of `n`; fails with `Overflow` outside the i64 range.
//
// # Safety
// `t` must be a live handle; `out` must be writable.
enum CtStatus ct_transposition_apply(const struct CtTransposition *t, int64_t n, int64_t *out);

// 1 for equal moduli, 0 otherwise (also for NULL).
//
// # Safety
// `t` must be NULL or a live handle.
int32_t ct_transposition_is_horizontal(const struct CtTransposition *t);

// Canonical text form, or NULL for a NULL handle.
//
// # Safety
// `t` must be NULL or a live handle.
char *ct_transposition_to_string(const struct CtTransposition *t);

// Order of `t1·t2`. When the status comes back `Unknown`, `order` receives 0.
// Fails with `Overflow` if the order does not fit in 64 bits.
//
// # Safety
// Handles must be live; `order` and `status` must be writable.
enum CtStatus ct_product_order(const struct CtTransposition *t1,
                               const struct CtTransposition *t2,
                               enum CtMethod m,
                               uintptr_t budget,
                               uint64_t *order,
                               enum CtOrderStatus *status);

// Full order report as JSON.
//
// # Safety
// Handles must be live; `out` must be writable.
enum CtStatus ct_product_order_json(const struct CtTransposition *t1,
                                    const struct CtTransposition *t2,
                                    enum CtMethod m,
                                    uintptr_t budget,
                                    char **out);

// Product (left to right) of horizontal transpositions reduced modulo the
// lcm of their moduli.
//
// # Safety
// `ts` must point to `len` live handles; `out` must be writable.
enum CtStatus ct_horizontal_product(const struct CtTransposition *const *ts,
                                    uintptr_t len,
                                    struct CtPermutation **out);

// Parses cycle notation such as `"(0,1)(2,3)"` on `{0, ..., degree-1}`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum CtStatus ct_permutation_parse(const char *text, uintptr_t degree, struct CtPermutation **out);

// # Safety
// `p` must be NULL or a permutation handle not yet freed.
void ct_permutation_free(struct CtPermutation *p);

// Degree, or 0 for NULL.
//
// # Safety
// `p` must be NULL or a live handle.
uintptr_t ct_permutation_degree(const struct CtPermutation *p);

// # Safety
// `p` must be a live handle; `out` must be writable.
enum CtStatus ct_permutation_image(const struct CtPermutation *p, uintptr_t x, uintptr_t *out);

// Canonical cycle structure as
// `{"degree":..,"cycles":[[..]],"fixed":[..],"order":".."}`.
//
// # Safety
// `p` must be NULL or a live handle.
char *ct_permutation_cycles_json(const struct CtPermutation *p);

// Order in decimal.
//
// # Safety
// `p` must be NULL or a live handle.
char *ct_permutation_order_string(const struct CtPermutation *p);

// `⟨CT_k : k in ks⟩` acting on residues modulo `degree` (0: lcm of `ks`).
// `full` selects all C(k,2) generators per k instead of adjacent ones.
//
// # Safety
// `ks` must point to `len` values; `out` must be writable.
enum CtStatus ct_group_from_ctk(const uintptr_t *ks,
                                uintptr_t len,
                                uintptr_t degree,
                                bool full,
                                uintptr_t max_degree,
                                struct CtGroup **out);

// # Safety
// `g` must be NULL or a group handle not yet freed.
void ct_group_free(struct CtGroup *g);

// Group order in decimal.
//
// # Safety
// `g` must be NULL or a live handle.
char *ct_group_order_string(const struct CtGroup *g);

// Membership test; `out` receives 1 or 0.
//
// # Safety
// Handles must be live; `out` must be writable.
enum CtStatus ct_group_contains(const struct CtGroup *g,
                                const struct CtPermutation *p,
                                int32_t *out);

// `|⟨CT_2, ..., CT_k⟩|` against `N!` as JSON
// `{"k":..,"N":..,"order":"..","n_factorial":"..","equal":..}`.
//
// # Safety
// `out` must be writable.
enum CtStatus ct_conjecture_json(uintptr_t k, uintptr_t max_degree, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CTZ_H */
