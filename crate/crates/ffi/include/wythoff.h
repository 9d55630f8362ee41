/* C interface to the wythoff analysis engine.
 *
 * Written by hand and kept in sync with src/lib.rs by tests/capi.rs.
 *
 * Every fallible function returns a WYTHOFF_* status code and writes its
 * result through out-pointers, which are modified only on WYTHOFF_OK.
 * Handles and strings must be released with the matching *_free function.
 */

#ifndef WYTHOFF_H
#define WYTHOFF_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
#define WYTHOFF_OK 0
#define WYTHOFF_ERR_RANGE 1          /* input outside the exact or table range */
#define WYTHOFF_ERR_UNSUPPORTED 2    /* operation undefined for this game */
#define WYTHOFF_ERR_ALLOC 3          /* table allocation failed */
#define WYTHOFF_ERR_NULL_ARGUMENT 4  /* required pointer was NULL */
#define WYTHOFF_ERR_CONFIG 5         /* bad game id or band limits */
#define WYTHOFF_ERR_PANIC 6          /* internal failure caught at the boundary */

/* Game ids. */
#define WYTHOFF_GAME_WYTHOFF 0
#define WYTHOFF_GAME_R_WYTHOFF 1
#define WYTHOFF_GAME_E_WYTHOFF 2

/* Beatty sequence kinds. */
#define WYTHOFF_SEQ_A 0
#define WYTHOFF_SEQ_B 1

/* Opaque Sprague-Grundy table handle. */
typedef struct WythoffTable WythoffTable;

/* Golden-ratio Beatty sequences, exact integer arithmetic. */
int wythoff_beatty_a(uint64_t n, uint64_t *out);
int wythoff_beatty_b(uint64_t n, uint64_t *out);

/* Unique (kind, index) of a positive integer in the two sequences. */
int wythoff_classify(uint64_t v, int *out_kind, uint64_t *out_index);

/* 1 if (a, b) is a losing position (shared by all three games), else 0. */
int wythoff_is_p_position(uint64_t a, uint64_t b, int *out);

/* Table construction: square over 0 <= a <= b <= bound, or a band with
 * a <= a_max and a <= b <= b_max. The handle is owned by the caller. */
int wythoff_table_build(int game, uint64_t bound, WythoffTable **out);
int wythoff_table_build_band(int game, uint64_t a_max, uint64_t b_max,
                             WythoffTable **out);
void wythoff_table_free(WythoffTable *table);

/* O(1) value lookup; accepts either pile order. */
int wythoff_table_grundy(const WythoffTable *table, uint64_t a, uint64_t b,
                         uint32_t *out);

/* Stored limits of a handle. */
int wythoff_table_limits(const WythoffTable *table, uint64_t *out_a_max,
                         uint64_t *out_b_max);

/* CSV export ("a,b,g" header, one canonical cell per line). The returned
 * string is NUL-terminated and owned by the caller. */
int wythoff_table_csv(const WythoffTable *table, char **out);
void wythoff_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* WYTHOFF_H */
