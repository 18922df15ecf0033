/*
 * gnomon — primitive Pythagorean triples from even generating squares.
 *
 * C API of libgnomon. All handles are opaque; every function that can
 * fail returns a gnomon_status. Integers cross this boundary either as
 * decimal strings (arbitrary precision) or as uint64_t through getters
 * that report GNOMON_ERR_OVERFLOW when a value does not fit.
 *
 * Strings returned as char* are heap-allocated; release them with
 * gnomon_string_free. Handles are released with their *_free function.
 */
#ifndef GNOMON_H
#define GNOMON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gnomon_status {
    GNOMON_OK = 0,
    GNOMON_END = 1, /* enumerator exhausted; not an error */
    GNOMON_ERR_ODD_INPUT = 2,
    GNOMON_ERR_OUT_OF_RANGE = 3,
    GNOMON_ERR_INVALID_PARAMETERS = 4,
    GNOMON_ERR_PARSE = 5,
    GNOMON_ERR_INDEX = 6,
    GNOMON_ERR_SCALE_OVERFLOW = 7,
    GNOMON_ERR_OVERFLOW = 8,
    GNOMON_ERR_IO = 9,
    GNOMON_ERR_UNKNOWN = 10
} gnomon_status;

const char* gnomon_status_name(gnomon_status status);

/* Message describing the most recent failure on the calling thread. */
const char* gnomon_last_error(void);

void gnomon_string_free(char* s);

const char* gnomon_version(void);

/* ------------------------------------------------------------------ */
/* Factorization of an even side: S = 2^a0 * p1^e1 * ... * pr^er       */
/* ------------------------------------------------------------------ */

typedef struct gnomon_factorization gnomon_factorization;

gnomon_status gnomon_factor_even_side(const char* side_decimal, gnomon_factorization** out);
uint64_t gnomon_factorization_two_exponent(const gnomon_factorization* f);
size_t gnomon_factorization_prime_count(const gnomon_factorization* f);
/* Decimal string of the i-th odd prime (ascending); NULL if i is out of range. */
char* gnomon_factorization_prime(const gnomon_factorization* f, size_t i);
uint64_t gnomon_factorization_exponent(const gnomon_factorization* f, size_t i);
void gnomon_factorization_free(gnomon_factorization* f);

/* Number of partitions of the side: L(S) = 2^r. */
gnomon_status gnomon_count_partitions(const char* side_decimal, char** count_out);

gnomon_status gnomon_gcd(const char* a_decimal, const char* b_decimal, char** out);

/* Area of the unit-step gnomon on a square of the given side: 2*side + 1. */
gnomon_status gnomon_ring_width(const char* side_decimal, char** out);

/* ------------------------------------------------------------------ */
/* Joined records: one row (s, t, l, m, n, x, y, z) per partition      */
/* ------------------------------------------------------------------ */

typedef struct gnomon_record gnomon_record;

typedef enum gnomon_field {
    GNOMON_FIELD_S = 0,
    GNOMON_FIELD_T = 1,
    GNOMON_FIELD_L = 2,
    GNOMON_FIELD_M = 3,
    GNOMON_FIELD_N = 4,
    GNOMON_FIELD_X = 5,
    GNOMON_FIELD_Y = 6,
    GNOMON_FIELD_Z = 7
} gnomon_field;

#define GNOMON_FIELD_COUNT 8

/* GNOMON_ERR_OVERFLOW when the value does not fit in 64 bits. */
gnomon_status gnomon_record_u64(const gnomon_record* rec, gnomon_field field, uint64_t* out);
char* gnomon_record_str(const gnomon_record* rec, gnomon_field field);
void gnomon_record_free(gnomon_record* rec);

/* All partitions of one even side, in subset-bitmask order. */
typedef struct gnomon_record_list gnomon_record_list;

gnomon_status gnomon_records_for_side(const char* side_decimal, gnomon_record_list** out);
size_t gnomon_record_list_size(const gnomon_record_list* list);
/* Borrowed pointer, valid while the list lives; NULL if i is out of range. */
const gnomon_record* gnomon_record_list_at(const gnomon_record_list* list, size_t i);
void gnomon_record_list_free(gnomon_record_list* list);

/* ------------------------------------------------------------------ */
/* Streaming enumeration over even sides s = 2, 4, 6, ...              */
/* ------------------------------------------------------------------ */

typedef enum gnomon_bound_kind {
    GNOMON_BOUND_SIDE = 0,       /* all partitions of every even s <= bound */
    GNOMON_BOUND_HYPOTENUSE = 1  /* scan s <= 2*bound, keep records with z <= bound */
} gnomon_bound_kind;

typedef struct gnomon_enumerator gnomon_enumerator;

gnomon_status gnomon_enumerator_open(gnomon_bound_kind kind, const char* bound_decimal,
                                     gnomon_enumerator** out);
/* GNOMON_OK sets *rec (borrowed; valid until the next call on this
 * enumerator); GNOMON_END signals exhaustion. */
gnomon_status gnomon_enumerator_next(gnomon_enumerator* e, const gnomon_record** rec);
void gnomon_enumerator_free(gnomon_enumerator* e);

/* ------------------------------------------------------------------ */
/* Classical family generators (joined with their partition data)      */
/* ------------------------------------------------------------------ */

/* Euclid: (m^2 - n^2, 2mn, m^2 + n^2) for coprime m > n of opposite
 * parity; rejects anything else with GNOMON_ERR_INVALID_PARAMETERS. */
gnomon_status gnomon_euclid_record(const char* m_decimal, const char* n_decimal,
                                   gnomon_record** out);
/* Pythagoras: (2k+1, 2k(k+1), 2k(k+1)+1), k >= 1. */
gnomon_status gnomon_pythagoras_record(const char* k_decimal, gnomon_record** out);
/* Plato: (m^2 - 1, 2m, m^2 + 1), even m >= 2. */
gnomon_status gnomon_plato_record(const char* m_decimal, gnomon_record** out);

/* Rational point on the unit circle for the same (m, n) domain; the four
 * outputs are decimal strings of the two fractions in lowest terms. */
gnomon_status gnomon_rational_point(const char* m_decimal, const char* n_decimal, char** x_num,
                                    char** x_den, char** y_num, char** y_den);

/* ------------------------------------------------------------------ */
/* Exhaustive brute-force oracle                                       */
/* ------------------------------------------------------------------ */

typedef struct gnomon_triple_list gnomon_triple_list;

/* Every primitive triple with z <= z_max, found by scanning leg pairs
 * directly; sorted by (z, x) with the odd leg first. */
gnomon_status gnomon_brute_force_triples(uint64_t z_max, gnomon_triple_list** out);
size_t gnomon_triple_list_size(const gnomon_triple_list* list);
gnomon_status gnomon_triple_list_get(const gnomon_triple_list* list, size_t i, uint64_t* x,
                                     uint64_t* y, uint64_t* z);
void gnomon_triple_list_free(gnomon_triple_list* list);

/* ------------------------------------------------------------------ */
/* SVG rendering of the construction                                   */
/* ------------------------------------------------------------------ */

typedef enum gnomon_stage {
    GNOMON_STAGE_SQUARE_SEQUENCE = 0,
    GNOMON_STAGE_GNOMON_T = 1,
    GNOMON_STAGE_GNOMON_U = 2
} gnomon_stage;

/* Renders partition #index (subset-bitmask order) of the given even
 * side. scale_num/scale_den are drawing units per integer unit. The SVG
 * text is returned through svg_out. */
gnomon_status gnomon_render(const char* side_decimal, uint64_t index, gnomon_stage stage,
                            uint64_t scale_num, uint64_t scale_den, int labels, char** svg_out);

/* Decomposition quantities for one partition, as decimal strings. */
typedef enum gnomon_dec_field {
    GNOMON_DEC_S = 0,
    GNOMON_DEC_T = 1,
    GNOMON_DEC_L = 2,
    GNOMON_DEC_Y_SIDE = 3,
    GNOMON_DEC_THICKNESS = 4,   /* 2t^2 */
    GNOMON_DEC_U_SIDE = 5,      /* z */
    GNOMON_DEC_INNER_SIDE = 6,  /* x */
    GNOMON_DEC_RECT_WIDTH = 7,  /* 2t^2 */
    GNOMON_DEC_RECT_HEIGHT = 8, /* l^2 */
    GNOMON_DEC_AREA_T = 9,      /* y^2 - s^2 */
    GNOMON_DEC_AREA_RECTS = 10, /* s^2 */
    GNOMON_DEC_AREA_U = 11      /* y^2 */
} gnomon_dec_field;

typedef struct gnomon_decomposition gnomon_decomposition;

gnomon_status gnomon_decomposition_create(const char* t_decimal, const char* l_decimal,
                                          gnomon_decomposition** out);
char* gnomon_decomposition_field(const gnomon_decomposition* d, gnomon_dec_field field);
void gnomon_decomposition_free(gnomon_decomposition* d);

#ifdef __cplusplus
}
#endif

#endif /* GNOMON_H */
