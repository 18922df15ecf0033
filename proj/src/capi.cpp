// extern "C" surface of libgnomon. Exceptions from the core are caught
// here and mapped onto gnomon_status; the failure text is kept per
// thread for gnomon_last_error.

#include "gnomon/gnomon.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "construction.hpp"
#include "error.hpp"
#include "numtheory.hpp"
#include "oracles.hpp"
#include "render.hpp"

using namespace gnomon;

struct gnomon_factorization {
    Factorization f;
};

struct gnomon_record {
    JoinedRecord r;
};

struct gnomon_record_list {
    std::vector<gnomon_record> records;
};

struct gnomon_enumerator {
    SideEnumerator en;
    gnomon_record current;
};

struct gnomon_triple_list {
    std::vector<TripleU64> triples;
};

struct gnomon_decomposition {
    GnomonDecomposition d;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gnomon_status status_of(ErrorCode code) {
    switch (code) {
    case ErrorCode::odd_input: return GNOMON_ERR_ODD_INPUT;
    case ErrorCode::out_of_range: return GNOMON_ERR_OUT_OF_RANGE;
    case ErrorCode::invalid_parameters: return GNOMON_ERR_INVALID_PARAMETERS;
    case ErrorCode::parse: return GNOMON_ERR_PARSE;
    case ErrorCode::index_out_of_range: return GNOMON_ERR_INDEX;
    case ErrorCode::scale_overflow: return GNOMON_ERR_SCALE_OVERFLOW;
    case ErrorCode::overflow: return GNOMON_ERR_OVERFLOW;
    case ErrorCode::io: return GNOMON_ERR_IO;
    }
    return GNOMON_ERR_UNKNOWN;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
gnomon_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return GNOMON_ERR_UNKNOWN;
    } catch (...) {
        t_last_error = "unknown error";
        return GNOMON_ERR_UNKNOWN;
    }
}

const Int& record_field(const JoinedRecord& r, gnomon_field field) {
    switch (field) {
    case GNOMON_FIELD_S: return r.s;
    case GNOMON_FIELD_T: return r.t;
    case GNOMON_FIELD_L: return r.l;
    case GNOMON_FIELD_M: return r.m;
    case GNOMON_FIELD_N: return r.n;
    case GNOMON_FIELD_X: return r.x;
    case GNOMON_FIELD_Y: return r.y;
    case GNOMON_FIELD_Z: return r.z;
    }
    throw Error(ErrorCode::invalid_parameters, "unknown record field");
}

} // namespace

extern "C" {

const char* gnomon_status_name(gnomon_status status) {
    switch (status) {
    case GNOMON_OK: return "ok";
    case GNOMON_END: return "end";
    case GNOMON_ERR_ODD_INPUT: return "odd input";
    case GNOMON_ERR_OUT_OF_RANGE: return "out of range";
    case GNOMON_ERR_INVALID_PARAMETERS: return "invalid parameters";
    case GNOMON_ERR_PARSE: return "parse error";
    case GNOMON_ERR_INDEX: return "index out of range";
    case GNOMON_ERR_SCALE_OVERFLOW: return "scale overflow";
    case GNOMON_ERR_OVERFLOW: return "overflow";
    case GNOMON_ERR_IO: return "i/o error";
    case GNOMON_ERR_UNKNOWN: return "unknown error";
    }
    return "invalid status";
}

const char* gnomon_last_error(void) { return t_last_error.c_str(); }

void gnomon_string_free(char* s) { std::free(s); }

const char* gnomon_version(void) { return "1.0.0"; }

/* ---- factorization ------------------------------------------------ */

gnomon_status gnomon_factor_even_side(const char* side_decimal, gnomon_factorization** out) {
    return guarded([&]() {
        *out = new gnomon_factorization{factor_even_side(parse_natural(side_decimal))};
        return GNOMON_OK;
    });
}

uint64_t gnomon_factorization_two_exponent(const gnomon_factorization* f) {
    return f->f.two_exponent;
}

size_t gnomon_factorization_prime_count(const gnomon_factorization* f) {
    return f->f.odd_primes.size();
}

char* gnomon_factorization_prime(const gnomon_factorization* f, size_t i) {
    if (i >= f->f.odd_primes.size())
        return nullptr;
    return dup_string(to_decimal(f->f.odd_primes[i].prime));
}

uint64_t gnomon_factorization_exponent(const gnomon_factorization* f, size_t i) {
    if (i >= f->f.odd_primes.size())
        return 0;
    return f->f.odd_primes[i].exponent;
}

void gnomon_factorization_free(gnomon_factorization* f) { delete f; }

gnomon_status gnomon_count_partitions(const char* side_decimal, char** count_out) {
    return guarded([&]() {
        const Factorization f = factor_even_side(parse_natural(side_decimal));
        *count_out = dup_string(to_decimal(count_partitions(f)));
        return GNOMON_OK;
    });
}

gnomon_status gnomon_gcd(const char* a_decimal, const char* b_decimal, char** out) {
    return guarded([&]() {
        *out = dup_string(to_decimal(gcd(parse_natural(a_decimal), parse_natural(b_decimal))));
        return GNOMON_OK;
    });
}

gnomon_status gnomon_ring_width(const char* side_decimal, char** out) {
    return guarded([&]() {
        *out = dup_string(to_decimal(gnomon::gnomon_ring_width(parse_natural(side_decimal))));
        return GNOMON_OK;
    });
}

/* ---- records ------------------------------------------------------ */

gnomon_status gnomon_record_u64(const gnomon_record* rec, gnomon_field field, uint64_t* out) {
    return guarded([&]() {
        *out = to_u64(record_field(rec->r, field));
        return GNOMON_OK;
    });
}

char* gnomon_record_str(const gnomon_record* rec, gnomon_field field) {
    if (field < GNOMON_FIELD_S || field > GNOMON_FIELD_Z)
        return nullptr;
    return dup_string(to_decimal(record_field(rec->r, field)));
}

void gnomon_record_free(gnomon_record* rec) { delete rec; }

gnomon_status gnomon_records_for_side(const char* side_decimal, gnomon_record_list** out) {
    return guarded([&]() {
        const Factorization f = factor_even_side(parse_natural(side_decimal));
        auto list = std::make_unique<gnomon_record_list>();
        for (const Partition& p : enumerate_partitions(f))
            list->records.push_back({JoinedRecord::from_partition(p)});
        *out = list.release();
        return GNOMON_OK;
    });
}

size_t gnomon_record_list_size(const gnomon_record_list* list) { return list->records.size(); }

const gnomon_record* gnomon_record_list_at(const gnomon_record_list* list, size_t i) {
    if (i >= list->records.size())
        return nullptr;
    return &list->records[i];
}

void gnomon_record_list_free(gnomon_record_list* list) { delete list; }

/* ---- streaming enumerator ----------------------------------------- */

gnomon_status gnomon_enumerator_open(gnomon_bound_kind kind, const char* bound_decimal,
                                     gnomon_enumerator** out) {
    return guarded([&]() {
        if (kind != GNOMON_BOUND_SIDE && kind != GNOMON_BOUND_HYPOTENUSE)
            throw Error(ErrorCode::invalid_parameters, "unknown bound kind");
        const auto bound = kind == GNOMON_BOUND_SIDE ? SideEnumerator::Bound::side
                                                     : SideEnumerator::Bound::hypotenuse;
        *out = new gnomon_enumerator{SideEnumerator(bound, parse_natural(bound_decimal)), {}};
        return GNOMON_OK;
    });
}

gnomon_status gnomon_enumerator_next(gnomon_enumerator* e, const gnomon_record** rec) {
    return guarded([&]() {
        auto next = e->en.next();
        if (!next)
            return GNOMON_END;
        e->current.r = std::move(*next);
        *rec = &e->current;
        return GNOMON_OK;
    });
}

void gnomon_enumerator_free(gnomon_enumerator* e) { delete e; }

/* ---- families ------------------------------------------------------ */

namespace {

gnomon_record* joined_from_mn(const MnPair& mn) {
    const Partition p = partition_from_mn(mn);
    return new gnomon_record{JoinedRecord::from_partition(p)};
}

} // namespace

gnomon_status gnomon_euclid_record(const char* m_decimal, const char* n_decimal,
                                   gnomon_record** out) {
    return guarded([&]() {
        const MnPair mn = MnPair::create(parse_natural(m_decimal), parse_natural(n_decimal));
        gnomon_record* rec = joined_from_mn(mn);
        const PrimitiveTriple oracle = euclid_triple(mn);
        if (rec->r.x != oracle.x || rec->r.y != oracle.y || rec->r.z != oracle.z) {
            delete rec;
            throw Error(ErrorCode::invalid_parameters, "construction disagrees with Euclid");
        }
        *out = rec;
        return GNOMON_OK;
    });
}

gnomon_status gnomon_pythagoras_record(const char* k_decimal, gnomon_record** out) {
    return guarded([&]() {
        const Int k = parse_natural(k_decimal);
        const PrimitiveTriple oracle = pythagoras_family(k); // validates k >= 1
        gnomon_record* rec = new gnomon_record{
            JoinedRecord::from_partition(Partition::create(k, 1))};
        if (rec->r.x != oracle.x || rec->r.y != oracle.y || rec->r.z != oracle.z) {
            delete rec;
            throw Error(ErrorCode::invalid_parameters, "construction disagrees with Pythagoras");
        }
        *out = rec;
        return GNOMON_OK;
    });
}

gnomon_status gnomon_plato_record(const char* m_decimal, gnomon_record** out) {
    return guarded([&]() {
        const Int m = parse_natural(m_decimal);
        const PrimitiveTriple oracle = plato_family(m); // validates even m >= 2
        gnomon_record* rec = new gnomon_record{
            JoinedRecord::from_partition(Partition::create(1, m - 1))};
        if (rec->r.x != oracle.x || rec->r.y != oracle.y || rec->r.z != oracle.z) {
            delete rec;
            throw Error(ErrorCode::invalid_parameters, "construction disagrees with Plato");
        }
        *out = rec;
        return GNOMON_OK;
    });
}

gnomon_status gnomon_rational_point(const char* m_decimal, const char* n_decimal, char** x_num,
                                    char** x_den, char** y_num, char** y_den) {
    return guarded([&]() {
        const MnPair mn = MnPair::create(parse_natural(m_decimal), parse_natural(n_decimal));
        const RationalPoint p = rational_point(mn);
        *x_num = dup_string(to_decimal(p.x_num));
        *x_den = dup_string(to_decimal(p.x_den));
        *y_num = dup_string(to_decimal(p.y_num));
        *y_den = dup_string(to_decimal(p.y_den));
        return GNOMON_OK;
    });
}

/* ---- brute force ---------------------------------------------------- */

gnomon_status gnomon_brute_force_triples(uint64_t z_max, gnomon_triple_list** out) {
    return guarded([&]() {
        *out = new gnomon_triple_list{brute_force_primitive_triples(z_max)};
        return GNOMON_OK;
    });
}

size_t gnomon_triple_list_size(const gnomon_triple_list* list) { return list->triples.size(); }

gnomon_status gnomon_triple_list_get(const gnomon_triple_list* list, size_t i, uint64_t* x,
                                     uint64_t* y, uint64_t* z) {
    return guarded([&]() {
        if (i >= list->triples.size())
            throw Error(ErrorCode::index_out_of_range, "triple index out of range");
        *x = list->triples[i].x;
        *y = list->triples[i].y;
        *z = list->triples[i].z;
        return GNOMON_OK;
    });
}

void gnomon_triple_list_free(gnomon_triple_list* list) { delete list; }

/* ---- rendering ------------------------------------------------------ */

gnomon_status gnomon_render(const char* side_decimal, uint64_t index, gnomon_stage stage,
                            uint64_t scale_num, uint64_t scale_den, int labels, char** svg_out) {
    return guarded([&]() {
        Stage st;
        switch (stage) {
        case GNOMON_STAGE_SQUARE_SEQUENCE: st = Stage::square_sequence; break;
        case GNOMON_STAGE_GNOMON_T: st = Stage::gnomon_t; break;
        case GNOMON_STAGE_GNOMON_U: st = Stage::gnomon_u; break;
        default: throw Error(ErrorCode::invalid_parameters, "unknown stage");
        }
        const Factorization f = factor_even_side(parse_natural(side_decimal));
        const auto partitions = enumerate_partitions(f);
        if (index >= partitions.size())
            throw Error(ErrorCode::index_out_of_range,
                        "partition index " + std::to_string(index) + " out of range; side has " +
                            std::to_string(partitions.size()) + " partitions");
        DiagramSpec spec;
        spec.decomposition = gnomon::decompose(partitions[index]);
        spec.scale_num = scale_num;
        spec.scale_den = scale_den;
        spec.stage = st;
        spec.labels = labels != 0;
        *svg_out = dup_string(render_construction(spec));
        return GNOMON_OK;
    });
}

gnomon_status gnomon_decomposition_create(const char* t_decimal, const char* l_decimal,
                                          gnomon_decomposition** out) {
    return guarded([&]() {
        const Partition p = Partition::create(parse_natural(t_decimal), parse_natural(l_decimal));
        *out = new ::gnomon_decomposition{gnomon::decompose(p)};
        return GNOMON_OK;
    });
}

char* gnomon_decomposition_field(const gnomon_decomposition* d, gnomon_dec_field field) {
    const GnomonDecomposition& g = d->d;
    switch (field) {
    case GNOMON_DEC_S: return dup_string(to_decimal(g.s));
    case GNOMON_DEC_T: return dup_string(to_decimal(g.t));
    case GNOMON_DEC_L: return dup_string(to_decimal(g.l));
    case GNOMON_DEC_Y_SIDE: return dup_string(to_decimal(g.y_side));
    case GNOMON_DEC_THICKNESS: return dup_string(to_decimal(g.gnomon_t_thickness));
    case GNOMON_DEC_U_SIDE: return dup_string(to_decimal(g.gnomon_u_side));
    case GNOMON_DEC_INNER_SIDE: return dup_string(to_decimal(g.inner_side));
    case GNOMON_DEC_RECT_WIDTH: return dup_string(to_decimal(g.rect_width));
    case GNOMON_DEC_RECT_HEIGHT: return dup_string(to_decimal(g.rect_height));
    case GNOMON_DEC_AREA_T: return dup_string(to_decimal(g.area_gnomon_t));
    case GNOMON_DEC_AREA_RECTS: return dup_string(to_decimal(g.area_rectangles));
    case GNOMON_DEC_AREA_U: return dup_string(to_decimal(g.area_gnomon_u));
    }
    return nullptr;
}

void gnomon_decomposition_free(gnomon_decomposition* d) { delete d; }

} // extern "C"
