#include "oracles.hpp"

#include "error.hpp"

namespace gnomon {

PrimitiveTriple euclid_triple(const MnPair& mn) {
    const Int m2 = mn.m * mn.m;
    const Int n2 = mn.n * mn.n;
    return PrimitiveTriple::create(m2 - n2, 2 * mn.m * mn.n, m2 + n2);
}

PrimitiveTriple pythagoras_family(const Int& k) {
    if (k < 1)
        throw Error(ErrorCode::out_of_range, "k must be at least 1, got " + to_decimal(k));
    const Int even_leg = 2 * k * (k + 1);
    return PrimitiveTriple::create(2 * k + 1, even_leg, even_leg + 1);
}

PrimitiveTriple plato_family(const Int& m) {
    if (m < 2)
        throw Error(ErrorCode::out_of_range, "m must be at least 2, got " + to_decimal(m));
    if (is_odd(m))
        throw Error(ErrorCode::out_of_range,
                    "m must be even (odd m gives a non-primitive triple), got " + to_decimal(m));
    const Int m2 = m * m;
    return PrimitiveTriple::create(m2 - 1, 2 * m, m2 + 1);
}

RationalPoint rational_point(const MnPair& mn) {
    const PrimitiveTriple t = euclid_triple(mn);
    // Primitivity makes both fractions already lowest-terms
    RationalPoint p{t.x, t.z, t.y, t.z};
    if (gcd(p.x_num, p.x_den) != 1 || gcd(p.y_num, p.y_den) != 1)
        throw Error(ErrorCode::invalid_parameters, "fractions are not in lowest terms");
    return p;
}

} // namespace gnomon
