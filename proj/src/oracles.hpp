#ifndef GNOMON_ORACLES_HPP
#define GNOMON_ORACLES_HPP

#include "bigint.hpp"
#include "construction.hpp"

namespace gnomon {

// A rational point on the unit circle, both fractions in lowest terms.
struct RationalPoint {
    Int x_num, x_den, y_num, y_den;

    bool operator==(const RationalPoint&) const = default;
};

// Classical generators, kept independent of the generating-square
// construction so they can serve as cross-checks.

// (m^2 - n^2, 2mn, m^2 + n^2) over a validated MnPair.
PrimitiveTriple euclid_triple(const MnPair& mn);

// (2k + 1, 2k(k + 1), 2k(k + 1) + 1); hypotenuse and even leg are
// consecutive. Throws Error(out_of_range) for k < 1.
PrimitiveTriple pythagoras_family(const Int& k);

// (m^2 - 1, 2m, m^2 + 1) for even m >= 2; hypotenuse and odd leg are
// consecutive odd numbers. Odd m would not be primitive and is rejected
// with Error(out_of_range).
PrimitiveTriple plato_family(const Int& m);

// ((m^2 - n^2)/(m^2 + n^2), 2mn/(m^2 + n^2)) on x^2 + y^2 = 1.
RationalPoint rational_point(const MnPair& mn);

} // namespace gnomon

#endif
