#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <numeric>

#include "bigint.hpp"
#include "construction.hpp"
#include "error.hpp"
#include "oracles.hpp"

using namespace gnomon;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a gnomon::Error");
    return ErrorCode::parse;
}

} // namespace

TEST_CASE("euclid_triple: examples and rejection of invalid parameters") {
    CHECK(euclid_triple(MnPair::create(2, 1)) == PrimitiveTriple::create(3, 4, 5));
    CHECK(euclid_triple(MnPair::create(5, 2)) == PrimitiveTriple::create(21, 20, 29));
    CHECK(euclid_triple(MnPair::create(16, 15)) == PrimitiveTriple::create(31, 480, 481));

    // the MnPair constructor guards the whole family's domain
    CHECK(code_of([] { MnPair::create(2, 2); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { MnPair::create(1, 2); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { MnPair::create(5, 3); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { MnPair::create(6, 2); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { MnPair::create(3, 0); }) == ErrorCode::invalid_parameters);
}

TEST_CASE("pythagoras_family: examples, identity, range") {
    CHECK(pythagoras_family(1) == PrimitiveTriple::create(3, 4, 5));
    CHECK(pythagoras_family(2) == PrimitiveTriple::create(5, 12, 13));
    CHECK(pythagoras_family(3) == PrimitiveTriple::create(7, 24, 25));
    CHECK(code_of([] { pythagoras_family(0); }) == ErrorCode::out_of_range);

    for (std::uint64_t k = 1; k <= 500; ++k) {
        const Int K(static_cast<unsigned long>(k));
        const PrimitiveTriple t = pythagoras_family(K);
        // (2n+1)^2 + (2n^2+2n)^2 = (2n^2+2n+1)^2
        CHECK((2 * K + 1) * (2 * K + 1) + (2 * K * K + 2 * K) * (2 * K * K + 2 * K) ==
              (2 * K * K + 2 * K + 1) * (2 * K * K + 2 * K + 1));
        CHECK(t.z == t.y + 1); // hypotenuse and even leg consecutive
    }
}

TEST_CASE("plato_family: examples, evenness requirement, consecutiveness") {
    CHECK(plato_family(2) == PrimitiveTriple::create(3, 4, 5));
    CHECK(plato_family(4) == PrimitiveTriple::create(15, 8, 17));
    CHECK(plato_family(6) == PrimitiveTriple::create(35, 12, 37));
    CHECK(code_of([] { plato_family(3); }) == ErrorCode::out_of_range);
    CHECK(code_of([] { plato_family(0); }) == ErrorCode::out_of_range);
    CHECK(code_of([] { plato_family(1); }) == ErrorCode::out_of_range);

    for (std::uint64_t m = 2; m <= 500; m += 2) {
        const PrimitiveTriple t = plato_family(Int(static_cast<unsigned long>(m)));
        CHECK(t.z == t.x + 2); // hypotenuse and odd leg consecutive odd numbers
    }
}

TEST_CASE("family cross-links with Euclid and the construction") {
    for (std::uint64_t k = 1; k <= 500; ++k) {
        const Int K(static_cast<unsigned long>(k));
        const PrimitiveTriple t = pythagoras_family(K);
        CHECK(t == euclid_triple(MnPair::create(K + 1, K)));
        CHECK(t == triple_from_partition(Partition::create(K, 1)));
    }
    for (std::uint64_t m = 2; m <= 500; m += 2) {
        const Int M(static_cast<unsigned long>(m));
        const PrimitiveTriple t = plato_family(M);
        CHECK(t == euclid_triple(MnPair::create(M, 1)));
        CHECK(t == triple_from_partition(Partition::create(1, M - 1)));
    }
}

TEST_CASE("neither classical family reaches (21, 20, 29)") {
    const PrimitiveTriple target = PrimitiveTriple::create(21, 20, 29);
    // pythagoras z = 2k^2+2k+1 exceeds 29 from k = 4 on
    for (std::uint64_t k = 1; k <= 10; ++k)
        CHECK(pythagoras_family(Int(static_cast<unsigned long>(k))) != target);
    // plato z = m^2+1 exceeds 29 from m = 6 on
    for (std::uint64_t m = 2; m <= 10; m += 2)
        CHECK(plato_family(Int(static_cast<unsigned long>(m))) != target);
}

TEST_CASE("rational_point: frozen examples") {
    const RationalPoint p = rational_point(MnPair::create(2, 1));
    CHECK(p.x_num == 3);
    CHECK(p.x_den == 5);
    CHECK(p.y_num == 4);
    CHECK(p.y_den == 5);

    const RationalPoint q = rational_point(MnPair::create(5, 2));
    CHECK(q.x_num == 21);
    CHECK(q.x_den == 29);
    CHECK(q.y_num == 20);
    CHECK(q.y_den == 29);
}

TEST_CASE("rational_point: exactly on the unit circle, in lowest terms, in (0,1)^2") {
    for (std::uint64_t m = 2; m <= 60; ++m) {
        for (std::uint64_t n = 1; n < m; ++n) {
            if ((m + n) % 2 == 0 || std::gcd(m, n) != 1)
                continue;
            const RationalPoint p = rational_point(
                MnPair::create(Int(static_cast<unsigned long>(m)), Int(static_cast<unsigned long>(n))));
            CHECK(p.x_den == p.y_den); // both denominators are m^2 + n^2
            CHECK(p.x_den == Int(static_cast<unsigned long>(m * m + n * n)));
            CHECK(p.x_num * p.x_num + p.y_num * p.y_num == p.x_den * p.x_den);
            CHECK(gcd(p.x_num, p.x_den) == 1);
            CHECK(gcd(p.y_num, p.y_den) == 1);
            CHECK(p.x_num > 0);
            CHECK(p.x_num < p.x_den);
            CHECK(p.y_num > 0);
            CHECK(p.y_num < p.y_den);
        }
    }
}
