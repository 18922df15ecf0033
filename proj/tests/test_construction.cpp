#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "bigint.hpp"
#include "construction.hpp"
#include "error.hpp"
#include "numtheory.hpp"

using namespace gnomon;

namespace {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

// independent oracle: all divisor pairs t*l = s/2 with l odd, gcd(t,l) = 1
std::vector<Pair> partition_pairs_oracle(std::uint64_t s) {
    std::vector<Pair> out;
    const std::uint64_t half = s / 2;
    for (std::uint64_t t = 1; t <= half; ++t) {
        if (half % t != 0)
            continue;
        const std::uint64_t l = half / t;
        if (l % 2 == 1 && std::gcd(t, l) == 1)
            out.emplace_back(t, l);
    }
    return out; // ascending by t
}

std::vector<Pair> as_pairs(const std::vector<Partition>& parts) {
    std::vector<Pair> out;
    for (const Partition& p : parts)
        out.emplace_back(to_u64(p.t), to_u64(p.l));
    return out;
}

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

std::uint64_t count_distinct_odd_primes(std::uint64_t s) {
    std::uint64_t n = s, count = 0;
    while (n % 2 == 0)
        n /= 2;
    for (std::uint64_t c = 3; c * c <= n; c += 2) {
        if (n % c == 0) {
            ++count;
            while (n % c == 0)
                n /= c;
        }
    }
    if (n > 1)
        ++count;
    return count;
}

} // namespace

TEST_CASE("enumerate_partitions: frozen subset-bitmask order") {
    CHECK(as_pairs(enumerate_partitions(factor_even_side(2))) == std::vector<Pair>{{1, 1}});
    CHECK(as_pairs(enumerate_partitions(factor_even_side(12))) ==
          std::vector<Pair>{{2, 3}, {6, 1}});
    CHECK(as_pairs(enumerate_partitions(factor_even_side(30))) ==
          std::vector<Pair>{{1, 15}, {3, 5}, {5, 3}, {15, 1}});
    // 3^2 travels as one block, never split
    CHECK(as_pairs(enumerate_partitions(factor_even_side(18))) ==
          std::vector<Pair>{{1, 9}, {9, 1}});
    // three blocks 9, 5, 7 of s = 630, bit i = i-th odd prime ascending
    CHECK(as_pairs(enumerate_partitions(factor_even_side(630))) ==
          std::vector<Pair>{{1, 315}, {9, 35}, {5, 63}, {45, 7}, {7, 45}, {63, 5}, {35, 9},
                            {315, 1}});
}

TEST_CASE("enumerate_partitions: agrees with the divisor-pair oracle up to 2000") {
    for (std::uint64_t s = 2; s <= 2000; s += 2) {
        const auto parts = enumerate_partitions(factor_even_side(Int(static_cast<unsigned long>(s))));
        for (const Partition& p : parts) {
            CHECK(p.s == 2 * p.t * p.l);
            CHECK(is_odd(p.l));
            CHECK(gcd(p.t, p.l) == 1);
        }
        auto got = as_pairs(parts);
        std::sort(got.begin(), got.end());
        CHECK(got == partition_pairs_oracle(s));
    }
}

TEST_CASE("count_partitions: L(S) = 2^r") {
    CHECK(count_partitions(factor_even_side(2)) == 1);
    CHECK(count_partitions(factor_even_side(30)) == 4);
    CHECK(count_partitions(factor_even_side(210)) == 8);
    CHECK(count_partitions(factor_even_side(1024)) == 1);
    // ten odd prime blocks
    const Int s = Int(2) * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23 * 29 * 31;
    CHECK(count_partitions(factor_even_side(s)) == 1024);
    CHECK(enumerate_partitions(factor_even_side(s)).size() == 1024);

    for (std::uint64_t v = 2; v <= 2000; v += 2) {
        const Factorization f = factor_even_side(Int(static_cast<unsigned long>(v)));
        CHECK(count_partitions(f) == Int(1) << count_distinct_odd_primes(v));
        CHECK(count_partitions(f) == enumerate_partitions(f).size());
    }
}

TEST_CASE("triple_from_partition: frozen examples") {
    CHECK(triple_from_partition(Partition::create(1, 1)) == PrimitiveTriple::create(3, 4, 5));
    CHECK(triple_from_partition(Partition::create(2, 3)) == PrimitiveTriple::create(21, 20, 29));
    CHECK(triple_from_partition(Partition::create(6, 1)) == PrimitiveTriple::create(13, 84, 85));
    CHECK(triple_from_partition(Partition::create(15, 1)) ==
          PrimitiveTriple::create(31, 480, 481));
}

TEST_CASE("summed-squares identity holds exactly for all small (t, l)") {
    for (std::uint64_t t = 1; t <= 60; ++t) {
        for (std::uint64_t l = 1; l <= 60; l += 2) {
            if (std::gcd(t, l) != 1)
                continue;
            const Int T(static_cast<unsigned long>(t));
            const Int L(static_cast<unsigned long>(l));
            const Int a = 2 * T * L + L * L;
            const Int b = 2 * T * L + 2 * T * T;
            const Int c = 2 * T * L + 2 * T * T + L * L;
            CHECK(a * a + b * b == c * c);
            const PrimitiveTriple tr = triple_from_partition(Partition::create(T, L));
            CHECK(tr.x == a);
            CHECK(tr.y == b);
            CHECK(tr.z == c);
        }
    }
}

TEST_CASE("mn_from_partition and partition_from_mn: examples and round-trips") {
    CHECK(mn_from_partition(Partition::create(1, 1)) == MnPair::create(2, 1));
    CHECK(mn_from_partition(Partition::create(2, 3)) == MnPair::create(5, 2));
    CHECK(mn_from_partition(Partition::create(6, 1)) == MnPair::create(7, 6));

    CHECK(partition_from_mn(MnPair::create(2, 1)) == Partition::create(1, 1));
    CHECK(partition_from_mn(MnPair::create(5, 2)) == Partition::create(2, 3));
    const Partition p83 = partition_from_mn(MnPair::create(8, 3));
    CHECK(p83 == Partition::create(3, 5));
    CHECK(p83.s == 30);

    for (std::uint64_t s = 2; s <= 1000; s += 2)
        for (const Partition& p : enumerate_partitions(factor_even_side(Int(static_cast<unsigned long>(s)))))
            CHECK(partition_from_mn(mn_from_partition(p)) == p);

    for (std::uint64_t m = 2; m <= 500; ++m) {
        for (std::uint64_t n = 1; n < m; ++n) {
            if ((m + n) % 2 == 0 || std::gcd(m, n) != 1)
                continue;
            const MnPair mn = MnPair::create(Int(static_cast<unsigned long>(m)),
                                             Int(static_cast<unsigned long>(n)));
            CHECK(mn_from_partition(partition_from_mn(mn)) == mn);
        }
    }
}

TEST_CASE("validating constructors reject bad input") {
    CHECK(code_of([] { Partition::create(2, 4); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { Partition::create(3, 9); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { Partition::create(0, 1); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { MnPair::create(2, 2); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { MnPair::create(1, 2); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { MnPair::create(3, 1); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { MnPair::create(4, 2); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { PrimitiveTriple::create(3, 4, 6); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] { PrimitiveTriple::create(4, 3, 5); }) == ErrorCode::invalid_parameters);
    CHECK(code_of([] {
              JoinedRecord::checked(12, 2, 3, 5, 2, 21, 20, 31);
          }) == ErrorCode::invalid_parameters);
    CHECK(JoinedRecord::checked(12, 2, 3, 5, 2, 21, 20, 29).z == 29);
}

TEST_CASE("gnomon_decomposition: frozen fields and geometric identities") {
    const GnomonDecomposition d1 = decompose(Partition::create(1, 1));
    CHECK(d1.s == 2);
    CHECK(d1.y_side == 4);
    CHECK(d1.gnomon_u_side == 5);
    CHECK(d1.gnomon_t_thickness == 2);
    CHECK(d1.gnomon_u_thickness == 2);
    CHECK(d1.inner_side == 3);
    CHECK(d1.rect_width == 2);
    CHECK(d1.rect_height == 1);
    CHECK(d1.area_gnomon_t == 12);
    CHECK(d1.area_rectangles == 4);
    CHECK(d1.area_gnomon_u == 16);

    const GnomonDecomposition d2 = decompose(Partition::create(2, 3));
    CHECK(d2.y_side == 20);
    CHECK(d2.gnomon_u_side == 29);
    CHECK(d2.gnomon_t_thickness == 8);
    CHECK(d2.inner_side == 21);
    CHECK(d2.rect_width == 8);
    CHECK(d2.rect_height == 9);
    CHECK(d2.area_gnomon_t == 256);
    CHECK(d2.area_rectangles == 144);
    CHECK(d2.area_gnomon_u == 400);

    for (std::uint64_t s = 2; s <= 600; s += 2) {
        for (const Partition& p : enumerate_partitions(factor_even_side(Int(static_cast<unsigned long>(s))))) {
            const GnomonDecomposition d = decompose(p);
            CHECK(d.area_gnomon_t + d.area_rectangles == d.area_gnomon_u);
            CHECK(d.area_gnomon_u == d.y_side * d.y_side);
            CHECK(d.gnomon_u_side * d.gnomon_u_side - d.inner_side * d.inner_side ==
                  d.y_side * d.y_side);
            CHECK(d.gnomon_u_side - d.gnomon_u_thickness == d.inner_side);
            CHECK(is_odd(d.gnomon_u_side));
            CHECK(d.area_rectangles == d.s * d.s);
        }
    }
}

TEST_CASE("gnomon_ring_width: unit-step gnomon area") {
    CHECK(gnomon_ring_width(1) == 3);
    CHECK(gnomon_ring_width(3) == 7);
    CHECK(gnomon_ring_width(10) == 21);
    CHECK(code_of([] { gnomon_ring_width(0); }) == ErrorCode::out_of_range);
    for (std::uint64_t side = 1; side <= 500; ++side) {
        const Int n(static_cast<unsigned long>(side));
        CHECK((n + 1) * (n + 1) - n * n == gnomon_ring_width(n));
    }
}

TEST_CASE("enumerate_triples_by_side: base cases and distinctness") {
    const auto r2 = enumerate_triples_by_side(2);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].s == 2);
    CHECK(r2[0].t == 1);
    CHECK(r2[0].l == 1);
    CHECK(r2[0].m == 2);
    CHECK(r2[0].n == 1);
    CHECK(r2[0].x == 3);
    CHECK(r2[0].y == 4);
    CHECK(r2[0].z == 5);

    const auto r4 = enumerate_triples_by_side(4);
    REQUIRE(r4.size() == 2);
    CHECK(r4[1].s == 4);
    CHECK(r4[1].t == 2);
    CHECK(r4[1].l == 1);
    CHECK(r4[1].m == 3);
    CHECK(r4[1].n == 2);
    CHECK(r4[1].x == 5);
    CHECK(r4[1].y == 12);
    CHECK(r4[1].z == 13);

    // sum of 2^r over s in {2,4,6,8,10,12} = 1+1+2+1+2+2 = 9 records
    const auto r12 = enumerate_triples_by_side(12);
    REQUIRE(r12.size() == 9);
    std::set<std::array<std::uint64_t, 3>> seen;
    for (const JoinedRecord& rec : r12)
        seen.insert({to_u64(rec.x), to_u64(rec.y), to_u64(rec.z)});
    CHECK(seen.size() == 9);
    CHECK(seen.count({21, 20, 29}) == 1);
    CHECK(seen.count({11, 60, 61}) == 1);
}

TEST_CASE("SideEnumerator: fast and exact routes emit identical streams") {
    auto drain = [](SideEnumerator& e) {
        std::vector<JoinedRecord> out;
        while (auto rec = e.next())
            out.push_back(std::move(*rec));
        return out;
    };

    SideEnumerator fast_side(SideEnumerator::Bound::side, 2000);
    SideEnumerator exact_side(SideEnumerator::Bound::side, 2000, /*force_exact=*/true);
    CHECK(drain(fast_side) == drain(exact_side));

    SideEnumerator fast_z(SideEnumerator::Bound::hypotenuse, 300);
    SideEnumerator exact_z(SideEnumerator::Bound::hypotenuse, 300, /*force_exact=*/true);
    const auto fz = drain(fast_z);
    CHECK(fz == drain(exact_z));
    for (const JoinedRecord& rec : fz)
        CHECK(rec.z <= 300);
}

TEST_CASE("SideEnumerator: hypotenuse bound matches the brute-force oracle") {
    SideEnumerator en(SideEnumerator::Bound::hypotenuse, 100);
    std::vector<TripleU64> got;
    while (auto rec = en.next())
        got.push_back({to_u64(rec->x), to_u64(rec->y), to_u64(rec->z)});
    std::sort(got.begin(), got.end(), [](const TripleU64& a, const TripleU64& b) {
        return a.z != b.z ? a.z < b.z : a.x < b.x;
    });
    CHECK(got == brute_force_primitive_triples(100));
}

TEST_CASE("every partition of every even s <= 10^4 yields the Euclid triple of its (m, n)") {
    for (std::uint64_t s = 2; s <= 10000; s += 2) {
        for (const Partition& p :
             enumerate_partitions(factor_even_side(Int(static_cast<unsigned long>(s))))) {
            // triple_from_partition itself asserts primitivity and parity
            const PrimitiveTriple tr = triple_from_partition(p);
            const MnPair mn = mn_from_partition(p);
            const Int m2 = mn.m * mn.m, n2 = mn.n * mn.n;
            CHECK(tr.x == m2 - n2);
            CHECK(tr.y == 2 * mn.m * mn.n);
            CHECK(tr.z == m2 + n2);
        }
    }
}

TEST_CASE("completeness: sides up to 2B cover Euclid pairs with n(m-n) <= B") {
    constexpr std::uint64_t B = 1000;
    std::set<std::array<std::uint64_t, 3>> construction;
    for (const JoinedRecord& rec : enumerate_triples_by_side(2 * B))
        CHECK(construction.insert({to_u64(rec.x), to_u64(rec.y), to_u64(rec.z)}).second);

    std::set<std::array<std::uint64_t, 3>> euclid;
    for (std::uint64_t n = 1; n <= B; ++n) {
        for (std::uint64_t d = 1; n * d <= B; d += 2) { // d = m - n, odd for parity
            if (std::gcd(n, d) != 1)
                continue;
            const std::uint64_t m = n + d;
            CHECK(euclid.insert({m * m - n * n, 2 * m * n, m * m + n * n}).second);
        }
    }
    CHECK(construction == euclid);
}

TEST_CASE("parity of t: odd exactly when s = 2 (mod 4)") {
    for (std::uint64_t s = 2; s <= 2000; s += 2)
        for (const Partition& p : enumerate_partitions(factor_even_side(Int(static_cast<unsigned long>(s)))))
            CHECK(is_odd(p.t) == (s % 4 == 2));
}

TEST_CASE("records survive the 64-bit boundary") {
    const Int t = pow2(70);
    const JoinedRecord rec = JoinedRecord::from_partition(Partition::create(t, 3));
    CHECK(rec.s == 6 * t);
    CHECK(rec.x == 6 * t + 9);
    CHECK(rec.y == 6 * t + 2 * t * t);
    CHECK(rec.z == 6 * t + 2 * t * t + 9);
    CHECK(rec.x * rec.x + rec.y * rec.y == rec.z * rec.z);
}
