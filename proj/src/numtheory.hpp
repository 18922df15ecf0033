#ifndef GNOMON_NUMTHEORY_HPP
#define GNOMON_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

#include "bigint.hpp"

namespace gnomon {

struct PrimePower {
    Int prime;
    std::uint64_t exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

// Prime-power decomposition of an even side S = 2^two_exponent * odd part.
// two_exponent >= 1; odd_primes ascending by prime.
struct Factorization {
    std::uint64_t two_exponent = 0;
    std::vector<PrimePower> odd_primes;

    Int value() const;
    std::size_t odd_prime_count() const { return odd_primes.size(); }
};

// Trial division by 2 then odd candidates up to sqrt(S).
// Throws Error(odd_input) for odd S, Error(out_of_range) for S < 2.
Factorization factor_even_side(const Int& s);

struct TripleU64 {
    std::uint64_t x = 0; // odd leg
    std::uint64_t y = 0; // even leg
    std::uint64_t z = 0; // hypotenuse

    auto operator<=>(const TripleU64&) const = default;
};

// Exhaustive ground-truth oracle: scans all (odd x, even y) leg pairs
// directly and keeps exact squares with gcd(x, y) = 1 and z <= z_max.
// Sorted by (z, x). Intentionally independent of every generating formula.
std::vector<TripleU64> brute_force_primitive_triples(std::uint64_t z_max);

} // namespace gnomon

#endif
