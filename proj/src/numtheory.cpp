#include "numtheory.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "error.hpp"

namespace gnomon {

Int Factorization::value() const {
    Int v = pow2(two_exponent);
    for (const auto& pp : odd_primes) {
        Int q;
        mpz_pow_ui(q.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        v *= q;
    }
    return v;
}

namespace {

Factorization factor_even_u64(std::uint64_t s) {
    Factorization f;
    f.two_exponent = std::countr_zero(s);
    std::uint64_t n = s >> f.two_exponent;
    for (std::uint64_t c = 3; c * c <= n; c += 2) {
        if (n % c == 0) {
            std::uint64_t e = 0;
            do {
                n /= c;
                ++e;
            } while (n % c == 0);
            f.odd_primes.push_back({Int(static_cast<unsigned long>(c)), e});
        }
    }
    if (n > 1)
        f.odd_primes.push_back({Int(static_cast<unsigned long>(n)), 1});
    return f;
}

Factorization factor_even_big(const Int& s) {
    Factorization f;
    f.two_exponent = mpz_scan1(s.get_mpz_t(), 0);
    Int n = s >> f.two_exponent;
    Int root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    for (std::uint64_t c = 3; mpz_cmp_ui(root.get_mpz_t(), c) >= 0; c += 2) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), c)) {
            std::uint64_t e = 0;
            do {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), c);
                ++e;
            } while (mpz_divisible_ui_p(n.get_mpz_t(), c));
            f.odd_primes.push_back({Int(static_cast<unsigned long>(c)), e});
            mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        }
    }
    if (n > 1)
        f.odd_primes.push_back({n, 1});
    return f;
}

} // namespace

Factorization factor_even_side(const Int& s) {
    if (is_odd(s))
        throw Error(ErrorCode::odd_input, "side must be even, got " + to_decimal(s));
    if (s < 2)
        throw Error(ErrorCode::out_of_range, "side must be at least 2, got " + to_decimal(s));
    if (fits_u64(s))
        return factor_even_u64(to_u64(s));
    return factor_even_big(s);
}

std::vector<TripleU64> brute_force_primitive_triples(std::uint64_t z_max) {
    std::vector<TripleU64> out;
    if (z_max < 5)
        return out;
    const std::uint64_t cap = z_max * z_max;
    for (std::uint64_t x = 3; x < z_max; x += 2) {
        for (std::uint64_t y = 4; y < z_max; y += 2) {
            const std::uint64_t s2 = x * x + y * y;
            if (s2 > cap)
                break;
            const std::uint64_t z = isqrt_u64(s2);
            if (z * z == s2 && std::gcd(x, y) == 1)
                out.push_back({x, y, z});
        }
    }
    std::sort(out.begin(), out.end(), [](const TripleU64& a, const TripleU64& b) {
        return a.z != b.z ? a.z < b.z : a.x < b.x;
    });
    return out;
}

} // namespace gnomon
