#ifndef GNOMON_BIGINT_HPP
#define GNOMON_BIGINT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gnomon {

// All domain arithmetic runs on unbounded integers; values only ever
// leave this domain as decimal strings or as checked uint64_t.
using Int = mpz_class;

// Strict decimal parse of a non-negative integer: digits only, at least
// one, no sign, no whitespace. Throws Error(parse) otherwise.
Int parse_natural(std::string_view text);

std::string to_decimal(const Int& v);

bool fits_u64(const Int& v);

// Throws Error(overflow) when v does not fit.
std::uint64_t to_u64(const Int& v);

inline Int pow2(unsigned long k) {
    Int r = 1;
    r <<= k;
    return r;
}

inline bool is_even(const Int& v) { return mpz_even_p(v.get_mpz_t()) != 0; }
inline bool is_odd(const Int& v) { return mpz_odd_p(v.get_mpz_t()) != 0; }

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Exact integer square root of a uint64_t.
std::uint64_t isqrt_u64(std::uint64_t n);

} // namespace gnomon

#endif
