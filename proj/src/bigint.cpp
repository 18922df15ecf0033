#include "bigint.hpp"

#include <cmath>

#include "error.hpp"

namespace gnomon {

Int parse_natural(std::string_view text) {
    if (text.empty())
        throw Error(ErrorCode::parse, "empty string is not a number");
    for (char c : text) {
        if (c < '0' || c > '9')
            throw Error(ErrorCode::parse,
                        "not a non-negative integer: '" + std::string(text) + "'");
    }
    Int r;
    // Validated above, so set_str cannot fail.
    mpz_set_str(r.get_mpz_t(), std::string(text).c_str(), 10);
    return r;
}

std::string to_decimal(const Int& v) { return v.get_str(); }

bool fits_u64(const Int& v) {
    static_assert(sizeof(unsigned long) == 8, "LP64 assumed");
    return sgn(v) >= 0 && mpz_fits_ulong_p(v.get_mpz_t()) != 0;
}

std::uint64_t to_u64(const Int& v) {
    if (!fits_u64(v))
        throw Error(ErrorCode::overflow, "value does not fit in 64 bits: " + to_decimal(v));
    return mpz_get_ui(v.get_mpz_t());
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    // double rounding can land one off in either direction
    while (r > 0 && (r > UINT64_MAX / r || r * r > n))
        --r;
    while (r + 1 <= UINT64_MAX / (r + 1) && (r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

} // namespace gnomon
