#include "construction.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "error.hpp"

namespace gnomon {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::invalid_parameters, what);
}

} // namespace

Partition Partition::create(Int t, Int l) {
    if (t < 1 || l < 1)
        fail("partition elements must be positive");
    if (is_even(l))
        fail("l must be odd, got " + to_decimal(l));
    if (gcd(t, l) != 1)
        fail("t and l must be coprime: gcd(" + to_decimal(t) + ", " + to_decimal(l) +
             ") = " + to_decimal(gcd(t, l)));
    Partition p;
    p.s = 2 * t * l;
    p.t = std::move(t);
    p.l = std::move(l);
    return p;
}

PrimitiveTriple PrimitiveTriple::create(Int x, Int y, Int z) {
    if (x < 1 || y < 1 || z < 1)
        fail("triple members must be positive");
    if (is_even(x) || is_odd(y) || is_even(z))
        fail("expected odd x, even y, odd z in (" + to_decimal(x) + ", " + to_decimal(y) +
             ", " + to_decimal(z) + ")");
    if (x * x + y * y != z * z)
        fail("not a Pythagorean triple: (" + to_decimal(x) + ", " + to_decimal(y) + ", " +
             to_decimal(z) + ")");
    if (gcd(x, y) != 1)
        fail("triple is not primitive: gcd(x, y) = " + to_decimal(gcd(x, y)));
    return {std::move(x), std::move(y), std::move(z)};
}

MnPair MnPair::create(Int m, Int n) {
    if (n < 1 || m <= n)
        fail("require m > n >= 1, got m = " + to_decimal(m) + ", n = " + to_decimal(n));
    if (gcd(m, n) != 1)
        fail("m and n must be coprime, got m = " + to_decimal(m) + ", n = " + to_decimal(n));
    if (is_even(m) == is_even(n))
        fail("m and n must have opposite parity, got m = " + to_decimal(m) +
             ", n = " + to_decimal(n));
    return {std::move(m), std::move(n)};
}

std::vector<Partition> enumerate_partitions(const Factorization& f) {
    if (f.two_exponent < 1)
        fail("factorization of an even side needs two_exponent >= 1");
    const std::size_t r = f.odd_primes.size();
    if (r > 30)
        throw Error(ErrorCode::overflow,
                    "2^" + std::to_string(r) + " partitions is too many to materialize");
    std::vector<Int> blocks;
    blocks.reserve(r);
    for (const auto& pp : f.odd_primes) {
        Int q;
        mpz_pow_ui(q.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        blocks.push_back(q); // each prime travels with its full exponent
    }
    const Int t0 = pow2(f.two_exponent - 1);
    std::vector<Partition> out;
    out.reserve(std::size_t{1} << std::min<std::size_t>(r, 20));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        Int t = t0;
        Int l = 1;
        for (std::size_t i = 0; i < r; ++i) {
            if (mask >> i & 1)
                t *= blocks[i];
            else
                l *= blocks[i];
        }
        out.push_back(Partition::create(std::move(t), std::move(l)));
    }
    return out;
}

Int count_partitions(const Factorization& f) {
    return pow2(static_cast<unsigned long>(f.odd_primes.size()));
}

PrimitiveTriple triple_from_partition(const Partition& p) {
    const Int l2 = p.l * p.l;
    const Int t2_twice = 2 * p.t * p.t;
    return PrimitiveTriple::create(p.s + l2, p.s + t2_twice, p.s + t2_twice + l2);
}

MnPair mn_from_partition(const Partition& p) {
    return MnPair::create(p.l + p.t, p.t);
}

Partition partition_from_mn(const MnPair& mn) {
    return Partition::create(mn.n, mn.m - mn.n);
}

GnomonDecomposition decompose(const Partition& p) {
    const PrimitiveTriple tr = triple_from_partition(p);
    GnomonDecomposition d;
    d.s = p.s;
    d.t = p.t;
    d.l = p.l;
    d.y_side = tr.y;
    d.gnomon_t_thickness = 2 * p.t * p.t;
    d.gnomon_u_side = tr.z;
    d.gnomon_u_thickness = d.gnomon_t_thickness;
    d.inner_side = tr.x;
    d.rect_width = d.gnomon_t_thickness;
    d.rect_height = p.l * p.l;
    d.area_gnomon_t = tr.y * tr.y - p.s * p.s;
    d.area_rectangles = 2 * d.rect_width * d.rect_height;
    d.area_gnomon_u = tr.y * tr.y;
    if (d.area_gnomon_t + d.area_rectangles != d.area_gnomon_u)
        fail("gnomon areas do not close up");
    if (d.gnomon_u_side - d.gnomon_u_thickness != d.inner_side)
        fail("gnomon U does not land on square x");
    if (d.gnomon_u_side * d.gnomon_u_side - d.inner_side * d.inner_side != d.area_gnomon_u)
        fail("gnomon U area is not y^2");
    if (is_even(d.gnomon_u_side))
        fail("gnomon U side must be odd");
    return d;
}

Int gnomon_ring_width(const Int& side) {
    if (side < 1)
        throw Error(ErrorCode::out_of_range, "side must be at least 1, got " + to_decimal(side));
    return 2 * side + 1;
}

JoinedRecord JoinedRecord::from_partition(const Partition& p) {
    const MnPair mn = mn_from_partition(p);
    const PrimitiveTriple tr = triple_from_partition(p);
    return {p.s, p.t, p.l, mn.m, mn.n, tr.x, tr.y, tr.z};
}

JoinedRecord JoinedRecord::checked(Int s, Int t, Int l, Int m, Int n, Int x, Int y, Int z) {
    const Partition p = Partition::create(t, l);
    if (p.s != s)
        fail("s != 2*t*l");
    const JoinedRecord want = from_partition(p);
    const JoinedRecord got{std::move(s), std::move(t), std::move(l), std::move(m),
                           std::move(n), std::move(x), std::move(y), std::move(z)};
    if (got != want)
        fail("record fields violate the cross-formulas");
    return got;
}

// ---------------------------------------------------------------------------
// Streaming enumerator.
//
// Bounds at or below 2^31 run on uint64: with s <= 2^31 every derived
// value stays below 2^62 (worst case 2t^2 = s^2/2), so no intermediate
// can wrap. Larger bounds take the arbitrary-precision route.
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint64_t kFastPathMaxBound = std::uint64_t{1} << 31;

} // namespace

SideEnumerator::SideEnumerator(Bound bound, const Int& limit, bool force_exact) {
    if (limit < 2) {
        done_ = true;
        return;
    }
    fast_ = !force_exact && fits_u64(limit) && to_u64(limit) <= kFastPathMaxBound;
    has_z_cap_ = bound == Bound::hypotenuse;
    if (fast_) {
        const std::uint64_t lim = to_u64(limit);
        if (has_z_cap_) {
            s_end_ = 2 * lim; // scan bound; z-filter keeps z <= lim
            z_cap_ = lim;
        } else {
            s_end_ = lim;
        }
    } else {
        s_next_big_ = 2;
        if (has_z_cap_) {
            s_end_big_ = 2 * limit;
            z_cap_big_ = limit;
        } else {
            s_end_big_ = limit;
        }
    }
}

void SideEnumerator::refill_fast() {
    pending_.clear();
    pending_idx_ = 0;
    while (s_next_ <= s_end_) {
        const std::uint64_t s = s_next_;
        s_next_ += 2;
        // z = s + 2t^2 + l^2 >= s + 3, so later sides cannot contribute either
        if (has_z_cap_ && s + 3 > z_cap_)
            break;

        const unsigned a0 = std::countr_zero(s);
        std::uint64_t n = s >> a0;
        std::uint64_t blocks[16];
        unsigned r = 0;
        for (std::uint64_t c = 3; c * c <= n; c += 2) {
            if (n % c == 0) {
                std::uint64_t q = 1;
                do {
                    n /= c;
                    q *= c;
                } while (n % c == 0);
                blocks[r++] = q;
            }
        }
        if (n > 1)
            blocks[r++] = n;

        const std::uint64_t t0 = std::uint64_t{1} << (a0 - 1);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
            std::uint64_t t = t0;
            std::uint64_t l = 1;
            for (unsigned i = 0; i < r; ++i) {
                if (mask >> i & 1)
                    t *= blocks[i];
                else
                    l *= blocks[i];
            }
            const std::uint64_t x = s + l * l;
            const std::uint64_t y = s + 2 * t * t;
            const std::uint64_t z = y + l * l;
            if (has_z_cap_ && z > z_cap_)
                continue;
            if (std::gcd(x, y) != 1 || x % 2 == 0 || y % 2 != 0)
                fail("fast path produced a non-primitive record"); // unreachable
            pending_.push_back({Int(static_cast<unsigned long>(s)),
                                Int(static_cast<unsigned long>(t)),
                                Int(static_cast<unsigned long>(l)),
                                Int(static_cast<unsigned long>(t + l)),
                                Int(static_cast<unsigned long>(t)),
                                Int(static_cast<unsigned long>(x)),
                                Int(static_cast<unsigned long>(y)),
                                Int(static_cast<unsigned long>(z))});
        }
        if (!pending_.empty())
            return;
    }
    done_ = true;
}

void SideEnumerator::refill_exact() {
    pending_.clear();
    pending_idx_ = 0;
    while (s_next_big_ <= s_end_big_) {
        const Int s = s_next_big_;
        s_next_big_ += 2;
        if (has_z_cap_ && s + 3 > z_cap_big_)
            break;
        for (const Partition& p : enumerate_partitions(factor_even_side(s))) {
            JoinedRecord rec = JoinedRecord::from_partition(p);
            if (has_z_cap_ && rec.z > z_cap_big_)
                continue;
            pending_.push_back(std::move(rec));
        }
        if (!pending_.empty())
            return;
    }
    done_ = true;
}

std::optional<JoinedRecord> SideEnumerator::next() {
    while (!done_ && pending_idx_ >= pending_.size()) {
        if (fast_)
            refill_fast();
        else
            refill_exact();
    }
    if (pending_idx_ < pending_.size())
        return std::move(pending_[pending_idx_++]);
    return std::nullopt;
}

std::vector<JoinedRecord> enumerate_triples_by_side(const Int& s_max) {
    SideEnumerator en(SideEnumerator::Bound::side, s_max);
    std::vector<JoinedRecord> out;
    while (auto rec = en.next())
        out.push_back(std::move(*rec));
    return out;
}

} // namespace gnomon
