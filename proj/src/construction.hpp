#ifndef GNOMON_CONSTRUCTION_HPP
#define GNOMON_CONSTRUCTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bigint.hpp"
#include "numtheory.hpp"

namespace gnomon {

// Split of the generating square's even side s = 2*t*l with l odd and
// gcd(t, l) = 1; t carries the full power of two of s/2.
struct Partition {
    Int t, l, s;

    // Validates the invariants and computes s = 2*t*l.
    static Partition create(Int t, Int l);

    bool operator==(const Partition&) const = default;
};

struct PrimitiveTriple {
    Int x; // odd leg
    Int y; // even leg
    Int z; // hypotenuse

    // Checks x^2 + y^2 = z^2, gcd(x, y) = 1 and the parity convention.
    static PrimitiveTriple create(Int x, Int y, Int z);

    bool operator==(const PrimitiveTriple&) const = default;
};

// Classical parameters: m > n >= 1, coprime, opposite parity.
struct MnPair {
    Int m, n;

    static MnPair create(Int m, Int n);

    bool operator==(const MnPair&) const = default;
};

// Side lengths and areas of the L-shaped regions that assemble the
// three squares: gnomon T around the generating square, the two filler
// rectangles cut from it, and gnomon U landed on square x.
struct GnomonDecomposition {
    Int s, t, l;
    Int y_side;             // 2t(l+t)
    Int gnomon_t_thickness; // 2t^2
    Int gnomon_u_side;      // z
    Int gnomon_u_thickness; // 2t^2
    Int inner_side;         // x
    Int rect_width;         // 2t^2
    Int rect_height;        // l^2
    Int area_gnomon_t;      // y^2 - s^2
    Int area_rectangles;    // 2 * (2t^2 * l^2) = s^2
    Int area_gnomon_u;      // y^2
};

// One fully joined row: partition, classical parameters and triple.
// The constructor enforces every cross-formula among the fields.
struct JoinedRecord {
    Int s, t, l, m, n, x, y, z;

    static JoinedRecord from_partition(const Partition& p);
    static JoinedRecord checked(Int s, Int t, Int l, Int m, Int n, Int x, Int y, Int z);

    bool operator==(const JoinedRecord&) const = default;
};

// All 2^r partitions of the side encoded by f, ordered by subset bitmask
// over the odd primes in ascending-prime order (empty subset first, bit i
// selecting the i-th odd prime, taken with its full exponent).
// Throws Error(overflow) when r is too large to materialize.
std::vector<Partition> enumerate_partitions(const Factorization& f);

// 2^r without enumerating.
Int count_partitions(const Factorization& f);

// x = 2tl + l^2, y = 2t(l + t), z = 2tl + 2t^2 + l^2.
PrimitiveTriple triple_from_partition(const Partition& p);

// m = l + t, n = t.
MnPair mn_from_partition(const Partition& p);

// t = n, l = m - n.
Partition partition_from_mn(const MnPair& mn);

GnomonDecomposition decompose(const Partition& p);

// Area of the unit-step gnomon: (side+1)^2 - side^2 = 2*side + 1.
Int gnomon_ring_width(const Int& side);

// Streams joined records over even sides in deterministic order
// (s ascending, subset bitmask ascending) in constant memory.
// Bound::side emits every partition of every even s <= limit;
// Bound::hypotenuse scans s <= 2*limit and keeps records with z <= limit.
class SideEnumerator {
public:
    enum class Bound { side, hypotenuse };

    // force_exact keeps the arbitrary-precision route even when the bound
    // is small enough for the overflow-checked uint64 path; tests use it
    // to pin agreement between the two routes.
    SideEnumerator(Bound bound, const Int& limit, bool force_exact = false);

    std::optional<JoinedRecord> next();

private:
    void refill_fast();
    void refill_exact();

    bool fast_ = false;
    bool done_ = false;
    bool has_z_cap_ = false;
    std::uint64_t s_next_ = 2;
    std::uint64_t s_end_ = 0;
    std::uint64_t z_cap_ = 0;
    Int s_next_big_, s_end_big_, z_cap_big_;
    std::vector<JoinedRecord> pending_;
    std::size_t pending_idx_ = 0;
};

// Convenience eager form used by tests and small bounds.
std::vector<JoinedRecord> enumerate_triples_by_side(const Int& s_max);

} // namespace gnomon

#endif
