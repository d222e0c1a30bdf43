#ifndef FGSP6_VERIFY_CACHE_HPP
#define FGSP6_VERIFY_CACHE_HPP

#include <cstdint>
#include <vector>

#include "fgsp6/quat.hpp"
#include "fgsp6/scalar.hpp"

namespace fgsp6 {

// Per-ring data for group-element membership verification: the trace Gram
// of H3(B) in coordinates and the values of the polarized quartic form
// (scaled by 12) on all 4-multisets of basis vectors of W, in lexicographic
// multiset order.  Built once, on the first verification over the ring.
struct QuaternionRing::VerifyCache {
    explicit VerifyCache(const QuaternionRing& ring);  // defined with the engine

    bool i64_ok = false;                 // ring constants fit in int64
    std::int64_t gram_j[15][15] = {};    // tr(,) Gram on the 15 J coordinates
    std::vector<std::int64_t> rhs12;     // 12 * fourlinear on basis multisets
    std::vector<Integer> rhs12z;         // exact copy (for the wide fallback)
    double log2_row_limit = 0;           // max log2 |entry| the int128 path allows
};

}  // namespace fgsp6

#endif
