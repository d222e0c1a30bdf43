#ifndef FGSP6_RANDOM_HPP
#define FGSP6_RANDOM_HPP

#include <cstdint>
#include <random>

#include "fgsp6/scalar.hpp"

namespace fgsp6 {

// The single deterministic generator used by every randomized suite.
// Reduction is done by explicit modulo, not std::uniform_int_distribution,
// so identical seeds give identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [lo, hi]
    long next_long(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next_u64() % span);
    }

    bool next_bool() { return (next_u64() & 1u) != 0; }

    // Small exact rationals: integers in [lo,hi], occasionally halved.
    // Exact identities hold for any values; small ones keep suites quick.
    Rational next_rational(long lo = -3, long hi = 3, bool allow_half = true) {
        Rational q(next_long(lo, hi));
        if (allow_half && next_u64() % 8 == 0) q /= 2;
        return q;
    }

    GaussianRational next_cscalar(long lo = -3, long hi = 3) {
        return {next_rational(lo, hi), next_rational(lo, hi)};
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace fgsp6

#endif
