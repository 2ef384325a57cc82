#pragma once

#include <cstdint>

#include "c235/rational.hpp"

namespace c235 {

// splitmix64: tiny, seedable, identical output on every platform.
// std::mt19937 + distribution adapters are implementation-defined, which
// would break byte-identical reports across standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound > 0; modulo bias is irrelevant at these sizes
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // rational with numerator in [-num_max, num_max], denominator in [1, den_max]
    Rational rational(long num_max, long den_max) {
        return rat(range(-num_max, num_max), range(1, den_max));
    }

    RationalVector point(std::size_t dim, long num_max, long den_max) {
        RationalVector p(dim);
        for (auto& c : p) c = rational(num_max, den_max);
        return p;
    }

private:
    std::uint64_t state_;
};

}  // namespace c235
