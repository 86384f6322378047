#pragma once

// SplitMix64: small, seedable and splittable, so that every instance of a
// property sweep can be replayed from (seed, index) alone.

#include <cstdint>

namespace monocat {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    /// Independent stream derived from this one and a label.
    SplitMix64 split(std::uint64_t label) {
        SplitMix64 child(next() ^ (label * 0xd1b54a32d192ed03ULL));
        return child;
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

} // namespace monocat
