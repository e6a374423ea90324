#pragma once

#include <cstdint>

namespace kgc {

// splitmix64: tiny, seedable, and fully specified, unlike
// std::uniform_int_distribution whose output may differ between standard
// library implementations.  The randomized checks freeze their seeds, so the
// exact stream matters for reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).  Modulo bias is irrelevant here (n is tiny against
    // 2^64) and determinism is what we need.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace kgc
