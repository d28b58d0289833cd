#pragma once

#include <cstdint>

namespace finicert {

/// SplitMix64. Chosen over std::mt19937_64 because the whole algorithm
/// fits in a dozen lines, so the exact stream can be reproduced in any
/// language from the constants below; seeded runs must be replayable
/// outside this codebase.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// next() reduced modulo n. The modulo bias is below 2^-60 for every
    /// n used here (n <= 16) and keeping the reduction trivial matters
    /// more than removing it: it must be easy to re-derive by hand.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

} // namespace finicert
