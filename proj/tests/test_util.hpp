#ifndef RINF_TEST_UTIL_HPP
#define RINF_TEST_UTIL_HPP

#include <cstdint>
#include <random>

namespace rinf::testutil {

// Seeded generator with explicit modulo mapping so sequences are identical
// across platforms and standard-library implementations.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi) { // inclusive
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(eng() % span);
    }

    std::int64_t nonzero(std::int64_t lo, std::int64_t hi) {
        std::int64_t v = 0;
        do { v = range(lo, hi); } while (v == 0);
        return v;
    }
};

} // namespace rinf::testutil

#endif
