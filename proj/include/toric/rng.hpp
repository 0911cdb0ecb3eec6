#pragma once

#include <cstdint>

namespace toric {

// splitmix64. Fixed algorithm so seeded runs reproduce bit-for-bit on any
// platform; std::mt19937 + distributions would not (distributions are
// implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n >= 1, by rejection
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    // uniform in [lo, hi] inclusive
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace toric
