#pragma once

#include <cstdint>

namespace otri {

// splitmix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
// generators", OOPSLA 2014). Chosen because the algorithm is fully pinned by
// these three constants, so identical seeds reproduce identical point sets on
// any platform or implementation. Bounded draws use masked rejection, which is
// likewise implementation-independent (std::uniform_int_distribution is not).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound); bound must be >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        std::uint64_t r;
        do {
            r = next() & mask;
        } while (r >= bound);
        return r;
    }

  private:
    std::uint64_t state_;
};

}  // namespace otri
