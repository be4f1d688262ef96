#pragma once

#include <cstdint>

namespace sierpile {

// Counter-based splittable generator. A (seed, stream) pair plus a call counter
// is hashed through the SplitMix64 finalizer, so independent streams can be
// consumed from any thread schedule with identical results.
class CounterRng {
   public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed ^ 0x9e3779b97f4a7c15ULL) ^ mix(stream * 0xbf58476d1ce4e5b9ULL + 1)) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // uniform in [0, n) without modulo bias
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t x, r;
        do {
            x = next_u64();
            r = x % n;
        } while (x - r > std::uint64_t(-1) - (n - 1));
        return r;
    }

    double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

   private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }
    std::uint64_t state_;
};

}  // namespace sierpile
