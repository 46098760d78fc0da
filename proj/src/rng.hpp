#pragma once

#include <cstdint>

namespace qroute {

// xoshiro256** seeded through splitmix64. Self-contained so that streams are
// reproducible across platforms and standard library versions.
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t x = seed;
        for (auto& word : state_) {
            word = splitmix64(x);
        }
    }

    uint64_t next() {
        uint64_t result = rotl(state_[1] * 5, 7) * 9;
        uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased draw from [0, bound) by rejection.
    uint64_t uniform_below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    static uint64_t splitmix64(uint64_t& x) {
        uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Mixes several values into one stream seed, used to derive independent
    // per-trial streams from a master seed.
    static uint64_t mix(uint64_t a, uint64_t b, uint64_t c = 0, uint64_t d = 0) {
        uint64_t x = a;
        uint64_t h = splitmix64(x);
        x ^= b + 0x9e3779b97f4a7c15ULL;
        h ^= splitmix64(x);
        x ^= c + 0xc2b2ae3d27d4eb4fULL;
        h ^= splitmix64(x);
        x ^= d + 0x165667b19e3779f9ULL;
        h ^= splitmix64(x);
        return h;
    }

private:
    static uint64_t rotl(uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    uint64_t state_[4];
};

} // namespace qroute
