#pragma once

#include <cstdint>
#include <string_view>

namespace qfx {

// Process-wide base seed.  Set once at startup (CLI --seed); every
// randomized routine derives its own stream from (seed, input hash), so
// parallel and serial runs of the same corpus agree.
uint64_t global_seed();
void set_global_seed(uint64_t seed);

constexpr uint64_t kDefaultSeed = 0x5eed0001u;

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a64(std::string_view bytes, uint64_t h = 0xcbf29ce484222325ull) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t mix_seed(uint64_t seed, uint64_t input_hash) {
    uint64_t s = seed ^ (0x9e3779b97f4a7c15ull + input_hash);
    splitmix64(s);
    return splitmix64(s);
}

// xoshiro256** with splitmix-seeded state; portable and deterministic
// across platforms (std:: distributions are not).
class Rng {
public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    uint64_t next() {
        auto rotl = [](uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, n) by rejection; n >= 1.
    uint64_t below(uint64_t n) {
        uint64_t limit = ~uint64_t{0} - ~uint64_t{0} % n;
        uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

private:
    uint64_t s_[4];
};

}  // namespace qfx
