#pragma once

#include <cstdint>

namespace coinduel::rng {

/// splitmix64 step (Steele, Lea, Flood); used only to expand seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// xoshiro256** (Blackman, Vigna). Stream s of seed x is seeded from four
/// splitmix64 outputs starting at state x + (s + 1) * 0x9E3779B97F4A7C15;
/// batches of a simulation each own one stream, which makes tallies
/// independent of how batches are scheduled across threads.
class Xoshiro256StarStar {
public:
    Xoshiro256StarStar(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t sm = seed + (stream + 1) * 0x9E3779B97F4A7C15ull;
        for (auto& w : s_) w = splitmix64(sm);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

}  // namespace coinduel::rng
