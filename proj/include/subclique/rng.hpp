#pragma once

#include <cstdint>

namespace subclique {

// splitmix64, used for seeding and for deriving independent stream seeds.
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ generator. Hand-rolled rather than <random> because the
// standard distributions are implementation-defined (they would break
// cross-platform golden tests) and because this sits on the hot path of
// the samplers.
class Rng {
public:
    Rng() : Rng(1) {}

    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    // Independent stream derived from (seed, stream_id).
    static Rng stream(uint64_t seed, uint64_t stream_id) {
        uint64_t sm = seed;
        uint64_t a = splitmix64(sm);
        sm = a ^ (stream_id * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
        return Rng(splitmix64(sm));
    }

    uint64_t next() {
        const uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased uniform draw from {0, ..., bound-1} (Lemire's method).
    uint64_t uniform_index(uint64_t bound) {
        uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<uint64_t>(m);
        if (lo < bound) {
            const uint64_t threshold = (0ULL - bound) % bound;
            while (lo < threshold) {
                x = next();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_double() < p; }

private:
    static uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    uint64_t state_[4];
};

// Stream ids for the named substreams of one estimator run.
enum class RngStream : uint64_t {
    s_draw = 0,
    t_draw = 1,
    clique_sampler = 2,
    popularity = 3,
};

inline Rng make_stream(uint64_t seed, RngStream which) {
    return Rng::stream(seed, static_cast<uint64_t>(which));
}

}  // namespace subclique
