#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace beer {

// splitmix64 step; used to hash seed material into engine seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Mixes a master seed with stream identifiers (word index, salt, ...) so that
// independent simulation streams never share state. Deterministic across
// platforms.
inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> salts) {
    std::uint64_t state = seed;
    std::uint64_t out = splitmix64(state);
    for (std::uint64_t s : salts) {
        state ^= s + 0x9e3779b97f4a7c15ULL + (out << 6) + (out >> 2);
        out = splitmix64(state);
    }
    return out;
}

// Deterministic RNG wrapper. std::mt19937_64 output is fully specified by the
// standard; the distribution helpers below are hand-rolled because the
// std::*_distribution classes are implementation-defined and would break
// byte-for-byte reproducibility across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng for_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> salts) {
        return Rng(derive_seed(seed, salts));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform integer in [0, bound). Masked rejection sampling keeps the
    // result unbiased.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
        std::uint64_t v;
        do {
            v = engine_() & mask;
        } while (v >= bound);
        return v;
    }

    // Bernoulli(p) using the top 53 bits, matching the precision of a double.
    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        const double scaled = p * 9007199254740992.0; // 2^53
        const std::uint64_t threshold = static_cast<std::uint64_t>(scaled);
        return (engine_() >> 11) < threshold;
    }

    // In-place Fisher-Yates shuffle of [first, first+n).
    template <typename T>
    void shuffle(T* first, std::size_t n) {
        for (std::size_t i = n; i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(first[i - 1], first[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace beer
