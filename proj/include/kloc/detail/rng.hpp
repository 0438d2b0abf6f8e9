#pragma once

#include <cstdint>

namespace kloc::detail {

// splitmix64: tiny self-contained generator, identical output on every
// platform for a given seed. Used wherever a spec'd "seed" parameter
// must reproduce byte-identical results.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, bound); bound > 0. Modulo bias is
    // irrelevant at the bounds used here (all tiny).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Independent stream for (seed, stream) pairs, e.g. one per trial.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0x632BE59BD9B4E019ull + stream * 0x106689D45497FDB5ull));
    return g.next();
}

}  // namespace kloc::detail
