#pragma once

#include <cstdint>

namespace packmeasure {

// splitmix64: used both as a seed-stream deriver and as the per-cascade
// generator. Deterministic across platforms, unlike std:: distributions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform in [0, bound), bound > 0; rejection sampling keeps it unbiased
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

// Derives an independent stream seed from (master, index).
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mix(master ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
    mix.next();
    return mix.next();
}

}  // namespace packmeasure
