#pragma once

#include <cassert>
#include <cstdint>

namespace modrank {

// Deterministic splitmix64 stream. Every sampling routine takes an explicit
// seed and owns its generator, so results are reproducible regardless of call
// interleaving or threading.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1].
    double next_unit_open() { return 1.0 - next_unit(); }

    double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    // Uniform integer in [0, bound); bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        assert(bound > 0);
        return static_cast<std::uint64_t>(
            (static_cast<__uint128_t>(next()) * bound) >> 64);
    }

    // Derives an independent stream seed from a base seed and an index.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        Rng r(seed ^ (0x632be59bd9b4e019ull * (index + 1)));
        return r.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace modrank
