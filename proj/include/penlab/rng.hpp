#pragma once

// Deterministic, platform-independent random sampling. std::uniform_int_distribution
// is implementation-defined, so sampling uses SplitMix64 with explicit modular
// reduction: the same seed yields the same stream everywhere.

#include "penlab/gaussian.hpp"

#include <cstdint>

namespace penlab {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Independent stream for trial `index` of a scenario seeded with `seed`.
    static Rng forTrial(std::uint64_t seed, std::uint64_t index) {
        Rng mixer(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
        mixer.next();
        return Rng(mixer.next());
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] (inclusive). Modulo reduction: the tiny bias is
    // irrelevant here and determinism matters more than equidistribution.
    std::int64_t uniformInt(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

  private:
    std::uint64_t state_;
};

// One random scalar: numerators uniform in [-bound, bound], denominators uniform
// in [1, bound]; real_only suppresses the imaginary part. bound must be >= 1.
GaussianRational randomScalar(Rng& rng, long bound, bool realOnly);

}  // namespace penlab
