#ifndef DSO_RANDOM_HPP
#define DSO_RANDOM_HPP

#include <cstdint>

#include "dso/graph.hpp"

namespace dso {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen over <random> engines with
/// library distributions because its whole output path is fixed by the
/// algorithm, so seeded runs are byte-identical across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53 random mantissa bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound) via rejection sampling; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Erdos-Renyi G(n, p); each pair (i, j), i < j in ascending order, is an
/// edge with probability p. Deterministic in (n, p, seed).
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Simple d-regular graph via the pairing model: shuffle the n*d stubs,
/// pair them off, restart from scratch on any loop or duplicate edge.
/// Requires n*d even and 0 <= d < n. Deterministic in (n, d, seed).
Graph random_regular(int n, int d, std::uint64_t seed);

}  // namespace dso

#endif
