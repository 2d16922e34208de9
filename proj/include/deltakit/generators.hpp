#pragma once

#include <cstdint>

#include "deltakit/fmatrix.hpp"
#include "deltakit/graph.hpp"
#include "deltakit/setsys.hpp"

namespace dmk {

// SplitMix64: splittable 64-bit generator; every suite echoes its seed so
// corpora reproduce exactly.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n > 0
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    bool chance(double prob) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < prob;
    }

    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

// "a", "b", ... for n <= 24.
GroundSet default_ground(int n);

// All r-subsets of an n-element ground set.
SetSystem uniform_matroid(int r, int n);

// Proper set system with a seed-determined family size.
SetSystem random_set_system(int n, std::uint64_t seed);

Graph random_graph(int n, double loop_prob, std::uint64_t seed);

FMatrix random_symmetric(std::uint32_t p, int n, std::uint64_t seed);

// Zero diagonal, A^T = -A.
FMatrix random_skew(std::uint32_t p, int n, std::uint64_t seed);

}  // namespace dmk
