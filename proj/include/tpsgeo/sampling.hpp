#pragma once

#include "tpsgeo/model_spec.hpp"

#include <cstdint>
#include <vector>

namespace tpsgeo {

/// splitmix64 sequence; the documented generator, so independent
/// implementations reproduce the same sample points from the same seed.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }
};

/// Uniform samples in the model's box, in point-index order. Points where
/// the frame's 1-norm condition estimate exceeds cond_limit are redrawn.
/// `margin` shrinks the box on both sides (used by finite-difference tests
/// that need room for stencil shifts).
std::vector<std::vector<double>> sample_points(const ModelSpec& spec, int count,
                                               std::uint64_t seed, double margin = 0.0,
                                               double cond_limit = 1e6);

} // namespace tpsgeo
