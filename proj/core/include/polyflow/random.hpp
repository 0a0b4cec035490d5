#pragma once

#include "polyflow/configuration.hpp"
#include "polyflow/elements.hpp"

#include <cstdint>
#include <random>

namespace polyflow {

/// 64-bit LCG x <- a x + c mod 2^64 with Knuth's MMIX constants.
using Lcg64 = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL>;

/// Seeded generator producing doubles from the top 53 bits of each LCG state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    /// (x >> 11) * 2^-53, in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    Vec3 uniform_vec3(double lo, double hi) {
        const double x = uniform(lo, hi);
        const double y = uniform(lo, hi);
        const double z = uniform(lo, hi);
        return {x, y, z};
    }

private:
    Lcg64 engine_;
};

enum class Orientation { any, positive };

inline constexpr double kRandomRejectThreshold = 1e-6;

/// Vertices i.i.d. uniform in [-1,1]^3 (x, y, z drawn in that order, vertex by
/// vertex), redrawn until normalized_f_value exceeds the threshold (positive)
/// or its absolute value does (any).
Configuration random_configuration(ElementKind kind, FieldVariant variant, Rng& rng,
                                   Orientation orientation = Orientation::positive);

Configuration random_configuration(ElementKind kind, FieldVariant variant, std::uint64_t seed,
                                   Orientation orientation = Orientation::positive);

}  // namespace polyflow
