#include "polyflow/random.hpp"

#include <cmath>

namespace polyflow {

Configuration random_configuration(ElementKind kind, FieldVariant variant, Rng& rng, Orientation orientation) {
    require_variant(kind, variant);
    const std::size_t n = vertex_count(kind);
    for (;;) {
        Configuration p(n);
        for (auto& v : p) v = rng.uniform_vec3(-1.0, 1.0);
        const double f = normalized_f_value(kind, variant, p);
        const bool ok = orientation == Orientation::positive ? f > kRandomRejectThreshold
                                                             : std::abs(f) > kRandomRejectThreshold;
        if (ok) return p;
    }
}

Configuration random_configuration(ElementKind kind, FieldVariant variant, std::uint64_t seed,
                                   Orientation orientation) {
    Rng rng(seed);
    return random_configuration(kind, variant, rng, orientation);
}

}  // namespace polyflow
