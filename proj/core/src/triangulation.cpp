#include "polyflow/elements.hpp"

#include "polyflow/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>

namespace polyflow {

namespace {

using Tri = std::array<int, 3>;

Tri canonical(Tri f) {
    std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
    return f;
}

double tet_volume(const Configuration& ref, const TetIndices& t) {
    return tet_signed_volume(ref[t[0] - 1], ref[t[1] - 1], ref[t[2] - 1], ref[t[3] - 1]);
}

// Volume from the (planar) reference facets: (1/6) sum nu(face) . p_face[0].
double facet_volume(ElementKind kind, const Configuration& ref) {
    double v = 0.0;
    for (const auto& f : faces(kind)) {
        v += nu(ref.points(), std::span<const int>(f)).dot(ref[f.front() - 1]);
    }
    return v / 6.0;
}

bool lies_on_facet(ElementKind kind, const Tri& tri) {
    for (const auto& f : faces(kind)) {
        const bool all = std::all_of(tri.begin(), tri.end(), [&](int v) {
            return std::find(f.begin(), f.end(), v) != f.end();
        });
        if (all) return true;
    }
    return false;
}

// Interior faces of a genuine triangulation cancel in oppositely oriented
// pairs; what remains must cover the element boundary exactly once.
bool boundary_is_surface(ElementKind kind, const std::vector<TetIndices>& tets) {
    std::map<Tri, int> chain;
    for (const auto& t : tets) {
        const auto [a, b, c, d] = t;
        for (Tri f : {Tri{b, c, d}, Tri{a, d, c}, Tri{a, b, d}, Tri{a, c, b}}) {
            const Tri reversed = canonical({f[0], f[2], f[1]});
            auto it = chain.find(reversed);
            if (it != chain.end() && it->second > 0) {
                if (--it->second == 0) chain.erase(it);
            } else {
                ++chain[canonical(f)];
            }
        }
    }
    for (const auto& [tri, count] : chain) {
        if (count != 1 || !lies_on_facet(kind, tri)) return false;
    }
    return true;
}

std::size_t tets_per_triangulation(ElementKind kind) {
    switch (kind) {
        case ElementKind::tetrahedron: return 1;
        case ElementKind::pyramid: return 2;
        case ElementKind::prism: return 3;
        case ElementKind::hexahedron: return 5;  // the two corner-cut triangulations
        case ElementKind::octahedron: return 4;
    }
    return 0;
}

std::vector<Triangulation> enumerate(ElementKind kind) {
    const Configuration ref = reference_shape(kind);
    const int n = static_cast<int>(ref.size());
    const double total = facet_volume(kind, ref);
    const double eps = 1e-9 * std::abs(total);

    std::vector<TetIndices> candidates;
    std::vector<double> volumes;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    TetIndices t{a, b, c, d};
                    double v = tet_volume(ref, t);
                    if (std::abs(v) <= eps) continue;
                    if (v < 0) {
                        std::swap(t[2], t[3]);
                        v = -v;
                    }
                    candidates.push_back(t);
                    volumes.push_back(v);
                }

    // Largest first, so the remaining volume is bounded by slots * volumes[i].
    std::vector<std::size_t> order(candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return volumes[x] > volumes[y]; });
    {
        std::vector<TetIndices> c;
        std::vector<double> v;
        for (auto i : order) {
            c.push_back(candidates[i]);
            v.push_back(volumes[i]);
        }
        candidates = std::move(c);
        volumes = std::move(v);
    }

    const std::size_t k = tets_per_triangulation(kind);
    std::vector<Triangulation> out;
    std::vector<TetIndices> chosen;
    // Two tets sharing an equally oriented face overlap, so each oriented face is used once.
    std::array<bool, 9 * 9 * 9> face_used{};
    auto face_keys = [](const TetIndices& t) {
        const auto [a, b, c, d] = t;
        std::array<std::size_t, 4> keys{};
        std::size_t i = 0;
        for (Tri f : {Tri{b, c, d}, Tri{a, d, c}, Tri{a, b, d}, Tri{a, c, b}}) {
            const Tri g = canonical(f);
            keys[i++] = static_cast<std::size_t>((g[0] * 9 + g[1]) * 9 + g[2]);
        }
        return keys;
    };
    // Depth-first over increasing candidate index with a running volume bound.
    auto search = [&](auto&& self, std::size_t start, double vol) -> void {
        if (chosen.size() == k) {
            if (std::abs(vol - total) > eps) return;
            std::array<bool, 9> used{};
            for (const auto& t : chosen)
                for (int v : t) used[static_cast<std::size_t>(v)] = true;
            for (int v = 1; v <= n; ++v)
                if (!used[static_cast<std::size_t>(v)]) return;
            if (boundary_is_surface(kind, chosen)) out.push_back(chosen);
            return;
        }
        for (std::size_t i = start; i < candidates.size(); ++i) {
            if (vol + static_cast<double>(k - chosen.size()) * volumes[i] < total - eps) break;
            if (vol + volumes[i] > total + eps) continue;
            const auto keys = face_keys(candidates[i]);
            if (std::any_of(keys.begin(), keys.end(), [&](std::size_t key) { return face_used[key]; })) continue;
            for (auto key : keys) face_used[key] = true;
            chosen.push_back(candidates[i]);
            self(self, i + 1, vol + volumes[i]);
            chosen.pop_back();
            for (auto key : keys) face_used[key] = false;
        }
    };
    search(search, 0, 0.0);
    return out;
}

}  // namespace

const std::vector<Triangulation>& triangulations(ElementKind kind) {
    static std::array<std::vector<Triangulation>, 5> tables;
    static std::once_flag once;
    std::call_once(once, [] {
        for (ElementKind k : kAllElementKinds) tables[static_cast<std::size_t>(k)] = enumerate(k);
    });
    return tables[static_cast<std::size_t>(kind)];
}

}  // namespace polyflow
