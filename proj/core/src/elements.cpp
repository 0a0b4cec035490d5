#include "polyflow/elements.hpp"

#include "polyflow/error.hpp"
#include "polyflow/geometry.hpp"
#include "polyflow/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polyflow {

namespace {

const std::vector<std::vector<int>> kTetFaces = {{2, 3, 4}, {1, 4, 3}, {1, 2, 4}, {1, 3, 2}};
const std::vector<std::vector<int>> kPyramidFaces = {{1, 4, 3, 2}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {4, 1, 5}};
const std::vector<std::vector<int>> kPrismFaces = {
    {1, 3, 2}, {4, 5, 6}, {1, 2, 5, 4}, {2, 3, 6, 5}, {3, 1, 4, 6}};
const std::vector<std::vector<int>> kHexFaces = {{1, 4, 3, 2}, {5, 6, 7, 8}, {1, 2, 6, 5},
                                                 {2, 3, 7, 6}, {3, 4, 8, 7}, {4, 1, 5, 8}};
const std::vector<std::vector<int>> kOctFaces = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 2},
                                                 {6, 3, 2}, {6, 4, 3}, {6, 5, 4}, {6, 2, 5}};

std::vector<std::array<int, 2>> edges_from_faces(const std::vector<std::vector<int>>& fs) {
    std::vector<std::array<int, 2>> out;
    for (const auto& f : fs) {
        for (std::size_t j = 0; j < f.size(); ++j) {
            int a = f[j];
            int b = f[(j + 1) % f.size()];
            if (a > b) std::swap(a, b);
            const std::array<int, 2> e{a, b};
            if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<std::vector<int>>& face_table(ElementKind kind) {
    switch (kind) {
        case ElementKind::tetrahedron: return kTetFaces;
        case ElementKind::pyramid: return kPyramidFaces;
        case ElementKind::prism: return kPrismFaces;
        case ElementKind::hexahedron: return kHexFaces;
        case ElementKind::octahedron: return kOctFaces;
    }
    throw InvalidVariantError("unknown element kind");
}

TangentVectors pyramid_field(const Configuration& p) {
    TangentVectors x(5);
    x[0] = nu(p, {5, 4, 2}) + nu(p, {5, 4, 3, 2});
    x[1] = nu(p, {5, 1, 3}) + nu(p, {5, 1, 4, 3});
    x[2] = nu(p, {5, 2, 4}) + nu(p, {5, 2, 1, 4});
    x[3] = nu(p, {5, 3, 1}) + nu(p, {5, 3, 2, 1});
    x[4] = 2.0 * nu(p, {1, 2, 3, 4});
    return 0.5 * x;
}

TangentVectors prism_field(const Configuration& p) {
    TangentVectors x(6);
    x[0] = nu(p, {3, 2, 4}) + nu(p, {2, 5, 4, 6, 3});
    x[1] = nu(p, {1, 3, 5}) + nu(p, {3, 6, 5, 4, 1});
    x[2] = nu(p, {2, 1, 6}) + nu(p, {1, 4, 6, 5, 2});
    x[3] = nu(p, {5, 6, 1}) + nu(p, {6, 3, 1, 2, 5});
    x[4] = nu(p, {6, 4, 2}) + nu(p, {4, 1, 2, 3, 6});
    x[5] = nu(p, {4, 5, 3}) + nu(p, {5, 2, 3, 1, 4});
    return 0.5 * x;
}

TangentVectors prism_y_field(const Configuration& p) {
    return TangentVectors{nu(p, {3, 2, 5, 4, 6}), nu(p, {1, 3, 6, 5, 4}), nu(p, {2, 1, 4, 6, 5}),
                          nu(p, {5, 6, 3, 1, 2}), nu(p, {6, 4, 1, 2, 3}), nu(p, {4, 5, 2, 3, 1})};
}

TangentVectors hexahedron_field(const Configuration& p) {
    TangentVectors x(8);
    x[0] = nu(p, {2, 5, 4}) + nu(p, {6, 5, 8, 4, 3, 2});
    x[1] = nu(p, {3, 6, 1}) + nu(p, {7, 6, 5, 1, 4, 3});
    x[2] = nu(p, {4, 7, 2}) + nu(p, {8, 7, 6, 2, 1, 4});
    x[3] = nu(p, {1, 8, 3}) + nu(p, {5, 8, 7, 3, 2, 1});
    x[4] = nu(p, {1, 6, 8}) + nu(p, {6, 7, 8, 4, 1, 2});
    x[5] = nu(p, {2, 7, 5}) + nu(p, {7, 8, 5, 1, 2, 3});
    x[6] = nu(p, {3, 8, 6}) + nu(p, {8, 5, 6, 2, 3, 4});
    x[7] = nu(p, {4, 5, 7}) + nu(p, {5, 6, 7, 3, 4, 1});
    return 0.5 * x;
}

TangentVectors hexahedron_y_field(const Configuration& p) {
    TangentVectors x = hexahedron_field(p);
    // Y adds the normal of the triangle spanned by the three face-diagonal
    // neighbours of the opposite corner.
    x[0] += 0.5 * nu(p, {3, 6, 8});
    x[1] += 0.5 * nu(p, {4, 7, 5});
    x[2] += 0.5 * nu(p, {1, 8, 6});
    x[3] += 0.5 * nu(p, {2, 5, 7});
    x[4] += 0.5 * nu(p, {2, 7, 4});
    x[5] += 0.5 * nu(p, {3, 8, 1});
    x[6] += 0.5 * nu(p, {4, 5, 2});
    x[7] += 0.5 * nu(p, {1, 6, 3});
    return x;
}

TangentVectors octahedron_field(const Configuration& p) {
    // Link cycles of each vertex; equals the average over the three diagonal
    // triangulations (no extra scalar prefactor).
    return TangentVectors{nu(p, {2, 3, 4, 5}), nu(p, {1, 5, 6, 3}), nu(p, {1, 2, 6, 4}),
                          nu(p, {1, 3, 6, 5}), nu(p, {1, 4, 6, 2}), nu(p, {2, 5, 4, 3})};
}

}  // namespace

std::size_t vertex_count(ElementKind kind) {
    switch (kind) {
        case ElementKind::tetrahedron: return 4;
        case ElementKind::pyramid: return 5;
        case ElementKind::prism: return 6;
        case ElementKind::hexahedron: return 8;
        case ElementKind::octahedron: return 6;
    }
    return 0;
}

std::string_view to_string(ElementKind kind) {
    switch (kind) {
        case ElementKind::tetrahedron: return "tetrahedron";
        case ElementKind::pyramid: return "pyramid";
        case ElementKind::prism: return "prism";
        case ElementKind::hexahedron: return "hexahedron";
        case ElementKind::octahedron: return "octahedron";
    }
    return "unknown";
}

std::string_view to_string(FieldVariant variant) {
    switch (variant) {
        case FieldVariant::mean_volume_gradient: return "gradient";
        case FieldVariant::y_variant: return "y-variant";
    }
    return "unknown";
}

std::optional<ElementKind> parse_element_kind(std::string_view name) {
    for (ElementKind k : kAllElementKinds) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

std::optional<FieldVariant> parse_field_variant(std::string_view name) {
    if (name == "gradient" || name == "mean_volume_gradient") return FieldVariant::mean_volume_gradient;
    if (name == "y-variant" || name == "y_variant") return FieldVariant::y_variant;
    return std::nullopt;
}

bool supports_variant(ElementKind kind, FieldVariant variant) {
    if (variant == FieldVariant::mean_volume_gradient) return true;
    return kind == ElementKind::prism || kind == ElementKind::hexahedron;
}

bool is_gradient_field(ElementKind kind, FieldVariant variant) {
    if (!supports_variant(kind, variant)) return false;
    return variant == FieldVariant::mean_volume_gradient || kind == ElementKind::hexahedron;
}

void require_vertex_count(ElementKind kind, const Configuration& p) {
    if (p.size() != vertex_count(kind)) {
        throw SizeMismatchError(std::string(to_string(kind)) + " needs " + std::to_string(vertex_count(kind)) +
                                " vertices, got " + std::to_string(p.size()));
    }
}

void require_variant(ElementKind kind, FieldVariant variant) {
    if (!supports_variant(kind, variant)) {
        throw InvalidVariantError(std::string(to_string(variant)) + " field is not defined for " +
                                  std::string(to_string(kind)));
    }
}

std::span<const std::vector<int>> faces(ElementKind kind) { return face_table(kind); }

std::span<const std::array<int, 2>> edges(ElementKind kind) {
    static const std::array<std::vector<std::array<int, 2>>, 5> tables = {
        edges_from_faces(kTetFaces), edges_from_faces(kPyramidFaces), edges_from_faces(kPrismFaces),
        edges_from_faces(kHexFaces), edges_from_faces(kOctFaces)};
    return tables[static_cast<std::size_t>(kind)];
}

std::array<Vec3, 4> tet_field(const Vec3& p1, const Vec3& p2, const Vec3& p3, const Vec3& p4) {
    const std::array<Vec3, 4> q{p1, p2, p3, p4};
    return {nu(q, {4, 3, 2}), nu(q, {4, 1, 3}), nu(q, {4, 2, 1}), nu(q, {1, 2, 3})};
}

double mean_volume(ElementKind kind, const Configuration& p) {
    require_vertex_count(kind, p);
    const auto& ts = triangulations(kind);
    double total = 0.0;
    for (const auto& t : ts) {
        for (const auto& tet : t) {
            total += tet_signed_volume(p[tet[0] - 1], p[tet[1] - 1], p[tet[2] - 1], p[tet[3] - 1]);
        }
    }
    return total / static_cast<double>(ts.size());
}

TangentVectors field(ElementKind kind, FieldVariant variant, const Configuration& p) {
    require_variant(kind, variant);
    require_vertex_count(kind, p);
    switch (kind) {
        case ElementKind::tetrahedron: {
            const auto x = tet_field(p[0], p[1], p[2], p[3]);
            return TangentVectors{x[0], x[1], x[2], x[3]};
        }
        case ElementKind::pyramid: return pyramid_field(p);
        case ElementKind::prism:
            return variant == FieldVariant::y_variant ? prism_y_field(p) : prism_field(p);
        case ElementKind::hexahedron:
            return variant == FieldVariant::y_variant ? hexahedron_y_field(p) : hexahedron_field(p);
        case ElementKind::octahedron: return octahedron_field(p);
    }
    throw InvalidVariantError("unknown element kind");
}

TangentVectors field_from_triangulations(ElementKind kind, const Configuration& p) {
    require_vertex_count(kind, p);
    const auto& ts = triangulations(kind);
    TangentVectors x(p.size());
    for (const auto& t : ts) {
        for (const auto& tet : t) {
            const auto xt = tet_field(p[tet[0] - 1], p[tet[1] - 1], p[tet[2] - 1], p[tet[3] - 1]);
            for (std::size_t j = 0; j < 4; ++j) x[static_cast<std::size_t>(tet[j] - 1)] += xt[j];
        }
    }
    return x * (1.0 / static_cast<double>(ts.size()));
}

double f_value(ElementKind kind, FieldVariant variant, const Configuration& p) {
    return dot(field(kind, variant, p), p);
}

double normalized_f_value(ElementKind kind, FieldVariant variant, const Configuration& p) {
    return f_value(kind, variant, centered_unit(p));
}

Configuration reference_shape(ElementKind kind, FieldVariant variant) {
    require_variant(kind, variant);
    switch (kind) {
        case ElementKind::tetrahedron:
            return {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0.5, std::sqrt(3.0) / 2.0, 0),
                    Vec3(0.5, std::sqrt(3.0) / 6.0, std::sqrt(2.0 / 3.0))};
        case ElementKind::pyramid:
            return {Vec3(0, 0, 0), Vec3(2, 0, 0), Vec3(2, 2, 0), Vec3(0, 2, 0), Vec3(1, 1, std::sqrt(5.0))};
        case ElementKind::prism: {
            // base edge a = 2
            const double h = variant == FieldVariant::y_variant ? std::sqrt(2.0) : std::sqrt(8.0 / 3.0);
            const double s3 = std::sqrt(3.0);
            return {Vec3(0, 0, 0), Vec3(2, 0, 0), Vec3(1, s3, 0), Vec3(0, 0, h), Vec3(2, 0, h), Vec3(1, s3, h)};
        }
        case ElementKind::hexahedron:
            return {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(1, 1, 0), Vec3(0, 1, 0),
                    Vec3(0, 0, 1), Vec3(1, 0, 1), Vec3(1, 1, 1), Vec3(0, 1, 1)};
        case ElementKind::octahedron:
            return {Vec3(0, 0, 1), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(-1, 0, 0), Vec3(0, -1, 0), Vec3(0, 0, -1)};
    }
    throw InvalidVariantError("unknown element kind");
}

Configuration mirrored_reference_shape(ElementKind kind, FieldVariant variant) {
    Configuration p = reference_shape(kind, variant);
    for (auto& v : p) v.z() = -v.z();
    return p;
}

}  // namespace polyflow
