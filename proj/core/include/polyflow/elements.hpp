#pragma once

#include "polyflow/configuration.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyflow {

/// Element types with canonical vertex numbering (1-based labels):
///  - tetrahedron: 1..4, positively oriented when ((p2-p1) x (p3-p1)).(p4-p1) > 0
///  - pyramid:     base cycle (1,2,3,4), apex 5
///  - prism:       bottom (1,2,3), top (4,5,6), vertex i+3 above i
///  - hexahedron:  bottom (1,2,3,4), top (5,6,7,8), vertex i+4 above i
///  - octahedron:  poles 1 and 6, equator cycle (2,3,4,5); opposite pairs (1,6), (2,4), (3,5)
enum class ElementKind { tetrahedron, pyramid, prism, hexahedron, octahedron };

enum class FieldVariant { mean_volume_gradient, y_variant };

inline constexpr std::array<ElementKind, 5> kAllElementKinds = {
    ElementKind::tetrahedron, ElementKind::pyramid, ElementKind::prism, ElementKind::hexahedron,
    ElementKind::octahedron};

std::size_t vertex_count(ElementKind kind);
std::string_view to_string(ElementKind kind);
std::string_view to_string(FieldVariant variant);
std::optional<ElementKind> parse_element_kind(std::string_view name);
std::optional<FieldVariant> parse_field_variant(std::string_view name);

bool supports_variant(ElementKind kind, FieldVariant variant);

/// True when the variant's field is the gradient of a function on M
/// (every mean-volume gradient, and the hexahedron Y-field).
bool is_gradient_field(ElementKind kind, FieldVariant variant);

using TetIndices = std::array<int, 4>;  // 1-based, positively oriented on the reference element
using Triangulation = std::vector<TetIndices>;

/// The triangulation set averaged by the mean volume: tetrahedron 1, pyramid 2,
/// prism 6, hexahedron 2 (the two 5-tet corner triangulations), octahedron 3.
const std::vector<Triangulation>& triangulations(ElementKind kind);

/// Facets as outward-oriented 1-based vertex cycles on the reference element.
std::span<const std::vector<int>> faces(ElementKind kind);

/// Canonical edge set (1-based pairs, first < second).
std::span<const std::array<int, 2>> edges(ElementKind kind);

/// Average over the triangulation set of the summed signed tet volumes.
double mean_volume(ElementKind kind, const Configuration& p);

/// Closed-form field: the mean-volume gradient fields (6 x gradient of the mean
/// volume) or the Y-variants for prism and hexahedron.
TangentVectors field(ElementKind kind, FieldVariant variant, const Configuration& p);

/// Mean over the triangulation set of the scattered tetrahedron fields.
TangentVectors field_from_triangulations(ElementKind kind, const Configuration& p);

/// Tetrahedron field (nu(4,3,2), nu(4,1,3), nu(4,2,1), nu(1,2,3)).
std::array<Vec3, 4> tet_field(const Vec3& p1, const Vec3& p2, const Vec3& p3, const Vec3& p4);

/// f(p) = X_p . p over all 3n coordinates.
double f_value(ElementKind kind, FieldVariant variant, const Configuration& p);

/// f at the centroid-centred unit representative of p's class. Invariant
/// under translation and positive scaling, and non-decreasing along the
/// quotient flow of gradient variants.
double normalized_f_value(ElementKind kind, FieldVariant variant, const Configuration& p);

/// Reference optimal shape: regular unit tetrahedron, the 2x2-base pyramid
/// with apex height sqrt(5), the prism with h/a = sqrt(2/3) (h/a = 1/sqrt(2)
/// for the Y-variant), the unit cube, and the octahedron with vertices at
/// unit distance. All positively oriented.
Configuration reference_shape(ElementKind kind, FieldVariant variant = FieldVariant::mean_volume_gradient);

/// Reflection z -> -z of the reference shape (negatively oriented).
Configuration mirrored_reference_shape(ElementKind kind,
                                       FieldVariant variant = FieldVariant::mean_volume_gradient);

void require_vertex_count(ElementKind kind, const Configuration& p);
void require_variant(ElementKind kind, FieldVariant variant);

}  // namespace polyflow
