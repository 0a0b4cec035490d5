#pragma once

#include "polyflow/configuration.hpp"
#include "polyflow/elements.hpp"
#include "polyflow/flow.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace polyflow {

struct MeshElement {
    ElementKind kind = ElementKind::tetrahedron;
    std::vector<std::size_t> nodes;  ///< 0-based vertex indices in canonical order

    friend bool operator==(const MeshElement&, const MeshElement&) = default;
};

struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<MeshElement> elements;
    std::vector<std::size_t> fixed;  ///< 0-based indices of immobile vertices

    friend bool operator==(const Mesh&, const Mesh&) = default;
};

/// Throws SizeMismatchError (node count vs kind) or InvalidIndexError.
void validate(const Mesh& m);

/// The element's vertices in canonical order.
Configuration element_configuration(const Mesh& m, std::size_t element);

/// Sum over elements of their mean volume.
double mesh_mean_volume(const Mesh& m);

/// mesh_mean_volume with the whole node vector replaced by pi(node vector).
double mesh_mean_volume_on_sphere(const Mesh& m);

/// mesh_mean_volume with the node vector replaced by its centroid-centred unit
/// representative. Non-decreasing under small smoothing steps of free meshes.
double mesh_mean_volume_centered(const Mesh& m);

/// mean_volume(centered_unit(reference optimal shape)): the normalizing constant of q.
double q_max(ElementKind kind);

struct QualityReport {
    /// Per element: mean_volume(centered_unit(element)) / q_max(kind). Invariant
    /// under translation and scaling; 1 exactly at the optimal shape, -1 at its mirror.
    std::vector<double> q;
    double mesh_mean_volume = 0.0;
    double min_q = 0.0;
    double mean_q = 0.0;
    double max_q = 0.0;
    std::size_t inverted_count = 0;  ///< elements with q <= 0
};

QualityReport quality_report(const Mesh& m);

/// One smoothing step: evaluate each element's field (Psi-normalized per
/// element when settings.normalization is psi), accumulate per vertex, divide
/// by the number of elements at that vertex and move free vertices by
/// settings.step times the average. Fixed vertices are copied unchanged.
Mesh smooth_step(const Mesh& m, const FlowSettings& settings);

struct SmoothResult {
    Mesh mesh;
    std::vector<QualityReport> history;  ///< history[0] is the input mesh
    std::size_t iterations = 0;
    bool converged = false;              ///< stopped by the quality window
    std::vector<std::string> warnings;
};

inline constexpr std::size_t kQualityWindow = 10;

/// Repeats smooth_step until min q improved by less than quality_tol over the
/// last kQualityWindow steps, or max_iters steps were made. Throws
/// DivergenceError with the step index when a vertex becomes non-finite.
SmoothResult smooth(const Mesh& m, const FlowSettings& settings, std::size_t max_iters, double quality_tol);

}  // namespace polyflow
