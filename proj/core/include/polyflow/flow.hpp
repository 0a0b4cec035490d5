#pragma once

#include "polyflow/configuration.hpp"
#include "polyflow/elements.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace polyflow {

enum class Normalization { psi, none };

std::string_view to_string(Normalization n);

struct FlowSettings {
    double step = 0.05;
    std::size_t max_iters = 100000;
    double tol = 1e-10;                  ///< singularity residual threshold
    Normalization normalization = Normalization::psi;
    double lambda_tol = 1e-8;            ///< |lambda| below this is a level-0 singularity
    bool record_points = true;           ///< keep the configuration in every trajectory row
};

struct SingularityResidual {
    double residual = 0.0;
    double lambda = 0.0;
};

/// lambda = <tau(X_p), p> and residual = |tau(X_p) - lambda p| at p on N.
/// p is projected to N first; residual == 0 iff p's class is a singularity.
SingularityResidual singularity_residual(ElementKind kind, FieldVariant variant, const Configuration& p);

enum class SingularityTag { optimal_positive, optimal_negative, level0_singular, nonsingular };

std::string_view to_string(SingularityTag tag);

struct SingularityClass {
    SingularityTag tag = SingularityTag::nonsingular;
    double lambda = 0.0;
    double residual = 0.0;
};

SingularityClass classify(ElementKind kind, FieldVariant variant, const Configuration& p, double tol = 1e-10,
                          double lambda_tol = 1e-8);

struct TrajectoryRow {
    std::size_t iteration = 0;
    double f = 0.0;            ///< normalized_f_value
    double residual = 0.0;
    double lambda = 0.0;
    double edge_spread = 0.0;
    Configuration point;       ///< on N; empty unless FlowSettings::record_points
};

enum class FlowStatus { converged, max_iterations };

struct FlowResult {
    std::vector<TrajectoryRow> trajectory;
    Configuration final_point;  ///< on N
    FlowStatus status = FlowStatus::max_iterations;
    std::size_t iterations = 0;
    std::size_t step_halvings = 0;
    double final_step = 0.0;
    SingularityClass classification;
    std::vector<std::string> warnings;
};

/// Explicit Euler on N: v = push_tangent(p, X or psi(X)); p <- pi(p + step v).
/// For gradient variants, a step that lowers normalized_f_value is retried
/// with half the step (the reduced step is kept). Stops when the residual is
/// below tol or after max_iters steps. Throws DegenerateConfigurationError
/// for a fully degenerate start and DivergenceError on non-finite values.
FlowResult integrate(ElementKind kind, FieldVariant variant, const Configuration& p0,
                     const FlowSettings& settings = {});

struct ShapeMetrics {
    double edge_length_min = 0.0;
    double edge_length_max = 0.0;
    double edge_spread = 0.0;                  ///< (max - min) / max over canonical edges
    double face_planarity_max_deviation = 0.0; ///< max distance to best-fit face plane / mean edge
    double corner_angle_max_deviation = 0.0;   ///< max |cos| at quad-face corners (0 for rectangles)
    int orientation_sign = 0;                  ///< sign of the mean volume
};

ShapeMetrics shape_metrics(ElementKind kind, const Configuration& p);

/// iteration,f,residual,lambda,edge_spread with 17 significant digits.
void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRow>& rows);

}  // namespace polyflow
