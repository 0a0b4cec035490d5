#include "polyflow/flow.hpp"

#include "polyflow/csv.hpp"
#include "polyflow/error.hpp"
#include "polyflow/quotient.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace polyflow {

namespace {

SingularityResidual residual_at(const Configuration& p_on_n, const TangentVectors& x) {
    const TangentVectors t = tau(x);
    const double lambda = dot(t, p_on_n);
    double r2 = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) r2 += (t[i] - lambda * p_on_n[i]).squaredNorm();
    return {std::sqrt(r2), lambda};
}

double edge_spread_of(ElementKind kind, const Configuration& p) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& [a, b] : edges(kind)) {
        const double len = (p[static_cast<std::size_t>(a - 1)] - p[static_cast<std::size_t>(b - 1)]).norm();
        lo = std::min(lo, len);
        hi = std::max(hi, len);
    }
    return hi > 0.0 ? (hi - lo) / hi : 0.0;
}

}  // namespace

std::string_view to_string(Normalization n) { return n == Normalization::psi ? "psi" : "none"; }

std::string_view to_string(SingularityTag tag) {
    switch (tag) {
        case SingularityTag::optimal_positive: return "optimal_positive";
        case SingularityTag::optimal_negative: return "optimal_negative";
        case SingularityTag::level0_singular: return "level0_singular";
        case SingularityTag::nonsingular: return "nonsingular";
    }
    return "unknown";
}

SingularityResidual singularity_residual(ElementKind kind, FieldVariant variant, const Configuration& p) {
    require_variant(kind, variant);
    require_vertex_count(kind, p);
    const Configuration q = pi(p);
    return residual_at(q, field(kind, variant, q));
}

SingularityClass classify(ElementKind kind, FieldVariant variant, const Configuration& p, double tol,
                          double lambda_tol) {
    const auto [residual, lambda] = singularity_residual(kind, variant, p);
    SingularityClass c{SingularityTag::nonsingular, lambda, residual};
    if (residual >= tol) return c;
    // Collinear configurations have every tet volume zero, so lambda = 0 there.
    if (std::abs(lambda) < lambda_tol || is_collinear(p)) {
        c.tag = SingularityTag::level0_singular;
    } else {
        c.tag = lambda > 0 ? SingularityTag::optimal_positive : SingularityTag::optimal_negative;
    }
    return c;
}

FlowResult integrate(ElementKind kind, FieldVariant variant, const Configuration& p0, const FlowSettings& settings) {
    require_variant(kind, variant);
    require_vertex_count(kind, p0);
    if (!(settings.step > 0.0) || !(settings.tol > 0.0)) {
        throw PreconditionError("flow step and tolerance must be positive");
    }
    if (!p0.all_finite()) throw DivergenceError("non-finite start configuration", 0);

    FlowResult result;
    Configuration p = pi(p0);
    const bool enforce_monotone = is_gradient_field(kind, variant);
    double step = settings.step;

    {
        const double xn = field(kind, variant, p).norm();
        const double bound = settings.normalization == Normalization::psi ? 2.0 * std::sqrt(xn) : 2.0 * xn;
        if (step * bound >= 2.0) {
            result.warnings.push_back("step " + format_double(step) + " times spectral bound estimate " +
                                      format_double(bound) + " is not below 2; the iteration may oscillate");
        }
    }

    for (std::size_t it = 0;; ++it) {
        const TangentVectors x = field(kind, variant, p);
        const SingularityResidual sr = residual_at(p, x);
        if (!std::isfinite(sr.residual)) throw DivergenceError("non-finite field value", it);

        TrajectoryRow row;
        row.iteration = it;
        row.f = normalized_f_value(kind, variant, p);
        row.residual = sr.residual;
        row.lambda = sr.lambda;
        row.edge_spread = edge_spread_of(kind, p);
        if (settings.record_points) row.point = p;
        result.trajectory.push_back(std::move(row));
        result.iterations = it;

        if (sr.residual < settings.tol) {
            result.status = FlowStatus::converged;
            break;
        }
        if (it >= settings.max_iters) {
            result.status = FlowStatus::max_iterations;
            break;
        }

        const TangentVectors direction =
            push_tangent(p, settings.normalization == Normalization::psi ? psi(x) : x);
        const double f0 = result.trajectory.back().f;
        const double min_step = settings.step * 1e-12;
        Configuration next;
        for (;;) {
            const Configuration candidate = p + step * direction;
            const double scale = tau(candidate).norm();
            if (!candidate.all_finite() || !std::isfinite(scale) || scale == 0.0) {
                throw DivergenceError("non-finite configuration", it + 1);
            }
            next = pi(candidate);
            if (!enforce_monotone || step <= min_step) break;
            const double f1 = normalized_f_value(kind, variant, next);
            if (f1 >= f0 - 1e-13 * std::max(1.0, std::abs(f0))) break;
            step *= 0.5;
            ++result.step_halvings;
        }
        p = std::move(next);
    }

    result.final_point = p;
    result.final_step = step;
    result.classification = classify(kind, variant, p, settings.tol, settings.lambda_tol);
    return result;
}

ShapeMetrics shape_metrics(ElementKind kind, const Configuration& p) {
    require_vertex_count(kind, p);
    ShapeMetrics m;
    m.edge_length_min = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const auto& [a, b] : edges(kind)) {
        const double len = (p[static_cast<std::size_t>(a - 1)] - p[static_cast<std::size_t>(b - 1)]).norm();
        m.edge_length_min = std::min(m.edge_length_min, len);
        m.edge_length_max = std::max(m.edge_length_max, len);
        sum += len;
    }
    const double mean_edge = sum / static_cast<double>(edges(kind).size());
    m.edge_spread = m.edge_length_max > 0.0 ? (m.edge_length_max - m.edge_length_min) / m.edge_length_max : 0.0;

    for (const auto& f : faces(kind)) {
        if (f.size() < 4) continue;
        Eigen::MatrixXd pts(static_cast<Eigen::Index>(f.size()), 3);
        Vec3 c = Vec3::Zero();
        for (int v : f) c += p[static_cast<std::size_t>(v - 1)];
        c /= static_cast<double>(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) {
            pts.row(static_cast<Eigen::Index>(j)) = (p[static_cast<std::size_t>(f[j] - 1)] - c).transpose();
        }
        const Eigen::JacobiSVD<Eigen::MatrixXd> svd(pts, Eigen::ComputeThinV);
        const Vec3 normal = svd.matrixV().col(2);
        for (Eigen::Index j = 0; j < pts.rows(); ++j) {
            const double d = std::abs(pts.row(j).dot(normal));
            if (mean_edge > 0.0) m.face_planarity_max_deviation = std::max(m.face_planarity_max_deviation, d / mean_edge);
        }
        for (std::size_t j = 0; j < f.size(); ++j) {
            const Vec3& prev = p[static_cast<std::size_t>(f[(j + f.size() - 1) % f.size()] - 1)];
            const Vec3& here = p[static_cast<std::size_t>(f[j] - 1)];
            const Vec3& next = p[static_cast<std::size_t>(f[(j + 1) % f.size()] - 1)];
            const Vec3 u = prev - here;
            const Vec3 w = next - here;
            const double denom = u.norm() * w.norm();
            if (denom > 0.0) m.corner_angle_max_deviation = std::max(m.corner_angle_max_deviation, std::abs(u.dot(w)) / denom);
        }
    }
    const double v = mean_volume(kind, p);
    m.orientation_sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
    return m;
}

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectoryRow>& rows) {
    os << "iteration,f,residual,lambda,edge_spread\n";
    for (const auto& r : rows) {
        os << r.iteration << ',' << format_double(r.f) << ',' << format_double(r.residual) << ','
           << format_double(r.lambda) << ',' << format_double(r.edge_spread) << '\n';
    }
}

}  // namespace polyflow
