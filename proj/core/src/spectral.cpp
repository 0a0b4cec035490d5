#include "polyflow/spectral.hpp"

#include "polyflow/error.hpp"
#include "polyflow/parallel.hpp"
#include "polyflow/quotient.hpp"

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace polyflow {

TangentVectors pushed_field(ElementKind kind, FieldVariant variant, const Configuration& p) {
    return push_tangent(p, field(kind, variant, p));
}

TangentVectors tangential_field(ElementKind kind, FieldVariant variant, const Configuration& p) {
    const TangentVectors tx = tau(field(kind, variant, p));
    const Configuration tp = tau(p);
    return tx - dot(tx, tp) * tp;
}

Eigen::MatrixXd finite_difference_jacobian(const VectorFieldFn& f, const Configuration& p, double h,
                                           std::size_t threads) {
    const Eigen::VectorXd x0 = p.flat();
    const auto dim = x0.size();
    const auto rows = static_cast<Eigen::Index>(3 * f(p).size());
    Eigen::MatrixXd j(rows, dim);
    parallel_for(
        static_cast<std::size_t>(dim),
        [&](std::size_t c) {
            const auto col = static_cast<Eigen::Index>(c);
            Eigen::VectorXd xp = x0;
            Eigen::VectorXd xm = x0;
            xp(col) += h;
            xm(col) -= h;
            j.col(col) = (f(Configuration::from_flat(xp)).flat() - f(Configuration::from_flat(xm)).flat()) / (2.0 * h);
        },
        threads == 0 ? thread_count() : threads);
    if (!j.allFinite()) throw PreconditionError("finite-difference Jacobian has non-finite entries");
    return j;
}

Eigen::MatrixXd field_jacobian(ElementKind kind, FieldVariant variant, const Configuration& p, double h) {
    require_variant(kind, variant);
    require_vertex_count(kind, p);
    return finite_difference_jacobian([&](const Configuration& q) { return field(kind, variant, q); }, p, h);
}

double asymmetry_ratio(const Eigen::MatrixXd& j) {
    const double n = j.norm();
    return n > 0.0 ? (j - j.transpose()).norm() / n : 0.0;
}

namespace {

Spectrum summarize(std::vector<double> values, double max_imag, const SpectrumOptions& options) {
    std::sort(values.begin(), values.end());
    Spectrum s;
    s.max_imag = max_imag;
    for (double v : values) {
        if (std::abs(v) < options.zero_tol) {
            ++s.zero_count;
            continue;
        }
        (v > 0 ? s.positive_count : s.negative_count)++;
    }
    std::size_t i = 0;
    while (i < values.size()) {
        if (std::abs(values[i]) < options.zero_tol) {
            ++i;
            continue;
        }
        const double first = values[i];
        double sum = 0.0;
        std::size_t k = 0;
        while (i < values.size() && std::abs(values[i]) >= options.zero_tol && values[i] - first <= options.group_tol) {
            sum += values[i];
            ++k;
            ++i;
        }
        s.nonzero.push_back({sum / static_cast<double>(k), k});
    }
    s.eigenvalues = std::move(values);
    return s;
}

}  // namespace

Spectrum hessian_spectrum(ElementKind kind, FieldVariant variant, const Configuration& p,
                          const SpectrumOptions& options) {
    require_variant(kind, variant);
    require_vertex_count(kind, p);
    const Configuration q = pi(p);

    std::vector<double> values;
    double max_imag = 0.0;
    if (options.mode == JacobianMode::tangential) {
        const Eigen::MatrixXd j = finite_difference_jacobian(
            [&](const Configuration& x) { return tangential_field(kind, variant, x); }, q, options.fd_step);
        const Eigen::EigenSolver<Eigen::MatrixXd> solver(j, false);
        if (solver.info() != Eigen::Success) throw PreconditionError("eigenvalue solver failed");
        for (const auto& ev : solver.eigenvalues()) {
            values.push_back(ev.real());
            max_imag = std::max(max_imag, std::abs(ev.imag()));
        }
    } else {
        const Eigen::MatrixXd j = finite_difference_jacobian(
            [&](const Configuration& x) { return pushed_field(kind, variant, x); }, q, options.fd_step);
        const Eigen::MatrixXd sym = 0.5 * (j + j.transpose());
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) throw PreconditionError("eigenvalue solver failed");
        for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) values.push_back(solver.eigenvalues()(i));
    }

    Spectrum s = summarize(std::move(values), max_imag, options);
    s.asymmetry_ratio = asymmetry_ratio(field_jacobian(kind, variant, q, options.fd_step));
    return s;
}

Signature collinear_signature(const Configuration& p, const SpectrumOptions& options) {
    if (p.size() != 4) throw PreconditionError("collinear signature is defined for tetrahedra only");
    if (!is_collinear(p)) throw PreconditionError("configuration is not collinear");
    const Spectrum s = hessian_spectrum(ElementKind::tetrahedron, FieldVariant::mean_volume_gradient, p, options);
    return {s.positive_count, s.negative_count};
}

std::string spectrum_to_json(const Spectrum& s, int indent) {
    nlohmann::ordered_json j;
    j["eigenvalues"] = nlohmann::ordered_json::array();
    for (const auto& c : s.nonzero) {
        j["eigenvalues"].push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
    }
    j["zero_count"] = s.zero_count;
    j["positive_count"] = s.positive_count;
    j["negative_count"] = s.negative_count;
    j["max_imag"] = s.max_imag;
    j["asymmetry_ratio"] = s.asymmetry_ratio;
    return j.dump(indent);
}

}  // namespace polyflow
