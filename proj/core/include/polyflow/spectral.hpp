#pragma once

#include "polyflow/configuration.hpp"
#include "polyflow/elements.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace polyflow {

/// D(pi)_p applied to X_p: tangent to N at pi(p).
TangentVectors pushed_field(ElementKind kind, FieldVariant variant, const Configuration& p);

/// tau(X_p) - <tau(X_p), tau(p)> tau(p). Agrees with pushed_field on N and
/// its ambient Jacobian at a singularity carries the Hessian spectrum.
TangentVectors tangential_field(ElementKind kind, FieldVariant variant, const Configuration& p);

using VectorFieldFn = std::function<TangentVectors(const Configuration&)>;

/// Central finite-difference Jacobian over all 3n ambient coordinates
/// (row = output coordinate, column = input coordinate). Columns are evaluated
/// on up to `threads` workers. Throws PreconditionError if an entry is not finite.
Eigen::MatrixXd finite_difference_jacobian(const VectorFieldFn& f, const Configuration& p, double h = 1e-5,
                                           std::size_t threads = 0);

/// Jacobian of the raw field X at p.
Eigen::MatrixXd field_jacobian(ElementKind kind, FieldVariant variant, const Configuration& p, double h = 1e-5);

/// |J - J^T|_F / |J|_F (0 for the zero matrix).
double asymmetry_ratio(const Eigen::MatrixXd& j);

enum class JacobianMode {
    tangential,          ///< eigenvalues of the Jacobian of tangential_field (default)
    pushed_symmetrized,  ///< eigenvalues of 1/2 (J + J^T) for J the Jacobian of pushed_field
};

struct SpectrumOptions {
    double fd_step = 1e-5;
    double group_tol = 1e-4;
    double zero_tol = 1e-6;
    JacobianMode mode = JacobianMode::tangential;
};

struct EigenCluster {
    double value = 0.0;
    std::size_t multiplicity = 0;
};

struct Spectrum {
    std::vector<double> eigenvalues;       ///< real parts, ascending
    std::vector<EigenCluster> nonzero;     ///< clusters of |value| >= zero_tol, ascending
    std::size_t zero_count = 0;
    std::size_t positive_count = 0;
    std::size_t negative_count = 0;
    double max_imag = 0.0;                 ///< largest |imaginary part| seen
    double asymmetry_ratio = 0.0;          ///< of the raw field Jacobian at p
};

/// Spectrum at pi(p). Nonzero eigenvalues are grouped when within group_tol
/// of the first member of their cluster; a cluster's value is its mean.
Spectrum hessian_spectrum(ElementKind kind, FieldVariant variant, const Configuration& p,
                          const SpectrumOptions& options = {});

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
};

/// Eigenvalue signs at a collinear tetrahedron. Throws PreconditionError for
/// a non-collinear input or a vertex count other than 4.
Signature collinear_signature(const Configuration& p, const SpectrumOptions& options = {});

/// {"eigenvalues": [{"value", "multiplicity"}], "zero_count", "positive_count",
///  "negative_count", "max_imag", "asymmetry_ratio"}
std::string spectrum_to_json(const Spectrum& s, int indent = 2);

}  // namespace polyflow
