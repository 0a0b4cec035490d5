#include "polyflow/quotient.hpp"

#include "polyflow/error.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace polyflow {

Configuration tau(const Configuration& p) {
    if (p.size() < 2) throw SizeMismatchError("tau needs at least 2 points");
    Configuration out = p;
    const Vec3 last = p[p.size() - 1];
    for (auto& v : out) v -= last;
    out[out.size() - 1].setZero();
    return out;
}

Configuration sigma(const Configuration& p) {
    const double n = p.norm();
    if (!(n > 0.0)) throw DegenerateConfigurationError("cannot normalize the zero configuration");
    return p * (1.0 / n);
}

Configuration pi(const Configuration& p) {
    const Configuration t = tau(p);
    if (!(t.norm() > 0.0)) throw DegenerateConfigurationError("all points coincide");
    return sigma(t);
}

TangentVectors push_tangent(const Configuration& p, const TangentVectors& v) {
    if (p.size() != v.size()) throw SizeMismatchError("push_tangent: point and vector sizes differ");
    const Configuration t = tau(p);
    const double tn = t.norm();
    if (!(tn > 0.0)) throw DegenerateConfigurationError("all points coincide");
    TangentVectors w = tau(v);
    const double radial = dot(w, t) / (tn * tn);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= radial * t[i];
    return w * (1.0 / tn);
}

TangentVectors psi(const TangentVectors& v) {
    const double n = v.norm();
    if (n == 0.0) return v;
    return v * (1.0 / std::sqrt(n));
}

Configuration centered_unit(const Configuration& p) {
    return sigma(p.translated(-p.centroid()));
}

bool is_collinear(const Configuration& p, double tol) {
    if (p.size() < 3) return true;
    Eigen::MatrixXd m(static_cast<Eigen::Index>(p.size()), 3);
    const Vec3 c = p.centroid();
    for (std::size_t i = 0; i < p.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = (p[i] - c).transpose();
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s(0) == 0.0) return true;
    return s(1) < tol * s(0);
}

bool on_sphere(const Configuration& p, double tol) {
    if (p.empty()) return false;
    return p[p.size() - 1].norm() <= tol && std::abs(p.norm() - 1.0) <= tol;
}

}  // namespace polyflow
