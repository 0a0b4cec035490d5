#pragma once

#include <polyflow/configuration.hpp>
#include <polyflow/elements.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <random>

namespace polyflow::testing {

// Test-side randomness is deliberately separate from the library's generator.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    Vec3 vec3(double lo = -1.0, double hi = 1.0) {
        const double x = uniform(lo, hi);
        const double y = uniform(lo, hi);
        const double z = uniform(lo, hi);
        return {x, y, z};
    }
    Configuration configuration(std::size_t n, double lo = -1.0, double hi = 1.0) {
        Configuration p(n);
        for (auto& v : p) v = vec3(lo, hi);
        return p;
    }
    Eigen::Matrix3d rotation() {
        Eigen::Quaterniond q(uniform(), uniform(), uniform(), uniform());
        q.normalize();
        return q.toRotationMatrix();
    }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

inline double det_volume(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    Eigen::Matrix3d m;
    m.col(0) = b - a;
    m.col(1) = c - a;
    m.col(2) = d - a;
    return m.determinant() / 6.0;
}

/// Central-difference gradient of a scalar function of a configuration.
inline Configuration fd_gradient(const std::function<double(const Configuration&)>& f, const Configuration& p,
                                 double h = 1e-5) {
    Configuration g(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (int k = 0; k < 3; ++k) {
            Configuration a = p;
            Configuration b = p;
            a[i][k] += h;
            b[i][k] -= h;
            g[i][k] = (f(a) - f(b)) / (2.0 * h);
        }
    }
    return g;
}

inline double relative_error(const Configuration& a, const Configuration& b) {
    const double scale = std::max(b.norm(), 1e-300);
    return (a - b).norm() / scale;
}

/// Divergence-theorem volume of a closed polyhedral surface given as outward
/// vertex loops; each loop is fanned from its vertex average.
inline double surface_volume(const Configuration& p, const std::vector<std::vector<int>>& loops) {
    double v = 0.0;
    for (const auto& loop : loops) {
        Vec3 c = Vec3::Zero();
        for (int i : loop) c += p[static_cast<std::size_t>(i - 1)];
        c /= static_cast<double>(loop.size());
        for (std::size_t j = 0; j < loop.size(); ++j) {
            const Vec3& a = p[static_cast<std::size_t>(loop[j] - 1)];
            const Vec3& b = p[static_cast<std::size_t>(loop[(j + 1) % loop.size()] - 1)];
            v += c.dot(a.cross(b)) / 6.0;
        }
    }
    return v;
}

inline Configuration affine(const Configuration& p, const Eigen::Matrix3d& a, const Vec3& b) {
    Configuration q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = a * p[i] + b;
    return q;
}

inline Configuration rotated(const Configuration& p, const Eigen::Matrix3d& r) { return affine(p, r, Vec3::Zero()); }

}  // namespace polyflow::testing
