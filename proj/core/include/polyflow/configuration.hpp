#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace polyflow {

using Vec3 = Eigen::Vector3d;

/// Ordered tuple of n points in R^3, i.e. a point of R^{3n}.
///
/// The same type carries tangent vectors (one 3-vector per vertex); the
/// ambient inner product is the Euclidean one over all 3n coordinates.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::size_t n) : points_(n, Vec3::Zero()) {}
    explicit Configuration(std::vector<Vec3> points) : points_(std::move(points)) {}
    Configuration(std::initializer_list<Vec3> points) : points_(points) {}

    static Configuration zeros(std::size_t n) { return Configuration(n); }
    static Configuration from_flat(const Eigen::VectorXd& flat);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }

    Vec3& operator[](std::size_t i) { return points_[i]; }
    const Vec3& operator[](std::size_t i) const { return points_[i]; }

    auto begin() noexcept { return points_.begin(); }
    auto end() noexcept { return points_.end(); }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    std::span<const Vec3> points() const noexcept { return points_; }
    const std::vector<Vec3>& vector() const noexcept { return points_; }

    Eigen::VectorXd flat() const;

    double squared_norm() const;
    double norm() const;
    bool all_finite() const;

    Vec3 centroid() const;
    Vec3 sum() const;

    Configuration& operator+=(const Configuration& other);
    Configuration& operator-=(const Configuration& other);
    Configuration& operator*=(double s);

    /// Adds c to every point.
    Configuration translated(const Vec3& c) const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    std::vector<Vec3> points_;
};

/// Tangent vectors at a configuration, one 3-vector per vertex.
using TangentVectors = Configuration;

Configuration operator+(Configuration a, const Configuration& b);
Configuration operator-(Configuration a, const Configuration& b);
Configuration operator*(double s, Configuration a);
Configuration operator*(Configuration a, double s);

/// Euclidean inner product over all 3n coordinates.
double dot(const Configuration& a, const Configuration& b);

/// max_i |a_i - b_i| over all coordinates.
double max_abs_difference(const Configuration& a, const Configuration& b);

}  // namespace polyflow
