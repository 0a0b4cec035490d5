#include "polyflow/geometry.hpp"

#include "polyflow/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polyflow {

Configuration Configuration::from_flat(const Eigen::VectorXd& flat) {
    if (flat.size() % 3 != 0) {
        throw SizeMismatchError("flat configuration length " + std::to_string(flat.size()) +
                                " is not a multiple of 3");
    }
    Configuration c(static_cast<std::size_t>(flat.size() / 3));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = flat.segment<3>(static_cast<Eigen::Index>(3 * i));
    }
    return c;
}

Eigen::VectorXd Configuration::flat() const {
    Eigen::VectorXd out(static_cast<Eigen::Index>(3 * size()));
    for (std::size_t i = 0; i < size(); ++i) {
        out.segment<3>(static_cast<Eigen::Index>(3 * i)) = points_[i];
    }
    return out;
}

double Configuration::squared_norm() const {
    double s = 0.0;
    for (const auto& v : points_) s += v.squaredNorm();
    return s;
}

double Configuration::norm() const { return std::sqrt(squared_norm()); }

bool Configuration::all_finite() const {
    return std::all_of(points_.begin(), points_.end(), [](const Vec3& v) { return v.allFinite(); });
}

Vec3 Configuration::sum() const {
    Vec3 s = Vec3::Zero();
    for (const auto& v : points_) s += v;
    return s;
}

Vec3 Configuration::centroid() const {
    if (points_.empty()) return Vec3::Zero();
    return sum() / static_cast<double>(points_.size());
}

Configuration& Configuration::operator+=(const Configuration& other) {
    if (other.size() != size()) throw SizeMismatchError("configuration sizes differ");
    for (std::size_t i = 0; i < size(); ++i) points_[i] += other.points_[i];
    return *this;
}

Configuration& Configuration::operator-=(const Configuration& other) {
    if (other.size() != size()) throw SizeMismatchError("configuration sizes differ");
    for (std::size_t i = 0; i < size(); ++i) points_[i] -= other.points_[i];
    return *this;
}

Configuration& Configuration::operator*=(double s) {
    for (auto& v : points_) v *= s;
    return *this;
}

Configuration Configuration::translated(const Vec3& c) const {
    Configuration out = *this;
    for (auto& v : out.points_) v += c;
    return out;
}

Configuration operator+(Configuration a, const Configuration& b) { return a += b; }
Configuration operator-(Configuration a, const Configuration& b) { return a -= b; }
Configuration operator*(double s, Configuration a) { return a *= s; }
Configuration operator*(Configuration a, double s) { return a *= s; }

double dot(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size()) throw SizeMismatchError("configuration sizes differ");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i].dot(b[i]);
    return s;
}

double max_abs_difference(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size()) throw SizeMismatchError("configuration sizes differ");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, (a[i] - b[i]).cwiseAbs().maxCoeff());
    return m;
}

Vec3 cross(const Vec3& a, const Vec3& b) { return a.cross(b); }

Vec3 nu(std::span<const Vec3> points, std::span<const int> indices) {
    if (indices.size() < 3) {
        throw InvalidIndexError("nu needs at least 3 indices, got " + std::to_string(indices.size()));
    }
    const auto n = static_cast<int>(points.size());
    for (int idx : indices) {
        if (idx < 1 || idx > n) {
            throw InvalidIndexError("nu index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
        }
    }
    Vec3 s = Vec3::Zero();
    const std::size_t k = indices.size();
    for (std::size_t j = 0; j < k; ++j) {
        const Vec3& a = points[static_cast<std::size_t>(indices[j] - 1)];
        const Vec3& b = points[static_cast<std::size_t>(indices[(j + 1) % k] - 1)];
        s += a.cross(b);
    }
    return s;
}

Vec3 nu(std::span<const Vec3> points, std::initializer_list<int> indices) {
    return nu(points, std::span<const int>(indices.begin(), indices.size()));
}

Vec3 nu(const Configuration& p, std::initializer_list<int> indices) { return nu(p.points(), indices); }

double tet_signed_volume(const Vec3& p1, const Vec3& p2, const Vec3& p3, const Vec3& p4) {
    return (p2 - p1).cross(p3 - p1).dot(p4 - p1) / 6.0;
}

}  // namespace polyflow
