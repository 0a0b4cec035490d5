#pragma once

#include "polyflow/configuration.hpp"

#include <Eigen/Geometry>

#include <initializer_list>
#include <span>

namespace polyflow {

Vec3 cross(const Vec3& a, const Vec3& b);

/// Cyclic cross-product chain over an ordered vertex loop:
///   nu(i1, ..., ik) = p_i1 x p_i2 + ... + p_ik x p_i1.
///
/// Indices are 1-based labels into `points`; repeats are allowed. For a planar
/// convex loop the norm is twice the enclosed area.
Vec3 nu(std::span<const Vec3> points, std::span<const int> indices);
Vec3 nu(std::span<const Vec3> points, std::initializer_list<int> indices);
Vec3 nu(const Configuration& p, std::initializer_list<int> indices);

/// Signed volume ((p2-p1) x (p3-p1)) . (p4-p1) / 6; positive for positively
/// oriented tetrahedra.
double tet_signed_volume(const Vec3& p1, const Vec3& p2, const Vec3& p3, const Vec3& p4);

}  // namespace polyflow
