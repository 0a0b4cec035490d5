#pragma once

#include "polyflow/configuration.hpp"

namespace polyflow {

// Configurations modulo translation and positive scaling, modelled as the
// unit sphere N of configurations whose last point is the origin.

/// (p1 - pn, ..., p(n-1) - pn, 0). Also the differential of itself, so it
/// applies unchanged to tangent vectors.
Configuration tau(const Configuration& p);

/// p / |p| over all 3n coordinates. Throws DegenerateConfigurationError on 0.
Configuration sigma(const Configuration& p);

/// sigma(tau(p)): the representative of p's class on N.
Configuration pi(const Configuration& p);

/// Differential of pi at p applied to v: tau(v) with the radial component
/// along tau(p) removed, divided by |tau(p)|. For p on N this is the
/// orthogonal projection of tau(v) onto T_p N.
TangentVectors push_tangent(const Configuration& p, const TangentVectors& v);

/// v / sqrt(|v|), with 0 -> 0.
TangentVectors psi(const TangentVectors& v);

/// Centroid-centred unit representative (p - c) / |p - c|. Used for the
/// scale- and translation-invariant value of cubic functions.
Configuration centered_unit(const Configuration& p);

inline constexpr double kDefaultCollinearTolerance = 1e-9;

/// True iff the second singular value of the centred point matrix is below
/// tol times the largest. All-coincident points count as collinear.
bool is_collinear(const Configuration& p, double tol = kDefaultCollinearTolerance);

/// True iff p is (numerically) on N: last point zero and unit norm.
bool on_sphere(const Configuration& p, double tol = 1e-12);

}  // namespace polyflow
