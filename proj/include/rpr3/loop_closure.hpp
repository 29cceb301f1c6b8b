#pragma once

// The two loop-closure equations of the 3RPR machine and their conjugates.
//
//   r1 = s_a cis(theta_a) + l_ab cis(alpha)             - s_b cis(theta_b) - d_ab
//   r2 = s_a cis(theta_a) + l_ac cis(beta) cis(alpha)   - s_c cis(theta_c) - d_ac
//   r3 = conj(r1),  r4 = conj(r2)
//
// A configuration is a valid posture iff r1 = r2 = 0.

#include <array>

#include <Eigen/Core>

#include "rpr3/gauss_plane.hpp"
#include "rpr3/manipulator.hpp"

namespace rpr3 {

/// Full joint state: actuator lengths, leg angles and platform orientation.
struct Configuration {
  double s_a = 0.0, s_b = 0.0, s_c = 0.0;
  Angle theta_a, theta_b, theta_c;
  Angle alpha;

  /// Throws InvalidArgument if a length is negative or non-finite.
  void check() const;
};

struct PlatformPoints {
  Complex o_a, o_b, o_c;
};

struct Residual {
  Complex r1, r2, r3, r4;
};

/// Rows (Re r1, Im r1, Re r2, Im r2); columns (theta_a, theta_b, theta_c, alpha).
using FkJacobian = Eigen::Matrix4d;

/// Unknown vector matching the FkJacobian columns.
using FkUnknowns = Eigen::Vector4d;

/// Platform vertices reached through leg A and the rigid platform.
PlatformPoints platform_points(const Geometry& g, const Configuration& c) noexcept;

Residual residual(const Geometry& g, const Configuration& c) noexcept;

/// sqrt(|r1|^2 + |r2|^2). The conjugate equations are not counted.
double residual_norm(const Geometry& g, const Configuration& c) noexcept;

/// (Re r1, Im r1, Re r2, Im r2).
Eigen::Vector4d residual_vector(const Geometry& g, const Configuration& c) noexcept;

/// Analytic partials of (r1, r2) with s held fixed.
FkJacobian fk_jacobian(const Geometry& g, const Configuration& c) noexcept;

}  // namespace rpr3
