#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rpr3/loop_closure.hpp"

namespace rpr3 {

/// Task-space state: position of platform vertex O_a and orientation alpha.
struct Pose {
  Complex p;
  Angle alpha;
};

/// Legs shorter than this have no defined joint angle.
inline constexpr double kSingularLegLength = 1e-12;

/// Closed-form inverse kinematics. Throws SingularLeg when a leg collapses.
/// Joint limits are not checked here.
Configuration inverse(const Geometry& g, const Pose& pose);

/// p = s_a cis(theta_a), alpha normalized.
Pose pose_of(const Geometry& g, const Configuration& c) noexcept;

struct FkOptions {
  int grid_size = 720;         ///< alpha samples over (-pi, pi]
  int max_newton_iters = 50;
  int max_halvings = 20;       ///< step halvings per Newton iteration
  double dedupe_tol = 1e-6;    ///< minimum separation in (alpha, theta_a)
  double tolerance = 1e-9;     ///< required residual_norm of every solution
  double bisect_tol = 1e-10;   ///< |h| at which alpha bisection stops
};

struct FkSolution {
  Configuration config;
  double residual_norm = 0.0;
  int newton_iterations = 0;
};

/// All assembly modes for the given actuator lengths, sorted by ascending
/// normalized alpha. An empty result means the lengths cannot close the loops.
///
/// For each alpha the platform side O_aO_b fixes a circle for O_a around
/// d_ab - cis(alpha) l_ab; its intersections with |o_a| = s_a give up to two
/// branches. Along each branch the leg-C length error
///   h(alpha) = |o_a + cis(alpha) cis(beta) l_ac - d_ac| - s_c
/// is scanned for sign changes, bisected, and the result polished by damped
/// Newton on (r1, r2).
///
/// Throws InvalidArgument for non-positive lengths, LimitViolation when the
/// geometry has limits that exclude them, and NonConvergence when a
/// bracketed root cannot be polished below opts.tolerance.
std::vector<FkSolution> forward(const Geometry& g, double s_a, double s_b, double s_c,
                                const FkOptions& opts = {});

/// Up to two intersection points of two circles. Tangent circles (within
/// 1e-12) report the touching point twice.
std::optional<std::array<Complex, 2>> intersect_circles(Complex c0, double r0, Complex c1,
                                                        double r1) noexcept;

/// Damped Newton on (Re r1, Im r1, Re r2, Im r2) over
/// (theta_a, theta_b, theta_c, alpha) with the actuator lengths held fixed.
FkSolution polish(const Geometry& g, Configuration c, const FkOptions& opts = {});

}  // namespace rpr3
