#include "rpr3/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>
#include <numbers>

#include <Eigen/LU>

namespace rpr3 {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTangencyTol = 1e-12;
// Newton stops early once the residual reaches round-off level.
constexpr double kPolishFloor = 1e-14;

Angle direction_of(Complex v) { return angle_of(v / v.abs()); }

double wrapped_gap(double a, double b) noexcept { return normalize_radians(a - b); }

bool opposite(double x, double y) noexcept { return (x < 0.0 && y > 0.0) || (x > 0.0 && y < 0.0); }

/// Configuration with the given strokes whose legs point at the platform
/// vertices implied by (o_a, alpha).
Configuration assemble(const Geometry& g, double s_a, double s_b, double s_c, Complex o_a,
                       double alpha) {
  const UnitComplex cis_alpha = cis(alpha);
  const Complex o_b = o_a + cis_alpha * g.l_ab;
  const Complex o_c = o_a + cis_alpha * cis(g.beta) * g.l_ac;
  Configuration c;
  c.s_a = s_a;
  c.s_b = s_b;
  c.s_c = s_c;
  c.theta_a = direction_of(o_a);
  c.theta_b = direction_of(o_b - g.d_ab);
  c.theta_c = direction_of(o_c - g.d_ac);
  c.alpha = Angle{alpha}.normalized();
  return c;
}

/// The alpha-parametrized one-dimensional problem left after closing loop 1
/// geometrically.
class AlphaScan {
public:
  AlphaScan(const Geometry& g, double s_a, double s_b, double s_c)
      : g_(g), s_a_(s_a), s_b_(s_b), s_c_(s_c), cis_beta_(cis(g.beta)) {}

  struct Sample {
    double alpha = 0.0;
    bool feasible = false;
    std::array<Complex, 2> o_a{};
    std::array<double, 2> h{};
  };

  Sample sample(double alpha) const {
    Sample s;
    s.alpha = alpha;
    const UnitComplex cis_alpha = cis(alpha);
    const auto pts = intersect_circles(Complex{}, s_a_, g_.d_ab - cis_alpha * g_.l_ab, s_b_);
    if (!pts) return s;
    s.feasible = true;
    s.o_a = *pts;
    for (int b = 0; b < 2; ++b) {
      const Complex o_c = s.o_a[b] + cis_alpha * cis_beta_ * g_.l_ac;
      s.h[b] = (o_c - g_.d_ac).abs() - s_c_;
    }
    return s;
  }

  /// Last feasible sample between a feasible and an infeasible alpha.
  Sample feasibility_edge(double feasible_alpha, double infeasible_alpha) const {
    Sample best = sample(feasible_alpha);
    double in = infeasible_alpha;
    for (int it = 0; it < 64; ++it) {
      const double mid = 0.5 * (best.alpha + in);
      if (mid == best.alpha || mid == in) break;
      Sample s = sample(mid);
      if (s.feasible)
        best = s;
      else
        in = mid;
    }
    return best;
  }

  Configuration configuration(double alpha, Complex o_a) const {
    return assemble(g_, s_a_, s_b_, s_c_, o_a, alpha);
  }

private:
  const Geometry& g_;
  double s_a_, s_b_, s_c_;
  UnitComplex cis_beta_;
};

/// A point on a one-parameter path through the feasible (alpha, branch) set.
struct PathPoint {
  double u = 0.0;
  bool feasible = false;
  double h = 0.0;
  double alpha = 0.0;
  Complex o_a;
};

using Path = std::function<PathPoint(double)>;

/// Parameters of infeasible probes met between feasible samples.
using GapList = std::vector<double>;

/// Bisects a path between two points whose h values differ in sign.
std::optional<PathPoint> bisect(const Path& path, PathPoint lo, PathPoint hi, double tol,
                                GapList& gaps) {
  if (lo.h == 0.0) return lo;
  if (hi.h == 0.0) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo.u + hi.u);
    if (mid == lo.u || mid == hi.u) break;
    const PathPoint m = path(mid);
    if (!m.feasible) {
      gaps.push_back(m.u);
      return std::nullopt;
    }
    if (std::abs(m.h) <= tol) return m;
    if ((m.h < 0.0) == (lo.h < 0.0))
      lo = m;
    else
      hi = m;
  }
  return std::abs(lo.h) <= std::abs(hi.h) ? lo : hi;
}

/// Golden-section search for the smallest |h| strictly inside (lo, hi).
/// Stops early at a probe whose sign differs from lo.
std::optional<PathPoint> minimize_abs(const Path& path, const PathPoint& lo, const PathPoint& hi,
                                      GapList& gaps) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo.u, d = hi.u;
  PathPoint x1 = path(d - kInvPhi * (d - a));
  PathPoint x2 = path(a + kInvPhi * (d - a));
  for (int it = 0; it < 120; ++it) {
    if (!x1.feasible || !x2.feasible) {
      gaps.push_back(x1.feasible ? x2.u : x1.u);
      return std::nullopt;
    }
    if (opposite(x1.h, lo.h)) return x1;
    if (opposite(x2.h, lo.h)) return x2;
    if (std::abs(x1.h) < std::abs(x2.h)) {
      d = x2.u;
      x2 = x1;
      x1 = path(d - kInvPhi * (d - a));
    } else {
      a = x1.u;
      x1 = x2;
      x2 = path(a + kInvPhi * (d - a));
    }
    if (d - a <= 1e-15 * (1.0 + std::abs(a))) break;
  }
  if (!x1.feasible || !x2.feasible) return std::nullopt;
  return std::abs(x1.h) <= std::abs(x2.h) ? x1 : x2;
}

/// Appends roots of h along the path sampled at the given parameters. Sign
/// changes are bisected; local minima of |h| are searched for a touching
/// root or a pair of crossings inside one cell.
void scan_path(const Path& path, const std::vector<double>& us, double tol,
               std::vector<PathPoint>& roots, GapList& gaps) {
  std::vector<PathPoint> pts;
  pts.reserve(us.size());
  for (double u : us) pts.push_back(path(u));

  auto add_bracket = [&](const PathPoint& lo, const PathPoint& hi) {
    if (lo.h != 0.0 && !opposite(lo.h, hi.h)) return;
    if (auto root = bisect(path, lo, hi, tol, gaps)) roots.push_back(*root);
  };

  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i].feasible && pts[i + 1].feasible) add_bracket(pts[i], pts[i + 1]);
  if (!pts.empty() && pts.back().feasible && pts.back().h == 0.0) roots.push_back(pts.back());

  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const PathPoint &left = pts[i - 1], &mid = pts[i], &right = pts[i + 1];
    if (!left.feasible || !mid.feasible || !right.feasible) continue;
    const double hl = left.h, hm = mid.h, hr = right.h;
    if (hm == 0.0 || hl == 0.0 || hr == 0.0 || opposite(hl, hm) || opposite(hm, hr)) continue;
    if (!(std::abs(hm) < std::abs(hl) && std::abs(hm) <= std::abs(hr))) continue;
    const auto low = minimize_abs(path, left, right, gaps);
    if (!low) continue;
    if (opposite(low->h, hm)) {
      add_bracket(left, *low);
      add_bracket(*low, right);
    } else if (std::abs(low->h) <= tol) {
      roots.push_back(*low);
    }
  }
}

}  // namespace

Configuration inverse(const Geometry& g, const Pose& pose) {
  const Complex p = pose.p;
  const double s_a = p.abs();
  if (s_a <= kSingularLegLength) throw SingularLeg(Leg::A);

  const UnitComplex cis_alpha = cis(pose.alpha);
  const Complex leg_b = p + cis_alpha * g.l_ab - g.d_ab;
  const double s_b = leg_b.abs();
  if (s_b <= kSingularLegLength) throw SingularLeg(Leg::B);

  const Complex leg_c = p + cis_alpha * cis(g.beta) * g.l_ac - g.d_ac;
  const double s_c = leg_c.abs();
  if (s_c <= kSingularLegLength) throw SingularLeg(Leg::C);

  Configuration c;
  c.s_a = s_a;
  c.s_b = s_b;
  c.s_c = s_c;
  c.theta_a = angle_of(p / s_a);
  c.theta_b = angle_of(leg_b / s_b);
  c.theta_c = angle_of(leg_c / s_c);
  c.alpha = pose.alpha;
  return c;
}

Pose pose_of(const Geometry&, const Configuration& c) noexcept {
  return {c.s_a * cis(c.theta_a), c.alpha.normalized()};
}

std::optional<std::array<Complex, 2>> intersect_circles(Complex c0, double r0, Complex c1,
                                                        double r1) noexcept {
  const Complex between = c1 - c0;
  const double d = between.abs();
  if (d == 0.0) return std::nullopt;
  const double along = (r0 * r0 - r1 * r1 + d * d) / (2.0 * d);
  double across_sq = r0 * r0 - along * along;
  if (across_sq < 0.0) {
    const bool tangent =
        std::abs(d - (r0 + r1)) <= kTangencyTol || std::abs(d - std::abs(r0 - r1)) <= kTangencyTol;
    if (!tangent) return std::nullopt;
    across_sq = 0.0;
  }
  const Complex u = between / d;
  const Complex foot = c0 + along * u;
  const Complex offset = std::sqrt(across_sq) * (Complex::i() * u);
  return std::array<Complex, 2>{foot + offset, foot - offset};
}

FkSolution polish(const Geometry& g, Configuration c, const FkOptions& opts) {
  auto pack = [](const Configuration& x) {
    return FkUnknowns{x.theta_a.radians(), x.theta_b.radians(), x.theta_c.radians(),
                      x.alpha.radians()};
  };
  auto unpack = [&c](const FkUnknowns& x) {
    Configuration y = c;
    y.theta_a = Angle{x[0]};
    y.theta_b = Angle{x[1]};
    y.theta_c = Angle{x[2]};
    y.alpha = Angle{x[3]};
    return y;
  };

  Eigen::Vector4d f = residual_vector(g, c);
  double norm = f.norm();
  int iterations = 0;
  while (iterations < opts.max_newton_iters && norm > kPolishFloor) {
    const FkJacobian j = fk_jacobian(g, c);
    const FkUnknowns step = j.fullPivLu().solve(-f);
    if (!step.allFinite()) break;

    const FkUnknowns x = pack(c);
    double t = 1.0;
    bool improved = false;
    for (int h = 0; h <= opts.max_halvings; ++h, t *= 0.5) {
      Configuration trial = unpack(x + t * step);
      const Eigen::Vector4d ft = residual_vector(g, trial);
      if (ft.norm() < norm) {
        c = trial;
        f = ft;
        norm = ft.norm();
        improved = true;
        break;
      }
    }
    if (!improved) break;
    ++iterations;
  }

  c.theta_a = c.theta_a.normalized();
  c.theta_b = c.theta_b.normalized();
  c.theta_c = c.theta_c.normalized();
  c.alpha = c.alpha.normalized();
  return {c, residual_norm(g, c), iterations};
}

std::vector<FkSolution> forward(const Geometry& g, double s_a, double s_b, double s_c,
                                const FkOptions& opts) {
  for (double s : {s_a, s_b, s_c}) {
    if (!std::isfinite(s) || !(s > 0.0))
      throw InvalidArgument("actuator lengths must be positive and finite");
    if (g.limits && !g.limits->contains(s))
      throw LimitViolation("actuator length outside the joint limits");
  }
  if (opts.grid_size < 3) throw InvalidArgument("grid_size must be at least 3");

  const AlphaScan scan(g, s_a, s_b, s_c);
  const int n = opts.grid_size;
  const double step = 2.0 * kPi / n;

  // Each branch is scanned over the alpha grid -pi + j*step for j = 0..n+1;
  // the extra node closes the wrap at pi.
  std::vector<double> grid;
  grid.reserve(n + 2);
  for (int j = 0; j <= n + 1; ++j) grid.push_back(-kPi + step * j);

  std::vector<PathPoint> roots;
  GapList gaps;
  for (int b = 0; b < 2; ++b) {
    const Path branch = [&scan, b](double alpha) {
      const AlphaScan::Sample s = scan.sample(alpha);
      PathPoint p{alpha, s.feasible, s.h[b], alpha, s.o_a[b]};
      return p;
    };
    scan_path(branch, grid, opts.bisect_tol, roots, gaps);
  }

  // Near a feasibility edge h behaves like a square root of the distance to
  // the edge, and both branches meet there. With alpha = edge + (in - edge) u^2
  // and the branch picked by the sign of u, the joined curve is smooth in u.
  constexpr int kEdgeSamples = 32;
  std::vector<double> edge_us;
  for (int k = -kEdgeSamples; k <= kEdgeSamples; ++k)
    edge_us.push_back(static_cast<double>(k) / kEdgeSamples);
  GapList ignored;
  // Scans from a feasible node towards an infeasible alpha beyond it. The
  // path also spans the cell behind the node, whose extremum check lacks a
  // feasible neighbour on the edge side.
  auto scan_edge = [&](double in, double out) {
    const double edge = scan.feasibility_edge(in, out).alpha;
    const double beyond = out > in ? in - step : in + step;
    const double far = scan.sample(beyond).feasible ? beyond : in;
    const Path joined = [&scan, far, edge](double u) {
      const double alpha = edge + (far - edge) * u * u;
      const AlphaScan::Sample s = scan.sample(alpha);
      const int b = u >= 0.0 ? 0 : 1;
      PathPoint p{u, s.feasible, s.h[b], alpha, s.o_a[b]};
      return p;
    };
    scan_path(joined, edge_us, opts.bisect_tol, roots, ignored);
  };
  for (int j = 0; j < n; ++j) {
    const double lo = grid[j], hi = grid[j + 1];
    const bool lo_ok = scan.sample(lo).feasible, hi_ok = scan.sample(hi).feasible;
    if (lo_ok && !hi_ok) scan_edge(lo, hi);
    if (!lo_ok && hi_ok) scan_edge(hi, lo);
  }
  // An infeasible gap narrower than a cell hides between feasible nodes.
  std::vector<int> gap_cells;
  for (double x : gaps) {
    const int j = std::clamp(static_cast<int>(std::floor((x + kPi) / step)), 0, n);
    if (std::find(gap_cells.begin(), gap_cells.end(), j) != gap_cells.end()) continue;
    gap_cells.push_back(j);
    scan_edge(grid[j], x);
    scan_edge(grid[j + 1], x);
  }

  std::vector<FkSolution> polished;
  for (const PathPoint& root : roots) {
    FkSolution sol = polish(g, scan.configuration(root.alpha, root.o_a), opts);
    if (sol.residual_norm > opts.tolerance)
      throw NonConvergence(Angle{root.alpha}.normalized().radians());
    polished.push_back(sol);
  }

  std::sort(polished.begin(), polished.end(), [](const FkSolution& x, const FkSolution& y) {
    return x.residual_norm < y.residual_norm;
  });
  std::vector<FkSolution> unique;
  for (const FkSolution& sol : polished) {
    const bool duplicate = std::any_of(unique.begin(), unique.end(), [&](const FkSolution& u) {
      const double da = wrapped_gap(sol.config.alpha.radians(), u.config.alpha.radians());
      const double dt = wrapped_gap(sol.config.theta_a.radians(), u.config.theta_a.radians());
      return std::hypot(da, dt) <= opts.dedupe_tol;
    });
    if (!duplicate) unique.push_back(sol);
  }

  std::sort(unique.begin(), unique.end(), [](const FkSolution& x, const FkSolution& y) {
    if (x.config.alpha.radians() != y.config.alpha.radians())
      return x.config.alpha.radians() < y.config.alpha.radians();
    return x.config.theta_a.radians() < y.config.theta_a.radians();
  });
  return unique;
}

}  // namespace rpr3
