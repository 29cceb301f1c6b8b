#pragma once

// Random generators and independent oracles shared by the unit and
// acceptance suites. Nothing here calls into the kinematics solver; the
// oracles recompute everything from cos/sin and the raw geometry.

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "rpr3/kinematics.hpp"

namespace rpr3::testing {

inline constexpr double kPi = std::numbers::pi;

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  Complex complex(double lo, double hi) { return Complex{uniform(lo, hi), uniform(lo, hi)}; }

  Geometry geometry() {
    while (true) {
      Geometry g;
      g.d_ab = uniform(4.0, 12.0) * cis(uniform(-0.6, 0.6));
      g.d_ac = uniform(4.0, 12.0) * cis(uniform(0.9, 2.2));
      g.l_ab = uniform(1.0, 6.0);
      g.l_ac = uniform(1.0, 6.0);
      const double beta = uniform(0.3, 2.8);
      g.beta = Angle{integer(0, 1) ? beta : -beta};
      if (check(g).empty()) return validate(g);
    }
  }

  /// Pose whose three legs are all at least min_leg long.
  Pose pose(const Geometry& g, double min_leg = 0.5) {
    while (true) {
      const Pose p{complex(-2.0, 12.0), Angle{uniform(-kPi, kPi)}};
      const Complex o_b = p.p + cis(p.alpha) * g.l_ab;
      const Complex o_c = p.p + cis(p.alpha) * cis(g.beta) * g.l_ac;
      if (p.p.abs() >= min_leg && (o_b - g.d_ab).abs() >= min_leg &&
          (o_c - g.d_ac).abs() >= min_leg)
        return p;
    }
  }

  Configuration configuration(double s_max = 10.0) {
    Configuration c;
    c.s_a = uniform(0.0, s_max);
    c.s_b = uniform(0.0, s_max);
    c.s_c = uniform(0.0, s_max);
    c.theta_a = Angle{uniform(-kPi, kPi)};
    c.theta_b = Angle{uniform(-kPi, kPi)};
    c.theta_c = Angle{uniform(-kPi, kPi)};
    c.alpha = Angle{uniform(-kPi, kPi)};
    return c;
  }

private:
  std::mt19937_64 eng_;
};

inline double angle_gap(double a, double b) {
  return std::abs(std::remainder(a - b, 2.0 * kPi));
}

/// Central finite differences of (Re r1, Im r1, Re r2, Im r2) with respect
/// to (theta_a, theta_b, theta_c, alpha).
inline Eigen::Matrix4d fd_jacobian(const Geometry& g, const Configuration& c, double step = 1e-6) {
  Eigen::Matrix4d j;
  for (int k = 0; k < 4; ++k) {
    auto shifted = [&](double delta) {
      Configuration x = c;
      Angle* vars[4] = {&x.theta_a, &x.theta_b, &x.theta_c, &x.alpha};
      *vars[k] = Angle{vars[k]->radians() + delta};
      const Residual r = residual(g, x);
      return Eigen::Vector4d{r.r1.re(), r.r1.im(), r.r2.re(), r.r2.im()};
    };
    j.col(k) = (shifted(step) - shifted(-step)) / (2.0 * step);
  }
  return j;
}

/// The conjugate loop-closure equations evaluated term by term with
/// conjugated rotations, cis-bar(t) = cos t - i sin t.
struct ConjugateEquations {
  double r3_re, r3_im, r4_re, r4_im;
};

inline ConjugateEquations conjugate_equations(const Geometry& g, const Configuration& c) {
  auto cisbar = [](double t) { return std::pair{std::cos(t), -std::sin(t)}; };
  const auto [ca_re, ca_im] = cisbar(c.theta_a.radians());
  const auto [cb_re, cb_im] = cisbar(c.theta_b.radians());
  const auto [cc_re, cc_im] = cisbar(c.theta_c.radians());
  const auto [cal_re, cal_im] = cisbar(c.alpha.radians());
  const auto [cbe_re, cbe_im] = cisbar(g.beta.radians());
  // cis-bar(beta) * cis-bar(alpha)
  const double rot_re = cbe_re * cal_re - cbe_im * cal_im;
  const double rot_im = cbe_re * cal_im + cbe_im * cal_re;

  ConjugateEquations e;
  e.r3_re = c.s_a * ca_re + g.l_ab * cal_re - c.s_b * cb_re - g.d_ab.re();
  e.r3_im = c.s_a * ca_im + g.l_ab * cal_im - c.s_b * cb_im + g.d_ab.im();
  e.r4_re = c.s_a * ca_re + g.l_ac * rot_re - c.s_c * cc_re - g.d_ac.re();
  e.r4_im = c.s_a * ca_im + g.l_ac * rot_im - c.s_c * cc_im + g.d_ac.im();
  return e;
}

/// One assembly mode as seen by the brute-force oracle.
struct OracleRoot {
  double alpha;
  double theta_a;
};

/// Dense alpha scan with bisection only. For every alpha, O_a lies on
/// |z| = s_a and on the circle of radius s_b around d_ab - l_ab cis(alpha);
/// the two candidates are found from the law of cosines, then the leg-C
/// length error is bisected wherever it changes sign.
inline std::vector<OracleRoot> brute_force_fk(const Geometry& g, double s_a, double s_b,
                                              double s_c, int grid = 20000) {
  struct Point {
    bool ok = false;
    double x[2]{}, y[2]{}, h[2]{};
  };
  const double bx = g.d_ab.re(), by = g.d_ab.im();
  const double cx = g.d_ac.re(), cy = g.d_ac.im();
  const double beta = g.beta.radians();

  auto eval = [&](double alpha) {
    Point p;
    const double mx = bx - g.l_ab * std::cos(alpha);
    const double my = by - g.l_ab * std::sin(alpha);
    const double d = std::hypot(mx, my);
    const double cos_gamma = (s_a * s_a + d * d - s_b * s_b) / (2.0 * s_a * d);
    if (!(cos_gamma >= -1.0 && cos_gamma <= 1.0)) return p;
    const double gamma = std::acos(cos_gamma);
    const double phi = std::atan2(my, mx);
    p.ok = true;
    for (int b = 0; b < 2; ++b) {
      const double t = b == 0 ? phi + gamma : phi - gamma;
      p.x[b] = s_a * std::cos(t);
      p.y[b] = s_a * std::sin(t);
      const double ocx = p.x[b] + g.l_ac * std::cos(alpha + beta) - cx;
      const double ocy = p.y[b] + g.l_ac * std::sin(alpha + beta) - cy;
      p.h[b] = std::hypot(ocx, ocy) - s_c;
    }
    return p;
  };

  std::vector<OracleRoot> roots;
  auto record = [&](double alpha, const Point& p, int b) {
    roots.push_back({std::remainder(alpha, 2.0 * kPi), std::atan2(p.y[b], p.x[b])});
  };
  auto bisect = [&](double lo, double hi, int b) {
    Point plo = eval(lo);
    for (int it = 0; it < 100 && hi - lo > 1e-14; ++it) {
      const double mid = 0.5 * (lo + hi);
      const Point pm = eval(mid);
      if (!pm.ok) return;
      if ((pm.h[b] < 0.0) == (plo.h[b] < 0.0)) {
        lo = mid;
        plo = pm;
      } else {
        hi = mid;
      }
    }
    record(0.5 * (lo + hi), eval(0.5 * (lo + hi)), b);
  };
  // Last feasible alpha between a feasible and an infeasible one.
  auto edge = [&](double in, double out) {
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (in + out);
      (eval(mid).ok ? in : out) = mid;
    }
    return in;
  };

  const double step = 2.0 * kPi / grid;
  for (int k = 0; k < grid; ++k) {
    const double a0 = -kPi + k * step, a1 = a0 + step;
    const Point p0 = eval(a0), p1 = eval(a1);
    if (p0.ok && p1.ok) {
      for (int b = 0; b < 2; ++b)
        if ((p0.h[b] < 0.0) != (p1.h[b] < 0.0)) bisect(a0, a1, b);
    } else if (p0.ok != p1.ok) {
      const double e = p0.ok ? edge(a0, a1) : edge(a1, a0);
      const Point pe = eval(e);
      for (int b = 0; b < 2; ++b) {
        const Point& pin = p0.ok ? p0 : p1;
        if ((pin.h[b] < 0.0) != (pe.h[b] < 0.0)) p0.ok ? bisect(a0, e, b) : bisect(e, a1, b);
      }
    }
  }
  return roots;
}

}  // namespace rpr3::testing
