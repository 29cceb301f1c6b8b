#include "rpr3/loop_closure.hpp"

#include <cmath>

namespace rpr3 {

void Configuration::check() const {
  for (double s : {s_a, s_b, s_c}) {
    if (!std::isfinite(s)) throw NonFiniteValue("actuator length is not finite");
    if (s < 0.0) throw InvalidArgument("actuator length is negative");
  }
}

PlatformPoints platform_points(const Geometry& g, const Configuration& c) noexcept {
  const UnitComplex cis_alpha = cis(c.alpha);
  const Complex o_a = c.s_a * cis(c.theta_a);
  const Complex o_b = o_a + cis_alpha * g.l_ab;
  const Complex o_c = o_a + cis_alpha * cis(g.beta) * g.l_ac;
  return {o_a, o_b, o_c};
}

Residual residual(const Geometry& g, const Configuration& c) noexcept {
  const UnitComplex cis_a = cis(c.theta_a);
  const UnitComplex cis_b = cis(c.theta_b);
  const UnitComplex cis_c = cis(c.theta_c);
  const UnitComplex cis_alpha = cis(c.alpha);
  const UnitComplex cis_beta = cis(g.beta);

  const Complex leg_a = c.s_a * cis_a;
  const Complex r1 = leg_a + g.l_ab * cis_alpha - c.s_b * cis_b - g.d_ab;
  const Complex r2 = leg_a + g.l_ac * (cis_beta * cis_alpha) - c.s_c * cis_c - g.d_ac;
  return {r1, r2, conj(r1), conj(r2)};
}

double residual_norm(const Geometry& g, const Configuration& c) noexcept {
  const Residual r = residual(g, c);
  return std::sqrt(r.r1.norm_sq() + r.r2.norm_sq());
}

Eigen::Vector4d residual_vector(const Geometry& g, const Configuration& c) noexcept {
  const Residual r = residual(g, c);
  return {r.r1.re(), r.r1.im(), r.r2.re(), r.r2.im()};
}

FkJacobian fk_jacobian(const Geometry& g, const Configuration& c) noexcept {
  const Complex i = Complex::i();
  const Complex d_theta_a = i * (c.s_a * cis(c.theta_a));
  const Complex d_theta_b = -(i * (c.s_b * cis(c.theta_b)));
  const Complex d_theta_c = -(i * (c.s_c * cis(c.theta_c)));
  const UnitComplex cis_alpha = cis(c.alpha);
  const Complex d1_alpha = i * (g.l_ab * cis_alpha);
  const Complex d2_alpha = i * (g.l_ac * (cis(g.beta) * cis_alpha));

  FkJacobian j;
  // clang-format off
  j << d_theta_a.re(), d_theta_b.re(), 0.0,            d1_alpha.re(),
       d_theta_a.im(), d_theta_b.im(), 0.0,            d1_alpha.im(),
       d_theta_a.re(), 0.0,            d_theta_c.re(), d2_alpha.re(),
       d_theta_a.im(), 0.0,            d_theta_c.im(), d2_alpha.im();
  // clang-format on
  return j;
}

}  // namespace rpr3
