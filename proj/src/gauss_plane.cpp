#include "rpr3/gauss_plane.hpp"

#include <string>

#include "rpr3/errors.hpp"

namespace rpr3 {

Complex::Complex(double re, double im) : re_{re}, im_{im} {
  if (!std::isfinite(re) || !std::isfinite(im))
    throw NonFiniteValue("complex value has a non-finite part");
}

Angle::Angle(double radians) : rad_{radians} {
  if (!std::isfinite(radians)) throw NonFiniteValue("angle is not finite");
}

double normalize_radians(double radians) noexcept {
  constexpr double pi = std::numbers::pi;
  if (radians > -pi && radians <= pi) return radians;
  double r = std::remainder(radians, 2.0 * pi);
  if (r <= -pi) r += 2.0 * pi;
  if (r > pi) r -= 2.0 * pi;
  return r;
}

Angle Angle::normalized() const noexcept {
  Angle a;
  a.rad_ = normalize_radians(rad_);
  return a;
}

UnitComplex::UnitComplex(Complex z) : value_{z} {
  const double mag = z.abs();
  const double drift = std::abs(mag - 1.0);
  if (drift > kRenormalizeLimit)
    throw NotUnit("|z| = " + std::to_string(mag) + " is not on the unit circle");
  if (drift > kTolerance) value_ = z / mag;
}

UnitComplex UnitComplex::conj() const noexcept {
  return UnitComplex{rpr3::conj(value_), Trusted{}};
}

UnitComplex cis(Angle theta) noexcept {
  const double t = theta.radians();
  return UnitComplex{Complex{std::cos(t), std::sin(t)},
                     UnitComplex::Trusted{}};
}

UnitComplex cis(double theta) { return cis(Angle{theta}); }

Angle angle_of(UnitComplex u) noexcept {
  const Complex c = u.value();
  const Complex cb = conj(c);
  // -i(c - cb) = 2 sin(theta) and c + cb = 2 cos(theta), both real.
  const double two_sin = (-Complex::i() * (c - cb)).re();
  const double two_cos = (c + cb).re();
  double t = std::atan2(two_sin, two_cos);
  if (t <= -std::numbers::pi) t = std::numbers::pi;
  return Angle{t};
}

Angle angle_of(Complex z) { return angle_of(UnitComplex{z}); }

UnitComplex mul(UnitComplex u, UnitComplex v) noexcept {
  const Complex p = u.value() * v.value();
  // Two unit factors keep |p| within a few ulps of one; the constructor only
  // touches p if drift has accumulated past the tolerance.
  return UnitComplex{p};
}

Complex rotate_about(Complex z, Complex a, Angle theta) noexcept {
  return a + cis(theta) * (z - a);
}

}  // namespace rpr3
