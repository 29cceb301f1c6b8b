#pragma once

// Points and vectors of the Euclidean plane as complex numbers, with the
// plane isometries (reflection, translation, rotation) written on top of
// them. All types are immutable values.

#include <cmath>
#include <numbers>

namespace rpr3 {

/// z = re + i*im. Both parts are always finite.
class Complex {
public:
  constexpr Complex() noexcept = default;

  /// Throws NonFiniteValue if either part is NaN or infinite.
  Complex(double re, double im);

  static Complex real(double re) { return Complex{re, 0.0}; }

  constexpr double re() const noexcept { return re_; }
  constexpr double im() const noexcept { return im_; }

  double abs() const noexcept { return std::hypot(re_, im_); }
  constexpr double norm_sq() const noexcept { return re_ * re_ + im_ * im_; }

  friend constexpr Complex operator+(Complex a, Complex b) noexcept {
    return {a.re_ + b.re_, a.im_ + b.im_, Unchecked{}};
  }
  friend constexpr Complex operator-(Complex a, Complex b) noexcept {
    return {a.re_ - b.re_, a.im_ - b.im_, Unchecked{}};
  }
  friend constexpr Complex operator-(Complex a) noexcept {
    return {-a.re_, -a.im_, Unchecked{}};
  }
  friend constexpr Complex operator*(Complex a, Complex b) noexcept {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_,
            Unchecked{}};
  }
  friend constexpr Complex operator*(double k, Complex a) noexcept {
    return {k * a.re_, k * a.im_, Unchecked{}};
  }
  friend constexpr Complex operator*(Complex a, double k) noexcept {
    return k * a;
  }
  /// Division by a real; k must be nonzero.
  friend constexpr Complex operator/(Complex a, double k) noexcept {
    return {a.re_ / k, a.im_ / k, Unchecked{}};
  }

  friend constexpr bool operator==(Complex, Complex) noexcept = default;

  /// Complex conjugate x - iy.
  friend constexpr Complex conj(Complex z) noexcept {
    return {z.re_, -z.im_, Unchecked{}};
  }

  /// Imaginary unit.
  static constexpr Complex i() noexcept { return {0.0, 1.0, Unchecked{}}; }

private:
  struct Unchecked {};
  constexpr Complex(double re, double im, Unchecked) noexcept
      : re_{re}, im_{im} {}

  double re_ = 0.0;
  double im_ = 0.0;

  friend class UnitComplex;
};

constexpr Complex conj(Complex z) noexcept;

/// Angle in radians. Always finite; not normalized unless asked.
class Angle {
public:
  constexpr Angle() noexcept = default;
  /// Throws NonFiniteValue for NaN or infinity.
  explicit Angle(double radians);

  static Angle degrees(double deg) { return Angle{deg / 180.0 * std::numbers::pi}; }

  constexpr double radians() const noexcept { return rad_; }

  /// Equivalent angle in (-pi, pi].
  Angle normalized() const noexcept;

  friend bool operator==(Angle, Angle) noexcept = default;

private:
  double rad_ = 0.0;
};

/// Normalizes a raw radian value to (-pi, pi].
double normalize_radians(double radians) noexcept;

/// A complex value on the unit circle; multiplication by it is a rotation.
class UnitComplex {
public:
  static constexpr double kTolerance = 1e-12;
  static constexpr double kRenormalizeLimit = 1e-9;

  /// 1 + 0i.
  constexpr UnitComplex() noexcept : value_{1.0, 0.0, Complex::Unchecked{}} {}

  /// Accepts |z| within 1e-9 of one (renormalizing when it is off by more
  /// than 1e-12); throws NotUnit otherwise.
  explicit UnitComplex(Complex z);

  constexpr Complex value() const noexcept { return value_; }
  constexpr operator Complex() const noexcept { return value_; }
  constexpr double re() const noexcept { return value_.re(); }
  constexpr double im() const noexcept { return value_.im(); }

  UnitComplex conj() const noexcept;

  friend constexpr Complex operator*(double k, UnitComplex u) noexcept { return k * u.value_; }
  friend constexpr Complex operator*(UnitComplex u, double k) noexcept { return k * u.value_; }
  friend constexpr Complex operator*(UnitComplex u, Complex z) noexcept { return u.value_ * z; }
  friend constexpr Complex operator*(Complex z, UnitComplex u) noexcept { return z * u.value_; }

private:
  struct Trusted {};
  constexpr UnitComplex(Complex z, Trusted) noexcept : value_{z} {}

  Complex value_;

  friend UnitComplex cis(Angle theta) noexcept;
};

/// cos(theta) + i sin(theta).
UnitComplex cis(Angle theta) noexcept;
/// Convenience overload; throws NonFiniteValue on non-finite input.
UnitComplex cis(double theta);

/// Argument of u in (-pi, pi], recovered as
/// atan2(-i(u - conj u), u + conj u). The negative real axis maps to +pi.
Angle angle_of(UnitComplex u) noexcept;
/// Validates z as a unit value first (throws NotUnit).
Angle angle_of(Complex z);

/// Product of two rotations.
UnitComplex mul(UnitComplex u, UnitComplex v) noexcept;
inline UnitComplex operator*(UnitComplex u, UnitComplex v) noexcept { return mul(u, v); }

/// Mirror image in the real axis; identical to conj.
constexpr Complex reflect_x(Complex z) noexcept { return conj(z); }

constexpr Complex translate(Complex z, Complex a) noexcept { return z + a; }

/// Rotation of z about the point a: a + cis(theta)(z - a).
Complex rotate_about(Complex z, Complex a, Angle theta) noexcept;

}  // namespace rpr3
