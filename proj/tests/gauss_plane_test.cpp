#include <gtest/gtest.h>

#include <limits>

#include "rpr3/errors.hpp"
#include "rpr3/gauss_plane.hpp"
#include "support.hpp"

using namespace rpr3;
using rpr3::testing::kPi;
using rpr3::testing::Rng;

namespace {

void expect_near(Complex actual, Complex expected, double tol = 1e-15) {
  EXPECT_NEAR(actual.re(), expected.re(), tol);
  EXPECT_NEAR(actual.im(), expected.im(), tol);
}

}  // namespace

TEST(Complex, RejectsNonFiniteParts) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(Complex(nan, 0.0), NonFiniteValue);
  EXPECT_THROW(Complex(0.0, inf), NonFiniteValue);
  EXPECT_THROW(Angle{nan}, NonFiniteValue);
  EXPECT_THROW(cis(inf), NonFiniteValue);
}

TEST(Cis, CardinalDirections) {
  expect_near(cis(0.0), Complex{1.0, 0.0}, 0.0);
  expect_near(cis(kPi), Complex{-1.0, 0.0});
  expect_near(cis(kPi / 2), Complex{0.0, 1.0});
}

TEST(Conj, Definition) {
  EXPECT_EQ(conj(Complex{3, 4}), (Complex{3, -4}));
  EXPECT_EQ(conj(Complex{5, 0}), (Complex{5, 0}));
  EXPECT_EQ(conj(Complex{0, -2}), (Complex{0, 2}));
  const Complex z{1.25, -7.5};
  EXPECT_EQ(conj(conj(z)), z);
}

TEST(ReflectX, MirrorsInRealAxis) {
  EXPECT_EQ(reflect_x(Complex{1, 1}), (Complex{1, -1}));
  EXPECT_EQ(reflect_x(Complex{2, 0}), (Complex{2, 0}));
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Complex z = rng.complex(-50, 50);
    EXPECT_EQ(reflect_x(reflect_x(z)), z);
    EXPECT_EQ(reflect_x(z), conj(z));
  }
}

TEST(Translate, AddsVector) {
  EXPECT_EQ(translate(Complex{1, 2}, Complex{}), (Complex{1, 2}));
  EXPECT_EQ(translate(Complex{1, 0}, Complex{0, 3}), (Complex{1, 3}));
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const Complex z = rng.complex(-50, 50), a = rng.complex(-50, 50);
    expect_near(translate(translate(z, a), -a), z, 1e-13);
  }
}

TEST(RotateAbout, Examples) {
  expect_near(rotate_about(Complex{2, 0}, Complex{}, Angle{kPi / 2}), Complex{0, 2});
  expect_near(rotate_about(Complex{3, 0}, Complex{1, 0}, Angle{kPi}), Complex{-1, 0});
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const Complex z = rng.complex(-10, 10), a = rng.complex(-10, 10);
    expect_near(rotate_about(z, a, Angle{0.0}), z, 1e-14);
    // The center is fixed.
    expect_near(rotate_about(a, a, Angle{rng.uniform(-kPi, kPi)}), a, 0.0);
  }
}

TEST(AngleOf, ExamplesAndBranchCut) {
  EXPECT_NEAR(angle_of(cis(kPi / 3)).radians(), kPi / 3, 1e-15);
  EXPECT_EQ(angle_of(Complex{1, 0}).radians(), 0.0);
  EXPECT_EQ(angle_of(Complex{-1, 0}).radians(), kPi);
  // Negative zero imaginary part still maps to +pi.
  EXPECT_EQ(angle_of(Complex{-1, -0.0}).radians(), kPi);
  EXPECT_EQ(angle_of(cis(-kPi)).radians() > 0.0, true);
}

TEST(AngleOf, RejectsOffCircle) {
  EXPECT_THROW(angle_of(Complex{2, 0}), NotUnit);
  EXPECT_THROW(angle_of(Complex{0, 0}), NotUnit);
}

TEST(UnitComplex, NormalizesSmallDriftRejectsLarge) {
  const UnitComplex kept{Complex{1.0 + 1e-13, 0.0}};
  EXPECT_EQ(kept.re(), 1.0 + 1e-13);
  const UnitComplex fixed{Complex{0.0, 1.0 + 1e-10}};
  EXPECT_EQ(fixed.im(), 1.0);
  EXPECT_THROW(UnitComplex{Complex(0.0, 1.0 + 1e-8)}, NotUnit);
}

TEST(Mul, ComposesRotations) {
  expect_near(mul(cis(kPi / 6), cis(kPi / 3)), Complex{0, 1});
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const UnitComplex u = cis(rng.uniform(-10 * kPi, 10 * kPi));
    expect_near(u * cis(0.0), u, 0.0);
    expect_near(u * u.conj(), Complex{1, 0}, 1e-15);
  }
}

TEST(Angle, NormalizesToHalfOpenInterval) {
  EXPECT_EQ(Angle{kPi}.normalized().radians(), kPi);
  EXPECT_EQ(Angle{-kPi}.normalized().radians(), kPi);
  EXPECT_NEAR(Angle{3 * kPi}.normalized().radians(), kPi, 1e-15);
  EXPECT_NEAR(Angle{-kPi / 2 + 4 * kPi}.normalized().radians(), -kPi / 2, 1e-14);
  EXPECT_NEAR(Angle::degrees(90).radians(), kPi / 2, 0.0);
  Rng rng(15);
  for (int i = 0; i < 1000; ++i) {
    const double t = rng.uniform(-100, 100);
    const double n = Angle{t}.normalized().radians();
    EXPECT_GT(n, -kPi);
    EXPECT_LE(n, kPi);
    EXPECT_NEAR(std::remainder(n - t, 2 * kPi), 0.0, 1e-13);
  }
}

TEST(GaussPlaneProperties, ConjugationCommutesWithSumsAndProducts) {
  Rng rng(16);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = rng.integer(1, 8);
    Complex sum, conj_sum;
    for (int k = 0; k < n; ++k) {
      const Complex z = rng.complex(-100, 100);
      sum = sum + z;
      conj_sum = conj_sum + conj(z);
    }
    EXPECT_EQ(conj(sum), conj_sum);

    const int m = rng.integer(1, 5);
    Complex prod = Complex::real(1.0), conj_prod = Complex::real(1.0);
    double scale = 1.0;
    for (int k = 0; k < m; ++k) {
      const Complex z = rng.complex(-10, 10);
      prod = prod * z;
      conj_prod = conj_prod * conj(z);
      scale *= z.abs();
    }
    EXPECT_LE((conj(prod) - conj_prod).abs(), 1e-12 * scale);
  }
}

TEST(GaussPlaneProperties, IsometriesPreserveDistance) {
  Rng rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const Complex z1 = rng.complex(-20, 20), z2 = rng.complex(-20, 20), a = rng.complex(-20, 20);
    const Angle t{rng.uniform(-10 * kPi, 10 * kPi)};
    const double d = (z1 - z2).abs();
    EXPECT_NEAR((rotate_about(z1, a, t) - rotate_about(z2, a, t)).abs(), d, 1e-12);
    EXPECT_NEAR((translate(z1, a) - translate(z2, a)).abs(), d, 1e-12);
    EXPECT_NEAR((reflect_x(z1) - reflect_x(z2)).abs(), d, 1e-12);
  }
}
