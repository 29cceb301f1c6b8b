#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rpr3 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A real-valued input was NaN or infinite.
class NonFiniteValue : public Error {
public:
  using Error::Error;
};

/// A value that should lie on the unit circle is too far from it to be
/// renormalized.
class NotUnit : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Malformed JSON text.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Well-formed JSON that does not match the geometry schema.
class SchemaError : public Error {
public:
  using Error::Error;
};

enum class GeometryIssue {
  NonFiniteField,
  ZeroPlatformSide,
  ZeroBaseVector,
  CoincidentBaseAnchors,
  InvalidLimits,
};

const char* to_string(GeometryIssue issue) noexcept;

class InvalidGeometry : public Error {
public:
  explicit InvalidGeometry(std::vector<GeometryIssue> issues);
  const std::vector<GeometryIssue>& issues() const noexcept { return issues_; }

private:
  std::vector<GeometryIssue> issues_;
};

enum class Leg { A = 0, B = 1, C = 2 };

char leg_name(Leg leg) noexcept;

/// A leg has (near) zero length, so its joint angle is undefined.
class SingularLeg : public Error {
public:
  explicit SingularLeg(Leg leg);
  Leg leg() const noexcept { return leg_; }

private:
  Leg leg_;
};

/// Actuator lengths outside the geometry's joint limits.
class LimitViolation : public Error {
public:
  using Error::Error;
};

/// A bracketed forward-kinematics root could not be polished below tolerance.
class NonConvergence : public Error {
public:
  explicit NonConvergence(double alpha);
  double alpha() const noexcept { return alpha_; }

private:
  double alpha_;
};

}  // namespace rpr3
