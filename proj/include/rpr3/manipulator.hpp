#pragma once

// Fixed design data of a 3RPR planar parallel manipulator and its JSON file
// format. The base frame has its origin at anchor A.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rpr3/errors.hpp"
#include "rpr3/gauss_plane.hpp"

namespace rpr3 {

/// Actuator stroke limits, 0 < s_min < s_max.
struct JointLimits {
  double s_min = 0.0;
  double s_max = 0.0;

  bool contains(double s) const noexcept { return s >= s_min && s <= s_max; }
  friend bool operator==(const JointLimits&, const JointLimits&) = default;
};

struct Geometry {
  Complex d_ab;  ///< base vector A->B
  Complex d_ac;  ///< base vector A->C
  double l_ab = 0.0;  ///< platform side |O_a O_b|
  double l_ac = 0.0;  ///< platform side |O_a O_c|
  Angle beta;         ///< platform angle at O_a, normalized to (-pi, pi]
  std::optional<JointLimits> limits;  ///< absent means unbounded strokes

  friend bool operator==(const Geometry&, const Geometry&) = default;
};

/// Every violated invariant of g, empty when g is usable.
std::vector<GeometryIssue> check(const Geometry& g);

/// Returns g with beta normalized, or throws InvalidGeometry naming every
/// violated invariant.
Geometry validate(Geometry g);

/// Kinematic chain size: j joints, n links (ground included).
struct Topology {
  int joints = 1;
  int links = 2;
};

/// Number of independent loops, L = j + 1 - n. Zero or negative for open
/// chains.
int loop_count(Topology t);

/// Parses and validates a geometry document. Throws ParseError, SchemaError
/// or InvalidGeometry.
Geometry load_geometry(std::string_view json_text);

/// Serializes g in the same schema (beta written in radians). The output
/// round-trips exactly through load_geometry.
std::string save_geometry(const Geometry& g);

/// The reference desk-scale machine: B at 10, C at 10i, sides 4, beta = pi/2.
Geometry square_geometry();

}  // namespace rpr3
