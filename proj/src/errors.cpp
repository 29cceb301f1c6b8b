#include "rpr3/errors.hpp"

#include <cstdio>

namespace rpr3 {

const char* to_string(GeometryIssue issue) noexcept {
  switch (issue) {
    case GeometryIssue::NonFiniteField: return "NonFiniteField";
    case GeometryIssue::ZeroPlatformSide: return "ZeroPlatformSide";
    case GeometryIssue::ZeroBaseVector: return "ZeroBaseVector";
    case GeometryIssue::CoincidentBaseAnchors: return "CoincidentBaseAnchors";
    case GeometryIssue::InvalidLimits: return "InvalidLimits";
  }
  return "Unknown";
}

namespace {

std::string describe(const std::vector<GeometryIssue>& issues) {
  std::string msg = "invalid geometry:";
  for (auto issue : issues) msg += std::string(" ") + to_string(issue);
  return msg;
}

std::string alpha_message(double alpha) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "NonConvergence:%.17g", alpha);
  return buf;
}

}  // namespace

InvalidGeometry::InvalidGeometry(std::vector<GeometryIssue> issues)
    : Error(describe(issues)), issues_(std::move(issues)) {}

char leg_name(Leg leg) noexcept { return static_cast<char>('a' + static_cast<int>(leg)); }

SingularLeg::SingularLeg(Leg leg)
    : Error(std::string("SingularLeg:") + leg_name(leg)), leg_(leg) {}

NonConvergence::NonConvergence(double alpha) : Error(alpha_message(alpha)), alpha_(alpha) {}

}  // namespace rpr3
