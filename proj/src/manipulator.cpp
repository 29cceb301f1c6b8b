#include "rpr3/manipulator.hpp"

#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

namespace rpr3 {

namespace {

bool finite(Complex z) { return std::isfinite(z.re()) && std::isfinite(z.im()); }

using json = nlohmann::json;

void require_keys(const json& obj, std::string_view where,
                  const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!obj.is_object())
    throw SchemaError(std::string(where) + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!required.contains(key) && !optional.contains(key))
      throw SchemaError(std::string(where) + ": unknown key \"" + key + "\"");
  }
  for (const auto& key : required) {
    if (!obj.contains(key))
      throw SchemaError(std::string(where) + ": missing key \"" + key + "\"");
  }
}

double number(const json& obj, const std::string& key, std::string_view where) {
  const json& v = obj.at(key);
  if (!v.is_number())
    throw SchemaError(std::string(where) + "." + key + ": expected a number");
  return v.get<double>();
}

Complex complex_field(const json& obj, const std::string& key) {
  const json& v = obj.at(key);
  require_keys(v, key, {"re", "im"});
  const double re = number(v, "re", key);
  const double im = number(v, "im", key);
  if (!std::isfinite(re) || !std::isfinite(im))
    throw InvalidGeometry({GeometryIssue::NonFiniteField});
  return Complex{re, im};
}

json complex_json(Complex z) { return json{{"re", z.re()}, {"im", z.im()}}; }

}  // namespace

std::vector<GeometryIssue> check(const Geometry& g) {
  std::vector<GeometryIssue> issues;
  // Complex and Angle cannot hold non-finite values; the lengths can.
  const bool lengths_finite = std::isfinite(g.l_ab) && std::isfinite(g.l_ac);
  const bool limits_finite =
      !g.limits || (std::isfinite(g.limits->s_min) && std::isfinite(g.limits->s_max));
  if (!lengths_finite || !limits_finite || !finite(g.d_ab) || !finite(g.d_ac))
    issues.push_back(GeometryIssue::NonFiniteField);
  if (!(g.l_ab > 0.0) || !(g.l_ac > 0.0))
    issues.push_back(GeometryIssue::ZeroPlatformSide);
  if (g.d_ab == Complex{} || g.d_ac == Complex{})
    issues.push_back(GeometryIssue::ZeroBaseVector);
  if (g.d_ab == g.d_ac) issues.push_back(GeometryIssue::CoincidentBaseAnchors);
  if (g.limits && !(g.limits->s_min > 0.0 && g.limits->s_max > g.limits->s_min))
    issues.push_back(GeometryIssue::InvalidLimits);
  return issues;
}

Geometry validate(Geometry g) {
  auto issues = check(g);
  if (!issues.empty()) throw InvalidGeometry(std::move(issues));
  g.beta = g.beta.normalized();
  return g;
}

int loop_count(Topology t) {
  if (t.joints < 1 || t.links < 2)
    throw InvalidArgument("topology needs at least one joint and two links");
  return t.joints + 1 - t.links;
}

Geometry load_geometry(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }

  require_keys(doc, "geometry", {"d_ab", "d_ac", "l_ab", "l_ac"},
               {"beta_radians", "beta_degrees", "limits"});
  const bool has_rad = doc.contains("beta_radians");
  const bool has_deg = doc.contains("beta_degrees");
  if (has_rad == has_deg)
    throw SchemaError("geometry: exactly one of beta_radians, beta_degrees is required");

  Geometry g;
  g.d_ab = complex_field(doc, "d_ab");
  g.d_ac = complex_field(doc, "d_ac");
  g.l_ab = number(doc, "l_ab", "geometry");
  g.l_ac = number(doc, "l_ac", "geometry");
  const double beta = has_rad ? number(doc, "beta_radians", "geometry")
                              : number(doc, "beta_degrees", "geometry");
  if (!std::isfinite(beta)) throw InvalidGeometry({GeometryIssue::NonFiniteField});
  g.beta = has_rad ? Angle{beta} : Angle::degrees(beta);

  if (doc.contains("limits")) {
    const json& lim = doc.at("limits");
    require_keys(lim, "limits", {"s_min", "s_max"});
    g.limits = JointLimits{number(lim, "s_min", "limits"), number(lim, "s_max", "limits")};
  }
  return validate(g);
}

std::string save_geometry(const Geometry& g) {
  json doc = {
      {"d_ab", complex_json(g.d_ab)},
      {"d_ac", complex_json(g.d_ac)},
      {"l_ab", g.l_ab},
      {"l_ac", g.l_ac},
      {"beta_radians", g.beta.radians()},
  };
  if (g.limits) doc["limits"] = {{"s_min", g.limits->s_min}, {"s_max", g.limits->s_max}};
  return doc.dump(2);
}

Geometry square_geometry() {
  return Geometry{Complex{10.0, 0.0}, Complex{0.0, 10.0}, 4.0, 4.0,
                  Angle{std::numbers::pi / 2.0}, std::nullopt};
}

}  // namespace rpr3
