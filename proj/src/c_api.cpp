#include "rpr3/rpr3.h"

#include <cstring>
#include <new>
#include <string>

#include "rpr3/kinematics.hpp"

struct rpr3_geometry {
  rpr3::Geometry g;
};

struct rpr3_fk_result {
  std::vector<rpr3::FkSolution> solutions;
};

namespace {

thread_local std::string last_error;

rpr3_status fail(rpr3_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

/// Runs fn, mapping library exceptions to status codes.
template <class Fn>
rpr3_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return RPR3_OK;
  } catch (const rpr3::SingularLeg& e) {
    return fail(RPR3_ERR_SINGULAR_LEG, e.what());
  } catch (const rpr3::ParseError& e) {
    return fail(RPR3_ERR_PARSE, e.what());
  } catch (const rpr3::SchemaError& e) {
    return fail(RPR3_ERR_SCHEMA, e.what());
  } catch (const rpr3::InvalidGeometry& e) {
    return fail(RPR3_ERR_INVALID_GEOMETRY, e.what());
  } catch (const rpr3::LimitViolation& e) {
    return fail(RPR3_ERR_LIMITS, e.what());
  } catch (const rpr3::NonConvergence& e) {
    return fail(RPR3_ERR_NON_CONVERGENCE, e.what());
  } catch (const rpr3::Error& e) {
    return fail(RPR3_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RPR3_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RPR3_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RPR3_ERR_INTERNAL, "unknown error");
  }
}

rpr3::Complex to_cpp(rpr3_complex z) { return rpr3::Complex{z.re, z.im}; }
rpr3_complex to_c(rpr3::Complex z) { return {z.re(), z.im()}; }

rpr3::Configuration to_cpp(const rpr3_configuration& c) {
  rpr3::Configuration out;
  out.s_a = c.s[0];
  out.s_b = c.s[1];
  out.s_c = c.s[2];
  out.theta_a = rpr3::Angle{c.theta[0]};
  out.theta_b = rpr3::Angle{c.theta[1]};
  out.theta_c = rpr3::Angle{c.theta[2]};
  out.alpha = rpr3::Angle{c.alpha};
  out.check();
  return out;
}

rpr3_configuration to_c(const rpr3::Configuration& c) {
  return {{c.s_a, c.s_b, c.s_c},
          {c.theta_a.radians(), c.theta_b.radians(), c.theta_c.radians()},
          c.alpha.radians()};
}

#define RPR3_REQUIRE(cond)                                                   \
  do {                                                                       \
    if (!(cond)) return fail(RPR3_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* rpr3_version(void) { return "1.0.0"; }

const char* rpr3_status_name(rpr3_status status) {
  switch (status) {
    case RPR3_OK: return "Ok";
    case RPR3_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case RPR3_ERR_PARSE: return "ParseError";
    case RPR3_ERR_SCHEMA: return "SchemaError";
    case RPR3_ERR_INVALID_GEOMETRY: return "InvalidGeometry";
    case RPR3_ERR_SINGULAR_LEG: return "SingularLeg";
    case RPR3_ERR_LIMITS: return "LimitViolation";
    case RPR3_ERR_NON_CONVERGENCE: return "NonConvergence";
    case RPR3_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* rpr3_last_error(void) { return last_error.c_str(); }

rpr3_status rpr3_loop_count(int joints, int links, int* loops) {
  RPR3_REQUIRE(loops);
  return guarded([&] { *loops = rpr3::loop_count({joints, links}); });
}

rpr3_status rpr3_geometry_create(rpr3_complex d_ab, rpr3_complex d_ac, double l_ab, double l_ac,
                                 double beta, rpr3_geometry** out) {
  RPR3_REQUIRE(out);
  return guarded([&] {
    rpr3::Geometry g{to_cpp(d_ab), to_cpp(d_ac), l_ab, l_ac, rpr3::Angle{beta}, std::nullopt};
    *out = new rpr3_geometry{rpr3::validate(g)};
  });
}

rpr3_status rpr3_geometry_load_json(const char* text, rpr3_geometry** out) {
  RPR3_REQUIRE(text);
  RPR3_REQUIRE(out);
  return guarded([&] { *out = new rpr3_geometry{rpr3::load_geometry(text)}; });
}

rpr3_status rpr3_geometry_save_json(const rpr3_geometry* g, char* buf, size_t cap,
                                    size_t* needed) {
  RPR3_REQUIRE(g);
  RPR3_REQUIRE(needed);
  return guarded([&] {
    const std::string text = rpr3::save_geometry(g->g);
    *needed = text.size() + 1;
    if (buf && cap >= *needed) std::memcpy(buf, text.c_str(), *needed);
    else if (buf) throw rpr3::InvalidArgument("buffer too small");
  });
}

rpr3_status rpr3_geometry_with_limits(const rpr3_geometry* g, double s_min, double s_max,
                                      rpr3_geometry** out) {
  RPR3_REQUIRE(g);
  RPR3_REQUIRE(out);
  return guarded([&] {
    rpr3::Geometry copy = g->g;
    copy.limits = rpr3::JointLimits{s_min, s_max};
    *out = new rpr3_geometry{rpr3::validate(copy)};
  });
}

rpr3_status rpr3_geometry_limits(const rpr3_geometry* g, int* has_limits, double* s_min,
                                 double* s_max) {
  RPR3_REQUIRE(g);
  RPR3_REQUIRE(has_limits);
  *has_limits = g->g.limits.has_value() ? 1 : 0;
  if (g->g.limits) {
    if (s_min) *s_min = g->g.limits->s_min;
    if (s_max) *s_max = g->g.limits->s_max;
  }
  return RPR3_OK;
}

void rpr3_geometry_destroy(rpr3_geometry* g) { delete g; }

rpr3_status rpr3_inverse(const rpr3_geometry* g, rpr3_pose pose, rpr3_configuration* out,
                         int* singular_leg) {
  RPR3_REQUIRE(g);
  RPR3_REQUIRE(out);
  try {
    const rpr3::Pose p{to_cpp(pose.p), rpr3::Angle{pose.alpha}};
    *out = to_c(rpr3::inverse(g->g, p));
    return RPR3_OK;
  } catch (const rpr3::SingularLeg& e) {
    if (singular_leg) *singular_leg = static_cast<int>(e.leg());
    return fail(RPR3_ERR_SINGULAR_LEG, e.what());
  } catch (...) {
    return guarded([] { throw; });
  }
}

rpr3_status rpr3_pose_of(const rpr3_geometry* g, const rpr3_configuration* c, rpr3_pose* out) {
  RPR3_REQUIRE(g);
  RPR3_REQUIRE(c);
  RPR3_REQUIRE(out);
  return guarded([&] {
    const rpr3::Pose p = rpr3::pose_of(g->g, to_cpp(*c));
    *out = {to_c(p.p), p.alpha.radians()};
  });
}

rpr3_status rpr3_residual_eval(const rpr3_geometry* g, const rpr3_configuration* c,
                               rpr3_residual* out) {
  RPR3_REQUIRE(g);
  RPR3_REQUIRE(c);
  RPR3_REQUIRE(out);
  return guarded([&] {
    const rpr3::Configuration cfg = to_cpp(*c);
    const rpr3::Residual r = rpr3::residual(g->g, cfg);
    *out = {{to_c(r.r1), to_c(r.r2), to_c(r.r3), to_c(r.r4)}, rpr3::residual_norm(g->g, cfg)};
  });
}

rpr3_status rpr3_fk_jacobian(const rpr3_geometry* g, const rpr3_configuration* c,
                             double out[16]) {
  RPR3_REQUIRE(g);
  RPR3_REQUIRE(c);
  RPR3_REQUIRE(out);
  return guarded([&] {
    const rpr3::FkJacobian j = rpr3::fk_jacobian(g->g, to_cpp(*c));
    for (int r = 0; r < 4; ++r)
      for (int col = 0; col < 4; ++col) out[4 * r + col] = j(r, col);
  });
}

rpr3_fk_options rpr3_fk_default_options(void) {
  const rpr3::FkOptions d;
  return {d.grid_size, d.max_newton_iters, d.dedupe_tol};
}

rpr3_status rpr3_forward(const rpr3_geometry* g, const double s[3], const rpr3_fk_options* opts,
                         rpr3_fk_result** out) {
  RPR3_REQUIRE(g);
  RPR3_REQUIRE(s);
  RPR3_REQUIRE(out);
  return guarded([&] {
    rpr3::FkOptions o;
    if (opts) {
      o.grid_size = opts->grid_size;
      o.max_newton_iters = opts->max_newton_iters;
      o.dedupe_tol = opts->dedupe_tol;
    }
    if (o.max_newton_iters < 0 || !(o.dedupe_tol >= 0.0))
      throw rpr3::InvalidArgument("invalid forward-kinematics options");
    *out = new rpr3_fk_result{rpr3::forward(g->g, s[0], s[1], s[2], o)};
  });
}

size_t rpr3_fk_result_count(const rpr3_fk_result* r) { return r ? r->solutions.size() : 0; }

rpr3_status rpr3_fk_result_get(const rpr3_fk_result* r, size_t index, rpr3_configuration* config,
                               double* residual_norm, int* newton_iterations) {
  RPR3_REQUIRE(r);
  if (index >= r->solutions.size())
    return fail(RPR3_ERR_INVALID_ARGUMENT, "solution index out of range");
  const rpr3::FkSolution& sol = r->solutions[index];
  if (config) *config = to_c(sol.config);
  if (residual_norm) *residual_norm = sol.residual_norm;
  if (newton_iterations) *newton_iterations = sol.newton_iterations;
  return RPR3_OK;
}

void rpr3_fk_result_destroy(rpr3_fk_result* r) { delete r; }

}  // extern "C"
