/*
 * C interface to the rpr3 kinematics library.
 *
 * Every function returns an rpr3_status. On failure a human-readable
 * description is available from rpr3_last_error() until the next failing
 * call on the same thread. Handles are opaque and owned by the caller; they
 * are immutable after creation and may be shared between threads.
 */
#ifndef RPR3_H
#define RPR3_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(RPR3_BUILDING_LIBRARY)
#    define RPR3_API __declspec(dllexport)
#  else
#    define RPR3_API __declspec(dllimport)
#  endif
#else
#  define RPR3_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rpr3_status {
  RPR3_OK = 0,
  RPR3_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad length, bad option */
  RPR3_ERR_PARSE = 2,            /* malformed JSON */
  RPR3_ERR_SCHEMA = 3,           /* JSON does not match the geometry schema */
  RPR3_ERR_INVALID_GEOMETRY = 4, /* geometry invariants violated */
  RPR3_ERR_SINGULAR_LEG = 5,     /* a leg collapsed; joint angle undefined */
  RPR3_ERR_LIMITS = 6,           /* actuator length outside joint limits */
  RPR3_ERR_NON_CONVERGENCE = 7,  /* an FK root could not be polished */
  RPR3_ERR_INTERNAL = 8
} rpr3_status;

typedef struct rpr3_complex {
  double re;
  double im;
} rpr3_complex;

/* Legs are indexed a = 0, b = 1, c = 2. */
typedef struct rpr3_configuration {
  double s[3];
  double theta[3];
  double alpha;
} rpr3_configuration;

typedef struct rpr3_pose {
  rpr3_complex p;
  double alpha;
} rpr3_pose;

/* r[0..3] are the residuals of the two loop-closure equations and their
 * conjugates. */
typedef struct rpr3_residual {
  rpr3_complex r[4];
  double norm;
} rpr3_residual;

typedef struct rpr3_fk_options {
  int grid_size;
  int max_newton_iters;
  double dedupe_tol;
} rpr3_fk_options;

typedef struct rpr3_geometry rpr3_geometry;
typedef struct rpr3_fk_result rpr3_fk_result;

RPR3_API const char* rpr3_version(void);
RPR3_API const char* rpr3_status_name(rpr3_status status);
RPR3_API const char* rpr3_last_error(void);

RPR3_API rpr3_status rpr3_loop_count(int joints, int links, int* loops);

/* Geometry handles. beta in radians. */
RPR3_API rpr3_status rpr3_geometry_create(rpr3_complex d_ab, rpr3_complex d_ac, double l_ab,
                                          double l_ac, double beta, rpr3_geometry** out);
/* Parses a JSON geometry document (NUL-terminated). */
RPR3_API rpr3_status rpr3_geometry_load_json(const char* text, rpr3_geometry** out);
/* Writes the JSON document into buf (NUL-terminated) when it fits; *needed
 * always receives the size including the terminator. */
RPR3_API rpr3_status rpr3_geometry_save_json(const rpr3_geometry* g, char* buf, size_t cap,
                                             size_t* needed);
/* Returns a new handle with stroke limits attached. */
RPR3_API rpr3_status rpr3_geometry_with_limits(const rpr3_geometry* g, double s_min,
                                               double s_max, rpr3_geometry** out);
/* *has_limits is set to 0 or 1; s_min/s_max are written only when 1. */
RPR3_API rpr3_status rpr3_geometry_limits(const rpr3_geometry* g, int* has_limits,
                                          double* s_min, double* s_max);
RPR3_API void rpr3_geometry_destroy(rpr3_geometry* g);

/* Closed-form inverse kinematics. On RPR3_ERR_SINGULAR_LEG, *singular_leg
 * (if non-null) receives the leg index. */
RPR3_API rpr3_status rpr3_inverse(const rpr3_geometry* g, rpr3_pose pose,
                                  rpr3_configuration* out, int* singular_leg);
RPR3_API rpr3_status rpr3_pose_of(const rpr3_geometry* g, const rpr3_configuration* c,
                                  rpr3_pose* out);
RPR3_API rpr3_status rpr3_residual_eval(const rpr3_geometry* g, const rpr3_configuration* c,
                                        rpr3_residual* out);
/* Row-major 4x4: rows (Re r1, Im r1, Re r2, Im r2), columns
 * (theta_a, theta_b, theta_c, alpha). */
RPR3_API rpr3_status rpr3_fk_jacobian(const rpr3_geometry* g, const rpr3_configuration* c,
                                      double out[16]);

/* Forward kinematics. opts may be null for defaults. */
RPR3_API rpr3_fk_options rpr3_fk_default_options(void);
RPR3_API rpr3_status rpr3_forward(const rpr3_geometry* g, const double s[3],
                                  const rpr3_fk_options* opts, rpr3_fk_result** out);
RPR3_API size_t rpr3_fk_result_count(const rpr3_fk_result* r);
RPR3_API rpr3_status rpr3_fk_result_get(const rpr3_fk_result* r, size_t index,
                                        rpr3_configuration* config, double* residual_norm,
                                        int* newton_iterations);
RPR3_API void rpr3_fk_result_destroy(rpr3_fk_result* r);

#ifdef __cplusplus
}
#endif

#endif /* RPR3_H */
