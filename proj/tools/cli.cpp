#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rpr3/rpr3.h"

namespace rpr3::cli {

namespace {

/// Failure carrying the process exit code.
struct CommandError : std::runtime_error {
  CommandError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

using GeometryPtr = std::unique_ptr<rpr3_geometry, decltype(&rpr3_geometry_destroy)>;
using FkResultPtr = std::unique_ptr<rpr3_fk_result, decltype(&rpr3_fk_result_destroy)>;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string complex_json(rpr3_complex z) {
  return "{\"re\":" + num(z.re) + ",\"im\":" + num(z.im) + "}";
}

std::string triple_json(const double (&v)[3]) {
  return "[" + num(v[0]) + "," + num(v[1]) + "," + num(v[2]) + "]";
}

std::string error_json(const std::string& error) {
  return nlohmann::json{{"error", error}}.dump();
}

std::vector<double> parse_list(const std::string& text, std::size_t expected,
                               const std::string& flag) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string field =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size() ||
        !std::isfinite(v))
      throw CommandError(kUsage, flag + ": cannot parse number \"" + field + "\"");
    values.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (expected != 0 && values.size() != expected)
    throw CommandError(kUsage, flag + ": expected " + std::to_string(expected) +
                                   " comma-separated values, got " +
                                   std::to_string(values.size()));
  return values;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError(kUsage, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Converts a C API failure into a CommandError with the given exit code.
void check(rpr3_status status, int code = kUsage) {
  if (status != RPR3_OK)
    throw CommandError(code, std::string(rpr3_status_name(status)) + ": " + rpr3_last_error());
}

GeometryPtr load_geometry(const std::string& path) {
  const std::string text = read_file(path);
  rpr3_geometry* g = nullptr;
  check(rpr3_geometry_load_json(text.c_str(), &g));
  return {g, &rpr3_geometry_destroy};
}

std::string config_fields(const rpr3_configuration& c, double residual_norm) {
  return "\"s\":" + triple_json(c.s) + ",\"theta\":" + triple_json(c.theta) +
         ",\"alpha\":" + num(c.alpha) + ",\"residual_norm\":" + num(residual_norm);
}

double residual_norm(const rpr3_geometry* g, const rpr3_configuration& c) {
  rpr3_residual r;
  check(rpr3_residual_eval(g, &c, &r));
  return r.norm;
}

struct IkOutcome {
  std::optional<rpr3_configuration> config;
  std::string error;  ///< "SingularLeg:<leg>" when config is empty
};

IkOutcome solve_ik(const rpr3_geometry* g, double re, double im, double alpha) {
  rpr3_configuration c;
  int leg = -1;
  const rpr3_status st = rpr3_inverse(g, rpr3_pose{{re, im}, alpha}, &c, &leg);
  if (st == RPR3_ERR_SINGULAR_LEG)
    return {std::nullopt, std::string("SingularLeg:") + static_cast<char>('a' + leg)};
  check(st);
  return {c, {}};
}

int cmd_ik(const std::string& geometry, const std::string& pose, std::ostream& out,
           std::ostream& err) {
  const auto g = load_geometry(geometry);
  const auto p = parse_list(pose, 3, "--pose");
  const IkOutcome ik = solve_ik(g.get(), p[0], p[1], p[2]);
  if (!ik.config) {
    err << error_json(ik.error) << '\n';
    return kSingularLeg;
  }
  out << '{' << config_fields(*ik.config, residual_norm(g.get(), *ik.config)) << "}\n";
  return kOk;
}

int cmd_fk(const std::string& geometry, const std::string& lengths, int grid, std::ostream& out,
           std::ostream& err) {
  const auto g = load_geometry(geometry);
  const auto s = parse_list(lengths, 3, "--s");
  for (double v : s)
    if (!(v > 0.0)) throw CommandError(kUsage, "--s: lengths must be positive");

  rpr3_fk_options opts = rpr3_fk_default_options();
  opts.grid_size = grid;
  rpr3_fk_result* raw = nullptr;
  const rpr3_status st = rpr3_forward(g.get(), s.data(), &opts, &raw);
  if (st == RPR3_ERR_NON_CONVERGENCE) {
    err << error_json(rpr3_last_error()) << '\n';
    return kNonConvergence;
  }
  check(st);
  const FkResultPtr result(raw, &rpr3_fk_result_destroy);

  const std::size_t n = rpr3_fk_result_count(result.get());
  for (std::size_t i = 0; i < n; ++i) {
    rpr3_configuration c;
    double norm = 0.0;
    int iters = 0;
    check(rpr3_fk_result_get(result.get(), i, &c, &norm, &iters));
    out << '{' << config_fields(c, norm) << ",\"newton_iterations\":" << iters << "}\n";
  }
  err << "solutions: " << n << '\n';
  return kOk;
}

int cmd_residual(const std::string& geometry, const std::string& config, std::ostream& out) {
  const auto g = load_geometry(geometry);
  const auto v = parse_list(config, 7, "--config");
  const rpr3_configuration c{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, v[6]};
  rpr3_residual r;
  check(rpr3_residual_eval(g.get(), &c, &r));
  out << "{\"r1\":" << complex_json(r.r[0]) << ",\"r2\":" << complex_json(r.r[1])
      << ",\"r3\":" << complex_json(r.r[2]) << ",\"r4\":" << complex_json(r.r[3])
      << ",\"residual_norm\":" << num(r.norm) << "}\n";
  return kOk;
}

int cmd_workspace(const std::string& geometry, const std::string& grid_text,
                  const std::string& alphas_text, std::ostream& out) {
  const auto g = load_geometry(geometry);
  int has_limits = 0;
  double s_min = 0.0, s_max = 0.0;
  check(rpr3_geometry_limits(g.get(), &has_limits, &s_min, &s_max));
  if (!has_limits) throw CommandError(kUsage, "workspace: geometry file has no \"limits\"");

  const auto grid = parse_list(grid_text, 6, "--grid");
  const double x_min = grid[0], x_max = grid[1], y_min = grid[2], y_max = grid[3];
  if (grid[4] != std::floor(grid[4]) || grid[5] != std::floor(grid[5]) || grid[4] < 2 ||
      grid[5] < 2)
    throw CommandError(kUsage, "--grid: nx and ny must be integers >= 2");
  if (!(x_min < x_max) || !(y_min < y_max))
    throw CommandError(kUsage, "--grid: need x_min < x_max and y_min < y_max");
  const int nx = static_cast<int>(grid[4]);
  const int ny = static_cast<int>(grid[5]);
  const auto alphas = parse_list(alphas_text, 0, "--alphas");

  std::string csv = "x,y,alpha,reachable,s_a,s_b,s_c\n";
  for (int iy = 0; iy < ny; ++iy) {
    const double y = y_min + (y_max - y_min) * iy / (ny - 1);
    for (int ix = 0; ix < nx; ++ix) {
      const double x = x_min + (x_max - x_min) * ix / (nx - 1);
      for (double alpha : alphas) {
        csv += num(x) + ',' + num(y) + ',' + num(alpha) + ',';
        const IkOutcome ik = solve_ik(g.get(), x, y, alpha);
        if (!ik.config) {
          csv += "0,,,\n";
          continue;
        }
        const auto& s = ik.config->s;
        bool reachable = true;
        for (double v : s) reachable = reachable && v >= s_min && v <= s_max;
        csv += std::string(reachable ? "1" : "0") + ',' + num(s[0]) + ',' + num(s[1]) + ',' +
               num(s[2]) + '\n';
      }
    }
  }
  out << csv;
  return kOk;
}

int cmd_traj(const std::string& geometry, const std::string& poses_path, std::ostream& out) {
  const auto g = load_geometry(geometry);
  std::istringstream lines(read_file(poses_path));

  struct Entry {
    int line;
    double re, im, alpha;
  };
  std::vector<Entry> entries;
  std::string text;
  for (int line = 1; std::getline(lines, text); ++line) {
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto where = "line " + std::to_string(line) + ": ";
    try {
      const auto doc = nlohmann::json::parse(text);
      if (!doc.is_object() || doc.size() != 2 || !doc.contains("p") || !doc.contains("alpha"))
        throw CommandError(kUsage, where + "expected {\"p\":{\"re\":..,\"im\":..},\"alpha\":..}");
      const auto& p = doc.at("p");
      if (!p.is_object() || p.size() != 2 || !p.contains("re") || !p.contains("im") ||
          !p.at("re").is_number() || !p.at("im").is_number() || !doc.at("alpha").is_number())
        throw CommandError(kUsage, where + "expected {\"p\":{\"re\":..,\"im\":..},\"alpha\":..}");
      entries.push_back(
          {line, p.at("re").get<double>(), p.at("im").get<double>(), doc.at("alpha").get<double>()});
    } catch (const nlohmann::json::exception& e) {
      throw CommandError(kUsage, where + e.what());
    }
  }

  for (const Entry& e : entries) {
    const IkOutcome ik = solve_ik(g.get(), e.re, e.im, e.alpha);
    if (ik.config)
      out << '{' << config_fields(*ik.config, residual_norm(g.get(), *ik.config)) << "}\n";
    else
      out << "{\"line\":" << e.line << ",\"error\":\"" << ik.error << "\"}\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kinematics of the 3RPR planar parallel manipulator", "rpr3"};
  app.require_subcommand(1);

  std::string geometry, pose, lengths, config, grid_text, alphas, poses;
  int fk_grid = rpr3_fk_default_options().grid_size;

  auto* ik = app.add_subcommand("ik", "inverse kinematics of one pose");
  ik->add_option("geometry", geometry, "geometry JSON file")->required();
  ik->add_option("--pose", pose, "\"re,im,alpha\"")->required();

  auto* fk = app.add_subcommand("fk", "all assembly modes for given actuator lengths");
  fk->add_option("geometry", geometry, "geometry JSON file")->required();
  fk->add_option("--s", lengths, "\"s_a,s_b,s_c\"")->required();
  fk->add_option("--grid", fk_grid, "alpha samples")->check(CLI::Range(3, 10'000'000));

  auto* res = app.add_subcommand("residual", "loop-closure residuals of a configuration");
  res->add_option("geometry", geometry, "geometry JSON file")->required();
  res->add_option("--config", config, "\"s_a,s_b,s_c,theta_a,theta_b,theta_c,alpha\"")
      ->required();

  auto* ws = app.add_subcommand("workspace", "reachability map over a grid of positions");
  ws->add_option("geometry", geometry, "geometry JSON file (with limits)")->required();
  ws->add_option("--grid", grid_text, "\"x_min,x_max,y_min,y_max,nx,ny\"")->required();
  ws->add_option("--alphas", alphas, "\"a1,a2,...\"")->required();

  auto* traj = app.add_subcommand("traj", "inverse kinematics along a pose sequence");
  traj->add_option("geometry", geometry, "geometry JSON file")->required();
  traj->add_option("--poses", poses, "JSON-lines pose file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*ik) return cmd_ik(geometry, pose, out, err);
    if (*fk) return cmd_fk(geometry, lengths, fk_grid, out, err);
    if (*res) return cmd_residual(geometry, config, out);
    if (*ws) return cmd_workspace(geometry, grid_text, alphas, out);
    if (*traj) return cmd_traj(geometry, poses, out);
  } catch (const CommandError& e) {
    err << e.what() << '\n';
    return e.code;
  }
  return kUsage;
}

}  // namespace rpr3::cli
