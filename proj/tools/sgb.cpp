// sgb: spectral gap bounds for hypersurfaces, with a mesh-based verifier.
//
// Exit codes: 0 success, 1 a bound exceeded the discrete eigenvalue,
// 2 invalid input, 3 numerical failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sgb/sgb.hpp"

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct SettingFlags {
  std::optional<std::size_t> grid_points;
  std::optional<double> golden_tol;
  std::optional<double> ode_step;
  std::optional<double> eig_tol;
  std::optional<std::uint64_t> eig_seed;
  std::optional<int> iter_cap;
};

// File (--config, else $SGB_CONFIG) first, flags on top.
sgb::Settings resolve_settings(const std::string& config_path, const SettingFlags& f) {
  sgb::Settings s;
  std::string path = config_path;
  if (path.empty())
    if (const char* env = std::getenv("SGB_CONFIG"); env && *env) path = env;
  if (!path.empty()) s = sgb::load_settings(path, s, false);
  if (f.grid_points) s.grid_points = *f.grid_points;
  if (f.golden_tol) s.golden_tol = *f.golden_tol;
  if (f.ode_step) s.ode_step = *f.ode_step;
  if (f.eig_tol) s.eig_tol = *f.eig_tol;
  if (f.eig_seed) s.eig_seed = *f.eig_seed;
  if (f.iter_cap) s.iter_cap = *f.iter_cap;
  sgb::validate(s);
  return s;
}

void kv(std::ostream& os, const std::string& key, const std::string& value) { os << key << " = " << value << '\n'; }
void kv(std::ostream& os, const std::string& key, double value) { kv(os, key, sgb::format_number(value)); }
void kv(std::ostream& os, const std::string& key, bool value) { kv(os, key, sgb::format_bool(value)); }

void print_bound(std::ostream& os, const std::string& name, double value, bool applicable) {
  kv(os, name, value);
  kv(os, name + ".applicable", applicable);
  kv(os, name + ".vacuous", value <= 0.0);
}

int cmd_bound(const sgb::CurvatureBounds& cb, const sgb::HypersurfaceData& hs, const sgb::Settings& s) {
  const sgb::BoundReport rep = sgb::evaluate_bounds(cb, hs, s.supremum());
  std::ostream& os = std::cout;
  kv(os, "n", std::to_string(cb.n));
  kv(os, "k", cb.k);
  kv(os, "K", cb.K);
  kv(os, "H_sigma", hs.H_sigma);
  kv(os, "S_sigma", hs.S_sigma);
  kv(os, "roll_R", hs.roll_R);
  if (rep.degenerate) {
    kv(os, "note", "totally geodesic (S_sigma = 0): every bound reduces to k/2 = " + sgb::format_number(0.5 * cb.k));
  } else {
    kv(os, "t_R", rep.t_R);
    kv(os, "r", rep.r);
    kv(os, "C_r", rep.c_r);
    const double end = sgb::comparison_endpoint(cb.K, hs.S_sigma);
    kv(os, "comparison_endpoint", end);
    // h'' + K h = 0 from (1, -sqrt S) vanishes at the endpoint; integrate to it.
    const double step = std::min(s.ode_step, end / 16.0);
    const sgb::OdeSolution sol = sgb::solve_comparison_ode([&](double) { return cb.K; }, 1.0,
                                                           -std::sqrt(hs.S_sigma), end, step);
    kv(os, "comparison_endpoint.h_rk4", sol.values.back());
  }
  kv(os, "rolling_condition", rep.rolling_condition);
  kv(os, "minimal", rep.minimal());
  print_bound(os, "bound_thm12", rep.rolling, true);
  print_bound(os, "bound_thm13", rep.explicit_, rep.rolling_condition);
  print_bound(os, "bound_cor14", rep.cauchy, rep.rolling_condition);
  print_bound(os, "bound_cor15", rep.unit_sphere, rep.rolling_condition && rep.sphere_ambient);
  print_bound(os, "bound_cw", rep.choi_wang, rep.minimal());
  kv(os, "best_applicable", rep.best_applicable());
  return 0;
}

// Writes to `path` or stdout; the file is written whole so partial output never lands.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw sgb::ValidationError("cannot open output file '" + path + "'");
  os << text;
  if (!os) throw sgb::ValidationError("failed writing '" + path + "'");
}

sgb::Family parse_family(const std::string& name) {
  if (name == "sphere") return sgb::Family::GeodesicSphere;
  if (name == "torus") return sgb::Family::ProductTorus;
  throw sgb::ValidationError("family must be sphere or torus");
}

int cmd_verify(const std::string& family, double param, int resolution, const std::string& mesh_in,
               const std::string& mesh_out, const std::string& out, const sgb::Settings& s) {
  const sgb::Family f = parse_family(family);
  std::optional<sgb::TriMesh> mesh;
  if (!mesh_in.empty()) mesh = sgb::load_s3mesh(mesh_in);
  if (!mesh_out.empty()) sgb::save_s3mesh(mesh_out, mesh ? *mesh : sgb::mesh_family(f, param, resolution));
  const sgb::VerifyRow row = sgb::verify_family(f, param, resolution, s, mesh);
  emit(out, std::string(sgb::kSweepHeader) + '\n' + sgb::csv_row(row) + '\n');
  if (const int v = row.violations(); v > 0) {
    std::cerr << "sgb verify: " << v << " applicable bound(s) exceed lambda1_discrete + 3*tol ("
              << sgb::format_number(row.lambda1_discrete) << " + 3*" << sgb::format_number(row.discretization_tol)
              << ")\n";
    return kExitViolation;
  }
  return 0;
}

int cmd_sweep(const std::string& family, double lo, double hi, int steps, int resolution, const std::string& out,
              const sgb::Settings& s) {
  const sgb::Family f = parse_family(family);
  if (!(hi >= lo)) throw sgb::ValidationError("sweep: --param-max must be >= --param-min");
  std::string text = std::string(sgb::kSweepHeader) + '\n';
  int violations = 0;
  for (double p : sgb::sweep_parameters(lo, hi, steps)) {
    const sgb::VerifyRow row = sgb::verify_family(f, p, resolution, s);
    violations += row.violations();
    text += sgb::csv_row(row) + '\n';
  }
  emit(out, text);
  if (violations > 0) {
    std::cerr << "sgb sweep: " << violations << " bound violation(s)\n";
    return kExitViolation;
  }
  return 0;
}

int cmd_eta(int n, double delta) {
  if (!(delta > 0.0)) throw sgb::ValidationError("eta: delta > 0 required");
  const sgb::EtaResult r = sgb::pinching_eta(n, delta);
  kv(std::cout, "n", std::to_string(n));
  kv(std::cout, "delta", delta);
  kv(std::cout, "c", r.c);
  kv(std::cout, "eta", r.eta);
  kv(std::cout, "bracket_width", r.bracket_width);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds for the first eigenvalue of hypersurfaces, with a mesh verifier"};
  app.require_subcommand(1);

  std::string config;
  SettingFlags flags;
  app.add_option("--config", config, "settings file (key = value); falls back to $SGB_CONFIG");
  app.add_option("--grid-points", flags.grid_points, "supremum grid size (>= 4096)");
  app.add_option("--golden-tol", flags.golden_tol, "golden-section relative tolerance");
  app.add_option("--ode-step", flags.ode_step, "RK4 step");
  app.add_option("--eig-tol", flags.eig_tol, "eigensolver tolerance");
  app.add_option("--eig-seed", flags.eig_seed, "eigensolver start-block seed");
  app.add_option("--iter-cap", flags.iter_cap, "eigensolver iteration cap");

  sgb::CurvatureBounds cb;
  sgb::HypersurfaceData hs;
  auto* bound = app.add_subcommand("bound", "evaluate every bound for given curvature data");
  bound->add_option("--n", cb.n, "hypersurface dimension")->required();
  bound->add_option("--k", cb.k, "Ricci lower bound (Ric >= k)")->required();
  bound->add_option("--K", cb.K, "sectional curvature upper bound")->required();
  bound->add_option("--H", hs.H_sigma, "sup |mean curvature|")->required();
  bound->add_option("--S", hs.S_sigma, "sup |second fundamental form|^2")->required();
  bound->add_option("--R", hs.roll_R, "rolling radius")->required();

  std::string family, mesh_in, mesh_out, out;
  double param = 0.0, pmin = 0.0, pmax = 0.0;
  int resolution = 0, steps = 0;
  auto* verify = app.add_subcommand("verify", "compare bounds with the discrete first eigenvalue of one surface");
  verify->add_option("--family", family, "sphere | torus")->required()->check(CLI::IsMember({"sphere", "torus"}));
  verify->add_option("--param", param, "rho0 (sphere) or a (torus)")->required();
  verify->add_option("--resolution", resolution, "subdivision level (sphere) or N for N x N (torus)")->required();
  verify->add_option("--mesh", mesh_in, "use this S3MESH file instead of generating one");
  verify->add_option("--mesh-out", mesh_out, "write the mesh used to this S3MESH file");
  verify->add_option("--out", out, "CSV output path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "verify over a parameter range, one CSV row each");
  sweep->add_option("--family", family, "sphere | torus")->required()->check(CLI::IsMember({"sphere", "torus"}));
  sweep->add_option("--param-min", pmin)->required();
  sweep->add_option("--param-max", pmax)->required();
  sweep->add_option("--steps", steps)->required();
  sweep->add_option("--resolution", resolution)->required();
  sweep->add_option("--out", out, "CSV output path (default stdout)");

  int eta_n = 2;
  double delta = 0.0;
  auto* eta = app.add_subcommand("eta", "pinching constant for volume excess delta");
  eta->add_option("--n", eta_n)->required();
  eta->add_option("--delta", delta)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    const sgb::Settings s = resolve_settings(config, flags);
    if (*bound) return cmd_bound(cb, hs, s);
    if (*verify) return cmd_verify(family, param, resolution, mesh_in, mesh_out, out, s);
    if (*sweep) return cmd_sweep(family, pmin, pmax, steps, resolution, out, s);
    if (*eta) return cmd_eta(eta_n, delta);
  } catch (const sgb::ValidationError& e) {
    std::cerr << "sgb: invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const sgb::NumericalError& e) {
    std::cerr << "sgb: numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "sgb: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
