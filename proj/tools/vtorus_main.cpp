// Command-line front end: point evaluation, grid generation, oracle
// comparison, and the randomized verification suite.
//
// Exit codes
//   0  success
//   1  usage / parse / bad-spec errors
//   2  eval: point rejected as off the variety
//   3  grid: I/O failure
//   4  oracle: gap outside the target bracket; verify: failed invariants
//   5  oracle: LP unbounded (sample set too thin)

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vtorus/extremal.hpp"
#include "vtorus/grid_io.hpp"
#include "vtorus/siciak_oracle.hpp"
#include "vtorus/verification.hpp"

namespace {

using vtorus::Complex;

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      return Complex(std::stod(text), 0.0);
    }
    return Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected a complex number as re,im: got '" + text + "'");
  }
}

struct EvalArgs {
  double R = 2.0, r = 1.0;
  std::vector<std::string> point;
  std::optional<std::string> theta, phi;
  int leaf_outer = +1, leaf_z3 = +1;
};

int run_eval(const EvalArgs& a) {
  const vtorus::TorusParams params(a.R, a.r);
  vtorus::ComplexPoint3 z;
  if (a.theta && a.phi) {
    z = vtorus::param_point(params, parse_complex(*a.theta), parse_complex(*a.phi));
  } else if (a.point.size() == 3) {
    z = vtorus::ComplexPoint3(parse_complex(a.point[0]), parse_complex(a.point[1]),
                              parse_complex(a.point[2]));
  } else if (a.point.size() == 2) {
    const Complex z1 = parse_complex(a.point[0]);
    const Complex z2 = parse_complex(a.point[1]);
    z = vtorus::ComplexPoint3(
        z1, z2, vtorus::leaf_z3(params, z1, z2, vtorus::LeafIndex{a.leaf_outer, a.leaf_z3}));
  } else {
    std::cerr << "eval: give --point with 3 coordinates, --point with 2 plus leaf flags, "
                 "or --theta/--phi\n";
    return 1;
  }

  const double residual = vtorus::membership_residual(params, z);
  nlohmann::json out;
  out["residual"] = residual;
  try {
    const vtorus::EvalResult ev = vtorus::v_torus(params, z);
    out["value"] = ev.value;
    out["active_branch"] = vtorus::to_string(ev.active_branch);
    out["h_argument"] = ev.h_argument;
  } catch (const vtorus::OffVarietyError& err) {
    out["error"] = "off-variety";
    out["message"] = err.what();
    std::cout << out.dump() << "\n";
    std::cerr << "rejected: residual " << err.residual() << " exceeds 1e-8\n";
    return 2;
  }
  std::cout << out.dump() << "\n";
  return 0;
}

struct GridArgs {
  double R = 2.0, r = 1.0;
  std::string chart = "real-z1z2";
  int leaf_outer = +1, leaf_z3 = +1;
  double x_min = -4, x_max = 4, y_min = -4, y_max = 4;
  int nx = 65, ny = 65;
  std::string format = "csv";
  std::string out_path;
  std::string colormap = "viridis";
  int threads = 1;
};

int run_grid(const GridArgs& a) {
  vtorus::GridSpec spec{vtorus::grid_chart_from_string(a.chart),
                        vtorus::LeafIndex{a.leaf_outer, a.leaf_z3},
                        a.x_min,
                        a.x_max,
                        a.y_min,
                        a.y_max,
                        a.nx,
                        a.ny,
                        vtorus::TorusParams(a.R, a.r)};
  const vtorus::GridResult g = vtorus::evaluate_grid(spec, a.threads);

  double vmin = std::numeric_limits<double>::infinity(), vmax = 0;
  long zero_cells = 0;
  for (const auto& node : g.values) {
    if (!std::isfinite(node.value)) continue;
    vmin = std::min(vmin, node.value);
    vmax = std::max(vmax, node.value);
    if (node.value == 0.0) ++zero_cells;
  }

  try {
    if (a.format == "csv") {
      vtorus::write_csv(g, a.out_path);
    } else if (a.format == "json") {
      vtorus::write_json(g, a.out_path);
    } else if (a.format == "svg") {
      const auto map = a.colormap == "gray" ? vtorus::ColorMap::Grayscale
                                            : vtorus::ColorMap::Viridis;
      vtorus::render_svg(g, a.out_path, map);
    } else {
      std::cerr << "grid: unknown format '" << a.format << "' (csv|json|svg)\n";
      return 1;
    }
  } catch (const std::runtime_error& err) {
    std::cerr << "grid: " << err.what() << "\n";
    return 3;
  }
  std::cerr << "grid " << a.nx << "x" << a.ny << " -> " << a.out_path << "  min " << vmin
            << "  max " << vmax << "  zero cells " << zero_cells << "\n";
  return 0;
}

struct OracleArgs {
  double R = 2.0, r = 1.0;
  std::string target = "interval";
  std::vector<int> degrees = {2, 4};
  std::vector<std::string> point;
  std::optional<std::string> theta, phi;
  int samples = 0;  // 0 = per-target default
  int directions = 32;
  int objective_directions = 16;
  double lp_tolerance = 1e-9;
};

struct TargetSetup {
  std::vector<Eigen::VectorXcd> samples;
  vtorus::DegreePolytope polytope;
  Eigen::VectorXcd z;
  double formula_value;
  double gap_lo;
  double gap_hi;  // checked at the largest degree only
};

TargetSetup make_target(const OracleArgs& a) {
  const vtorus::TorusParams p(a.R, a.r);
  auto need_point = [&](int dim) {
    if (static_cast<int>(a.point.size()) != dim) {
      throw CLI::ValidationError("target needs --point with " + std::to_string(dim) +
                                 " re,im coordinates");
    }
    Eigen::VectorXcd z(dim);
    for (int i = 0; i < dim; ++i) z(i) = parse_complex(a.point[static_cast<size_t>(i)]);
    return z;
  };
  if (a.target == "interval") {
    const int n = a.samples > 0 ? a.samples : 201;
    Eigen::VectorXcd z = need_point(1);
    return {vtorus::sample_interval(n), vtorus::DegreePolytope::unit_simplex(1), z,
            vtorus::v_interval(z(0)), -0.02, 0.15};
  }
  if (a.target == "simplex") {
    const int g = a.samples > 0 ? a.samples : 20;
    Eigen::VectorXcd z = need_point(2);
    return {vtorus::sample_unit_simplex(g), vtorus::DegreePolytope::unit_simplex(2), z,
            vtorus::v_simplex(vtorus::ComplexPoint2(z(0), z(1))), -0.02, 0.2};
  }
  if (a.target == "trapezoid") {
    const int g = a.samples > 0 ? a.samples : 33;
    Eigen::VectorXcd z = need_point(2);
    return {vtorus::sample_trapezoid(p, g, g), vtorus::DegreePolytope::unit_simplex(2), z,
            vtorus::v_trapezoid(p, vtorus::ComplexPoint2(z(0), z(1))).value, -0.02, 0.25};
  }
  if (a.target == "cylinder") {
    const int g = a.samples > 0 ? a.samples : 25;
    Eigen::VectorXcd z = need_point(2);
    return {vtorus::sample_pi_e(p, g, g), vtorus::DegreePolytope::sigma21(), z,
            vtorus::v_piE(p, vtorus::ComplexPoint2(z(0), z(1))), -0.05, 0.6};
  }
  if (a.target == "torus") {
    const int g = a.samples > 0 ? a.samples : 48;
    Eigen::VectorXcd z(3);
    if (a.theta && a.phi) {
      const auto pt = vtorus::param_point(p, parse_complex(*a.theta), parse_complex(*a.phi));
      z << pt(0), pt(1), pt(2);
    } else {
      z = need_point(3);
    }
    const vtorus::ComplexPoint3 zp(z(0), z(1), z(2));
    return {vtorus::sample_torus_points(p, g, g), vtorus::DegreePolytope::unit_simplex(3), z,
            vtorus::v_torus(p, zp).value, -0.05, 0.3};
  }
  throw CLI::ValidationError("unknown oracle target '" + a.target + "'");
}

int run_oracle(const OracleArgs& a) {
  TargetSetup setup = make_target(a);
  vtorus::OracleConfig cfg(1, setup.polytope);
  cfg.directions = a.directions;
  cfg.objective_directions = a.objective_directions;
  cfg.lp_tolerance = a.lp_tolerance;

  bool ok = true;
  try {
    const auto sweep = vtorus::convergence_sweep(cfg, setup.samples, setup.z, a.degrees);
    for (size_t i = 0; i < sweep.size(); ++i) {
      const auto& est = sweep[i];
      const double gap = setup.formula_value - est.lower_value;
      nlohmann::json row = nlohmann::json::parse(vtorus::oracle_report_json(est));
      row["formula_value"] = setup.formula_value;
      row["gap"] = gap;
      std::cout << row.dump() << "\n";
      if (gap < setup.gap_lo) ok = false;
      if (i + 1 == sweep.size() && gap > setup.gap_hi) ok = false;
    }
  } catch (const vtorus::OracleUnboundedError& err) {
    std::cerr << "oracle: " << err.what() << "\n";
    return 5;
  }
  if (!ok) {
    std::cerr << "oracle: gap outside the documented bracket [" << setup.gap_lo << ", "
              << setup.gap_hi << "] for target " << a.target << "\n";
    return 4;
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& a) {
  std::vector<vtorus::CheckReport> reports;
  try {
    reports = vtorus::run_verification_suite(a.suite, a.seed);
  } catch (const std::invalid_argument& err) {
    std::cerr << "verify: " << err.what() << "\n";
    return 1;
  }
  bool all_pass = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& rep : reports) {
    std::fprintf(stderr, "%-55s %s  (%s)\n", rep.name.c_str(), rep.pass ? "pass" : "FAIL",
                 rep.detail.c_str());
    out.push_back({{"name", rep.name}, {"pass", rep.pass}, {"detail", rep.detail}});
    all_pass = all_pass && rep.pass;
  }
  std::cout << out.dump() << "\n";
  return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed-form torus extremal function, grids, and LP envelope oracle"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate the extremal function at one point");
  eval->add_option("--R", eval_args.R, "center radius R");
  eval->add_option("--r", eval_args.r, "tube radius r");
  eval->add_option("--point", eval_args.point,
                   "point coordinates as re,im (three, or two plus leaf flags)")
      ->expected(2, 3);
  eval->add_option("--theta", eval_args.theta, "parametric theta as re,im");
  eval->add_option("--phi", eval_args.phi, "parametric phi as re,im");
  eval->add_option("--leaf-outer", eval_args.leaf_outer, "leaf outer sign (+1|-1)");
  eval->add_option("--leaf-z3", eval_args.leaf_z3, "leaf z3 sign (+1|-1)");

  GridArgs grid_args;
  auto* grid = app.add_subcommand("grid", "evaluate a grid and write csv/json/svg");
  grid->add_option("--R", grid_args.R, "center radius R");
  grid->add_option("--r", grid_args.r, "tube radius r");
  grid->add_option("--chart", grid_args.chart,
                   "real-z1z2 | complex-z1 | glued-real-z1z2 | glued-complex-z1");
  grid->add_option("--leaf-outer", grid_args.leaf_outer, "leaf outer sign");
  grid->add_option("--leaf-z3", grid_args.leaf_z3, "leaf z3 sign");
  grid->add_option("--xmin", grid_args.x_min);
  grid->add_option("--xmax", grid_args.x_max);
  grid->add_option("--ymin", grid_args.y_min);
  grid->add_option("--ymax", grid_args.y_max);
  grid->add_option("--nx", grid_args.nx);
  grid->add_option("--ny", grid_args.ny);
  grid->add_option("--format", grid_args.format, "csv | json | svg");
  grid->add_option("--out", grid_args.out_path, "output path")->required();
  grid->add_option("--colormap", grid_args.colormap, "viridis | gray");
  grid->add_option("--threads", grid_args.threads, "worker thread cap");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "LP envelope estimates vs the closed form");
  oracle->add_option("--R", oracle_args.R);
  oracle->add_option("--r", oracle_args.r);
  oracle->add_option("--target", oracle_args.target,
                     "interval | simplex | trapezoid | cylinder | torus");
  oracle->add_option("--degrees", oracle_args.degrees, "ascending degree list")->delimiter(',');
  oracle->add_option("--point", oracle_args.point, "evaluation point, re,im per coordinate");
  oracle->add_option("--theta", oracle_args.theta, "torus target: parametric theta");
  oracle->add_option("--phi", oracle_args.phi, "torus target: parametric phi");
  oracle->add_option("--samples", oracle_args.samples, "per-axis sample count (0 = default)");
  oracle->add_option("--directions", oracle_args.directions, "modulus polygon directions");
  oracle->add_option("--objective-directions", oracle_args.objective_directions);
  oracle->add_option("--lp-tolerance", oracle_args.lp_tolerance);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the randomized invariant suites");
  verify->add_option("--suite", verify_args.suite,
                     "all | zeroset | crossformula | symmetry | fiber | rotation | growth | "
                     "vieta | oracle");
  verify->add_option("--seed", verify_args.seed, "seed for the randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return 1;
  }

  try {
    if (eval->parsed()) return run_eval(eval_args);
    if (grid->parsed()) return run_grid(grid_args);
    if (oracle->parsed()) return run_oracle(oracle_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const CLI::ValidationError& err) {
    std::cerr << err.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
