#include "platewave/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "platewave/csvio.hpp"
#include "platewave/dispersion.hpp"
#include "platewave/errors.hpp"
#include "platewave/study.hpp"

namespace pw {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

RunConfig load_or_default(const std::string& path) {
  if (path.empty()) {
    RunConfig cfg;
    cfg.validate();
    return cfg;
  }
  return load_config(path);
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open output file: " + path.string());
  return os;
}

void write_summary(const fs::path& path, const json& j) {
  std::ofstream os = open_output(path);
  os << j.dump(2) << '\n';
}

json cfl_json(const CflReport& r) {
  return json{{"wavelength", r.wavelength}, {"h_limit", r.h_limit},
              {"dt_limit", r.dt_limit},     {"h_ok", r.h_ok},
              {"dt_ok", r.dt_ok}};
}

std::vector<Vec2> top_face_probes(const RunConfig& cfg) {
  std::vector<Vec2> probes;
  probes.reserve(cfg.probes.size());
  for (double x : cfg.probes) probes.push_back({x, cfg.geometry.Ly});
  return probes;
}

// A time horizon long enough for the pulse to pass the farthest probe:
// transit at a conservative quarter of the bar velocity plus a few carrier
// periods, but never shorter than the configured grid.
TimeGrid dispersion_grid(const RunConfig& cfg, const PulseParams& pulse) {
  const double dt = cfg.grid.dt();
  const double x_last = *std::max_element(cfg.probes.begin(), cfg.probes.end());
  const double c_slow = 0.25 * bar_velocity(cfg.material);
  const double t_needed = pulse.T0 + x_last / c_slow + 3.0 / pulse.f0;
  const int steps = std::max(cfg.grid.steps, static_cast<int>(std::ceil(t_needed / dt)));
  return TimeGrid{steps * dt, steps};
}

int cmd_simulate(const RunConfig& cfg, const std::string& out_override,
                 const std::vector<int>& snapshot_steps, bool dump_mesh,
                 bool dump_matrix_flag) {
  Timer timer;
  const fs::path outdir = out_override.empty() ? cfg.output_dir : out_override;
  fs::create_directories(outdir);

  const Mesh mesh = build_structured_mesh(cfg.geometry, cfg.ny);
  const NodeSet nodes = enumerate_nodes(mesh, cfg.degree);
  const SimResult sim = run_simulation(mesh, nodes, cfg.material, cfg.pulse, cfg.grid,
                                       top_face_probes(cfg), snapshot_steps);

  const fs::path trace_path = outdir / "trace.csv";
  {
    std::ofstream os = open_output(trace_path);
    std::vector<std::string> header{"t"};
    for (std::size_t i = 0; i < sim.traces.size(); ++i)
      header.push_back("uy_p" + std::to_string(i + 1));
    write_csv_row(os, header);
    const double dt = cfg.grid.dt();
    for (int i = 0; i <= cfg.grid.steps; ++i) {
      std::vector<double> row{i * dt};
      for (const auto& trace : sim.traces) row.push_back(trace.series[i]);
      write_csv_row(os, row);
    }
  }

  std::vector<std::string> outputs{trace_path.string()};
  for (const auto& snap : sim.snapshots) {
    const fs::path p = outdir / ("snapshot_" + std::to_string(snap.step) + ".csv");
    std::ofstream os = open_output(p);
    write_csv_row(os, std::vector<std::string>{"node_index", "x", "y", "ux", "uy"});
    for (int n = 0; n < nodes.node_count(); ++n) {
      os << n << ',' << format_double(nodes.nodes[n].x) << ','
         << format_double(nodes.nodes[n].y) << ',' << format_double(snap.d[2 * n])
         << ',' << format_double(snap.d[2 * n + 1]) << '\n';
    }
    outputs.push_back(p.string());
  }

  if (dump_mesh) {
    const fs::path p = outdir / "mesh.txt";
    std::ofstream os = open_output(p);
    export_mesh_text(mesh, os);
    outputs.push_back(p.string());
  }
  if (dump_matrix_flag) {
    const AssembledSystem sys = assemble(mesh, nodes, cfg.material, cfg.grid.dt());
    const fs::path p = outdir / "matrix.txt";
    std::ofstream os = open_output(p);
    dump_matrix(sys.A, os);
    outputs.push_back(p.string());
  }

  const CflReport cfl =
      cfl_check(mesh.h, cfg.grid.dt(), cfg.pulse.f0, bar_velocity(cfg.material));
  if (!cfl.ok())
    std::cerr << "warning: discretization guidance violated (h < lambda/4: "
              << (cfl.h_ok ? "ok" : "violated")
              << ", dt < 1/(4 f0): " << (cfl.dt_ok ? "ok" : "violated") << ")\n";

  json summary{{"subcommand", "simulate"},
               {"h", mesh.h},
               {"dof", nodes.system_order()},
               {"ny", cfg.ny},
               {"degree", cfg.degree},
               {"steps", cfg.grid.steps},
               {"dt", cfg.grid.dt()},
               {"max_relative_residual", sim.max_relative_residual},
               {"cfl", cfl_json(cfl)},
               {"wall_time_s", timer.seconds()},
               {"outputs", outputs}};
  write_summary(outdir / "trace.summary.json", summary);

  std::cout << "simulate: " << cfg.grid.steps << " steps on " << nodes.system_order()
            << " dofs (h = " << mesh.h << "), max residual "
            << sim.max_relative_residual << "\n";
  return 0;
}

int cmd_dispersion(const RunConfig& cfg, const std::string& out_override,
                   std::vector<double> freqs, int curve_samples) {
  Timer timer;
  const fs::path outdir = out_override.empty() ? cfg.output_dir : out_override;
  fs::create_directories(outdir);

  if (freqs.empty()) freqs.push_back(cfg.pulse.f0);

  const Mesh mesh = build_structured_mesh(cfg.geometry, cfg.ny);
  const NodeSet nodes = enumerate_nodes(mesh, cfg.degree);
  const TheoreticalCurve curve =
      theoretical_curve(cfg.material, cfg.geometry.Ly, curve_samples);

  const fs::path csv_path = outdir / "dispersion.csv";
  std::ofstream os = open_output(csv_path);
  write_csv_row(os, std::vector<std::string>{"f0", "C", "Ly_over_lambda", "C_over_c0",
                                             "r2", "distance"});

  json rows = json::array();
  for (double f0 : freqs) {
    const PulseParams pulse = (std::abs(f0 - cfg.pulse.f0) <= 1e-9 * f0)
                                  ? cfg.pulse
                                  : pulse_for_frequency(f0);
    const TimeGrid grid = dispersion_grid(cfg, pulse);
    const SimResult sim = run_simulation(mesh, nodes, cfg.material, pulse, grid,
                                         top_face_probes(cfg));

    std::vector<std::pair<double, double>> x_and_t;
    for (std::size_t i = 0; i < sim.traces.size(); ++i) {
      const ArrivalEstimate arr = extract_arrival(sim.traces[i], grid.dt());
      x_and_t.emplace_back(cfg.probes[i], arr.t_arrive);
    }
    const VelocityFit fit = fit_phase_velocity(x_and_t);
    const DispersionPoint pt =
        dispersion_point(f0, fit.C, cfg.material, cfg.geometry.Ly, curve, fit.r2);

    write_csv_row(os, std::vector<double>{pt.f0, pt.C, pt.x_norm, pt.y_norm, pt.fit_r2,
                                          pt.distance_to_theory});
    rows.push_back({{"f0", pt.f0},
                    {"C", pt.C},
                    {"Ly_over_lambda", pt.x_norm},
                    {"C_over_c0", pt.y_norm},
                    {"r2", pt.fit_r2},
                    {"distance", pt.distance_to_theory},
                    {"steps", grid.steps}});
    std::cout << "dispersion: f0 = " << f0 / 1e3 << " kHz -> C = " << pt.C
              << " m/s, point (" << pt.x_norm << ", " << pt.y_norm
              << "), distance to curve " << pt.distance_to_theory << "\n";
  }

  json summary{{"subcommand", "dispersion"},
               {"h", mesh.h},
               {"dof", nodes.system_order()},
               {"degree", cfg.degree},
               {"curve_samples", curve_samples},
               {"rows", rows},
               {"wall_time_s", timer.seconds()},
               {"outputs", {csv_path.string()}}};
  write_summary(outdir / "dispersion.summary.json", summary);
  return 0;
}

int cmd_converge(const RunConfig& cfg, const std::string& out_override, int degree,
                 std::vector<int> ny_list, double t_compare,
                 std::pair<double, double> window) {
  Timer timer;
  const fs::path outdir = out_override.empty() ? cfg.output_dir : out_override;
  fs::create_directories(outdir);

  RunConfig study_cfg = cfg;
  if (degree > 0) study_cfg.degree = degree;
  if (ny_list.empty()) ny_list = {2, 3, 4, 5, 6};

  const ConvergenceResult res = convergence_study(study_cfg, ny_list, t_compare, window);

  const fs::path csv_path = outdir / "converge.csv";
  {
    std::ofstream os = open_output(csv_path);
    write_csv_row(os, std::vector<std::string>{"h", "dof", "e_t"});
    for (const auto& row : res.rows)
      write_csv_row(os, std::vector<double>{row.h, static_cast<double>(row.dof), row.e_t});
  }

  json rows = json::array();
  for (const auto& row : res.rows)
    rows.push_back({{"ny", row.ny}, {"h", row.h}, {"dof", row.dof}, {"e_t", row.e_t}});
  json summary{{"subcommand", "converge"},
               {"degree", study_cfg.degree},
               {"t_compare", t_compare},
               {"window", {window.first, window.second}},
               {"fitted_order", res.fitted_order},
               {"rows", rows},
               {"wall_time_s", timer.seconds()},
               {"outputs", {csv_path.string()}}};
  write_summary(outdir / "converge.summary.json", summary);

  std::cout << "converge: " << res.rows.size() << " mesh pairs, fitted order "
            << res.fitted_order << "\n";
  for (const auto& row : res.rows)
    std::cout << "  h = " << row.h << "  dof = " << row.dof << "  e = " << row.e_t
              << "\n";
  return 0;
}

int cmd_analytic_curve(const RunConfig& cfg, const std::string& out_override,
                       int samples) {
  Timer timer;
  const fs::path outdir = out_override.empty() ? cfg.output_dir : out_override;
  fs::create_directories(outdir);

  const TheoreticalCurve curve = theoretical_curve(cfg.material, cfg.geometry.Ly, samples);

  const fs::path csv_path = outdir / "curve.csv";
  std::ofstream os = open_output(csv_path);
  write_csv_row(os,
                std::vector<std::string>{"Ly_over_lambda", "C_over_c0", "f0_hz", "c_phase"});
  for (const auto& s : curve.samples)
    write_csv_row(os, std::vector<double>{s.x_norm, s.y_norm, s.f0, s.c_phase});

  json summary{{"subcommand", "analytic-curve"},
               {"samples", samples},
               {"c0", curve.c0},
               {"wall_time_s", timer.seconds()},
               {"outputs", {csv_path.string()}}};
  write_summary(outdir / "curve.summary.json", summary);

  std::cout << "analytic-curve: " << curve.samples.size() << " samples, c0 = "
            << curve.c0 << " m/s\n";
  return 0;
}

int cmd_compare_lamb(const RunConfig& cfg, const std::string& out_override, double f0,
                     int grid_nx, int grid_ny) {
  Timer timer;
  const fs::path outdir = out_override.empty() ? cfg.output_dir : out_override;
  fs::create_directories(outdir);

  const PulseParams pulse = (std::abs(f0 - cfg.pulse.f0) <= 1e-9 * f0)
                                ? cfg.pulse
                                : pulse_for_frequency(f0);
  const Mesh mesh = build_structured_mesh(cfg.geometry, cfg.ny);
  const NodeSet nodes = enumerate_nodes(mesh, cfg.degree);

  std::vector<int> all_steps(cfg.grid.steps + 1);
  for (int i = 0; i <= cfg.grid.steps; ++i) all_steps[i] = i;
  const SimResult sim = run_simulation(mesh, nodes, cfg.material, pulse, cfg.grid,
                                       top_face_probes(cfg), all_steps);

  std::vector<std::pair<double, double>> x_and_t;
  for (std::size_t i = 0; i < sim.traces.size(); ++i) {
    const ArrivalEstimate a = extract_arrival(sim.traces[i], cfg.grid.dt());
    x_and_t.emplace_back(cfg.probes[i], a.t_arrive);
  }
  const ArrivalEstimate arr = extract_arrival(sim.traces[0], cfg.grid.dt());
  const VelocityFit fit = fit_phase_velocity(x_and_t);
  const auto window = window_about_probe(cfg.probes[0], arr, fit.C);

  const LambMode mode =
      solve_phase_velocity(ModeFamily::Antisymmetric, cfg.material, cfg.geometry.Ly, f0);
  const Eigen::VectorXd d = snapshot_at_time(sim, arr.t_arrive);
  const LambComparison cmp = compare_to_lamb(mesh, nodes, d, mode, cfg.material,
                                             cfg.geometry.Ly, arr.t_arrive, window,
                                             grid_nx, grid_ny);

  // sampled fields over the window, analytic mode at the aligned phase
  const fs::path csv_path = outdir / "compare.csv";
  {
    std::ofstream os = open_output(csv_path);
    write_csv_row(os, std::vector<std::string>{"x", "y", "ux_fem", "uy_fem", "ux_mode",
                                               "uy_mode"});
    const double t_aligned = arr.t_arrive + cmp.phase / mode.omega;
    for (int jy = 0; jy <= grid_ny; ++jy) {
      const double y = cfg.geometry.Ly * jy / grid_ny;
      for (int jx = 0; jx <= grid_nx; ++jx) {
        const double x = window.first + (window.second - window.first) * jx / grid_nx;
        const auto uh = evaluate_field(mesh, nodes, d, x, y);
        const auto ua = lamb_field(mode, cfg.material, cfg.geometry.Ly, t_aligned, x, y);
        write_csv_row(os, std::vector<double>{x, y, uh[0], uh[1], ua[0], ua[1]});
      }
    }
  }

  json summary{{"subcommand", "compare-lamb"},
               {"h", mesh.h},
               {"dof", nodes.system_order()},
               {"f0", f0},
               {"C_fit", fit.C},
               {"C_mode", mode.c_phase},
               {"t_arrive", arr.t_arrive},
               {"window", {window.first, window.second}},
               {"discrepancy_x", cmp.discrepancy_x},
               {"discrepancy_y", cmp.discrepancy_y},
               {"phase", cmp.phase},
               {"max_relative_residual", sim.max_relative_residual},
               {"wall_time_s", timer.seconds()},
               {"outputs", {csv_path.string()}}};
  write_summary(outdir / "compare.summary.json", summary);

  std::cout << "compare-lamb: t_arrive = " << arr.t_arrive << " s, window ["
            << window.first << ", " << window.second << "], discrepancy (x, y) = ("
            << cmp.discrepancy_x << ", " << cmp.discrepancy_y << ")\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"2-D elastodynamic plate-wave simulator"};
  app.require_subcommand(1);

  std::string config_path, out_override;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "config file (defaults reproduce the standard setup)");
    sub->add_option("--out", out_override, "output directory override");
  };

  auto* sim = app.add_subcommand("simulate", "run the time loop and record probe traces");
  std::vector<int> snapshot_steps;
  bool dump_mesh = false, dump_matrix_flag = false;
  add_common(sim);
  sim->add_option("--snapshots", snapshot_steps, "step indices to store as snapshot CSVs");
  sim->add_flag("--dump-mesh", dump_mesh, "write the mesh in plain-text format");
  sim->add_flag("--dump-matrix", dump_matrix_flag, "write the system matrix in coordinate format");

  auto* disp = app.add_subcommand("dispersion", "extract dispersion points from probe arrivals");
  std::vector<double> freqs;
  int curve_samples = 400;
  add_common(disp);
  disp->add_option("--f0", freqs, "center frequencies in Hz (repeatable)");
  disp->add_option("--curve-samples", curve_samples, "polyline resolution of the reference curve");

  auto* conv = app.add_subcommand("converge", "successive-mesh refinement study");
  int degree = 0;
  std::vector<int> ny_list;
  double t_compare = 0.685e-5;
  std::vector<double> window_vec{0.9e-2, 1.08e-2};
  add_common(conv);
  conv->add_option("--degree", degree, "polynomial degree (1 or 2)");
  conv->add_option("--ny", ny_list, "mesh levels, e.g. --ny 2 3 4 5 6")->delimiter(',');
  conv->add_option("--t-compare", t_compare, "comparison time");
  conv->add_option("--window", window_vec, "comparison window x_lo x_hi")->expected(2);

  auto* curve = app.add_subcommand("analytic-curve", "sample the analytic dispersion curve");
  int samples = 200;
  add_common(curve);
  curve->add_option("--samples", samples, "number of curve samples");

  auto* cmp = app.add_subcommand("compare-lamb", "compare the computed field to the analytic mode");
  double cmp_f0 = 600e3;
  int grid_nx = 64, grid_ny = 16;
  add_common(cmp);
  cmp->add_option("--f0", cmp_f0, "center frequency in Hz");
  cmp->add_option("--grid-nx", grid_nx, "comparison grid resolution along x");
  cmp->add_option("--grid-ny", grid_ny, "comparison grid resolution across the thickness");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const RunConfig cfg = load_or_default(config_path);
    if (sim->parsed())
      return cmd_simulate(cfg, out_override, snapshot_steps, dump_mesh, dump_matrix_flag);
    if (disp->parsed()) return cmd_dispersion(cfg, out_override, freqs, curve_samples);
    if (conv->parsed())
      return cmd_converge(cfg, out_override, degree, ny_list, t_compare,
                          {window_vec[0], window_vec[1]});
    if (curve->parsed()) return cmd_analytic_curve(cfg, out_override, samples);
    if (cmp->parsed()) return cmd_compare_lamb(cfg, out_override, cmp_f0, grid_nx, grid_ny);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

}  // namespace pw
