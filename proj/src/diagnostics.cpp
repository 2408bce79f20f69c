#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fslp/cases.hpp"
#include "fslp/riemann_exact.hpp"

namespace fslp {

double kinetic_energy(const Grid& g, const GasParams&) {
  double e = 0.0;
  g.for_each_interior([&](int i, int j) {
    const ConservativeState& U = g.at(i, j);
    e += 0.5 * (U.mom_x * U.mom_x + U.mom_y * U.mom_y) / U.rho;
  });
  return e * g.dx() * g.dy();
}

double max_velocity(const Grid& g) {
  double m = 0.0;
  g.for_each_interior([&](int i, int j) {
    const ConservativeState& U = g.at(i, j);
    m = std::max(m, std::hypot(U.mom_x, U.mom_y) / U.rho);
  });
  return m;
}

double total_mass(const Grid& g) {
  double m = 0.0;
  g.for_each_interior([&](int i, int j) { m += g.at(i, j).rho; });
  return m * g.dx() * g.dy();
}

ErrorNorms density_error(const Grid& g, const std::vector<double>& ref) {
  if (ref.size() != static_cast<std::size_t>(g.nx()) * g.ny())
    throw std::invalid_argument("density_error: reference size mismatch");
  ErrorNorms n;
  std::size_t k = 0;
  g.for_each_interior([&](int i, int j) {
    const double d = std::abs(g.at(i, j).rho - ref[k++]);
    n.l1 += d;
    n.linf = std::max(n.linf, d);
  });
  n.l1 *= g.dx() * (g.is_1d() ? 1.0 : g.dy());
  return n;
}

std::vector<double> reference_density(const CaseSpec& spec, const Grid& initial, double t) {
  std::vector<double> r;
  r.reserve(static_cast<std::size_t>(initial.nx()) * initial.ny());
  switch (spec.reference) {
    case ReferenceKind::Initial:
      initial.for_each_interior([&](int i, int j) { r.push_back(initial.at(i, j).rho); });
      break;
    case ReferenceKind::ExactRiemann: {
      const RiemannSolution sol = solve_exact(spec.riemann_left, spec.riemann_right, spec.gas);
      initial.for_each_interior([&](int i, int) {
        r.push_back(t > 0.0 ? sol.sample((initial.x_center(i) - spec.riemann_x0) / t).rho
                            : initial.at(i, 0).rho);
      });
      break;
    }
    case ReferenceKind::None:
      throw std::invalid_argument("case '" + spec.name + "' has no reference solution");
  }
  return r;
}

RunResult run_case(const CaseSpec& spec, const SchemeConfig& cfg, Resolution res, const RunOptions& opts) {
  cfg.validate();
  const double t_end = opts.end_time >= 0.0 ? opts.end_time : spec.end_time;
  Grid grid = init_case(spec, res, 2);
  const Grid initial = grid;
  const double e0 = kinetic_energy(grid, spec.gas);

  std::vector<double> snaps = opts.snapshot_times;
  std::sort(snaps.begin(), snaps.end());
  std::size_t next_snap = 0;

  RunResult out;
  DiagnosticsReport& rep = out.report;
  rep.entropy_residual_min = std::numeric_limits<double>::infinity();

  Solver solver(spec.gas, cfg);
  double t = 0.0;
  const auto start = std::chrono::steady_clock::now();
  auto take_snapshots = [&] {
    while (next_snap < snaps.size() && snaps[next_snap] <= t * (1.0 + 1e-14)) {
      out.snapshots.push_back({t, grid});
      ++next_snap;
    }
  };
  take_snapshots();
  while (t < t_end && (opts.max_steps < 0 || rep.step_count < opts.max_steps)) {
    double target = t_end;
    if (next_snap < snaps.size()) target = std::min(target, snaps[next_snap]);
    const double cap = target - t;
    StepReport sr;
    try {
      sr = solver.advance(grid, cap);
    } catch (const std::exception& e) {
      std::ostringstream m;
      m << spec.name << ": step " << rep.step_count + 1 << " at t=" << t << ": " << e.what();
      throw SolverError(m.str());
    }
    // land exactly on the target when the step was clipped
    t = sr.dt >= cap ? target : t + sr.dt;
    ++rep.step_count;
    rep.subcharacteristic_warnings += sr.subcharacteristic_warnings;
    if (cfg.diagnostics) rep.entropy_residual_min = std::min(rep.entropy_residual_min, sr.entropy_residual_min);
    if (opts.on_step) opts.on_step(grid, sr, t);
    take_snapshots();
    if (!(sr.dt > 0.0)) throw SolverError(spec.name + ": time step collapsed to zero");
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.final_time = t;
  rep.mean_step_time = rep.step_count ? rep.wall_time / rep.step_count : 0.0;
  if (!std::isfinite(rep.entropy_residual_min)) rep.entropy_residual_min = 0.0;

  if (spec.reference != ReferenceKind::None) {
    const ErrorNorms n = density_error(grid, reference_density(spec, initial, t));
    rep.l1_density = n.l1;
    rep.linf_density = n.linf;
  }
  rep.ekin_ratio = e0 > 0.0 ? kinetic_energy(grid, spec.gas) / e0 : 1.0;
  rep.max_abs_velocity = max_velocity(grid);
  const AdmissibilityReport adm = admissibility_scan(grid);
  rep.min_density = adm.min_rho;
  rep.min_internal_energy = adm.min_rhoe;
  out.final_grid = std::move(grid);
  return out;
}

double fit_slope(const std::vector<int>& n, const std::vector<double>& err) {
  if (n.size() < 2 || n.size() != err.size()) throw std::invalid_argument("fit_slope: need at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!(err[i] > 0.0)) throw std::invalid_argument("fit_slope: errors must be positive");
    const double x = std::log(static_cast<double>(n[i])), y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

ConvergenceResult convergence_study(const CaseSpec& spec, const SchemeConfig& cfg, const std::vector<int>& resolutions,
                                    double end_time) {
  if (resolutions.size() < 2) throw std::invalid_argument("convergence_study: need at least two resolutions");
  ConvergenceResult c;
  c.resolutions = resolutions;
  RunOptions o;
  o.end_time = end_time;
  for (int n : resolutions) {
    const RunResult r = run_case(spec, cfg, {n, 0}, o);
    c.l1.push_back(r.report.l1_density);
    c.linf.push_back(r.report.linf_density);
  }
  auto safe_slope = [&](const std::vector<double>& e) {
    for (double v : e)
      if (!(v > 0.0)) return 0.0;  // exact at every resolution
    return -fit_slope(resolutions, e);
  };
  c.order_l1 = safe_slope(c.l1);
  c.order_linf = safe_slope(c.linf);
  return c;
}

}  // namespace fslp
