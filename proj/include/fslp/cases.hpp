#pragma once
/// Test-case registry, initializers, the run driver and table diagnostics.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fslp/grid.hpp"
#include "fslp/schemes.hpp"

namespace fslp {

enum class ReferenceKind {
  Initial,        // the exact solution at the end time is the initial condition
  ExactRiemann,   // 1D shock tube with a closed-form reference
  None,
};

struct CaseSpec {
  std::string name;
  std::string description;
  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  int default_nx = 100;
  int default_ny = 1;  // 1 -> one-dimensional
  GasParams gas;
  BoundarySpec boundaries;
  Potential potential;
  double end_time = 1.0;
  std::map<std::string, double> params;
  std::function<PrimitiveState(double, double)> initial;
  bool hydrostatic = false;  // built by build_hydrostatic_profile
  ReferenceKind reference = ReferenceKind::Initial;
  PrimitiveState riemann_left, riemann_right;  // ExactRiemann only
  double riemann_x0 = 0.5;

  bool one_d() const { return default_ny == 1; }
  double param(const std::string& key) const;
};

std::vector<std::string> case_names();
/// Builds a case; `overrides` replaces entries of CaseSpec::params (e.g. mach).
CaseSpec make_case(const std::string& name, const std::map<std::string, double>& overrides = {});

struct Resolution {
  int nx = 0;
  int ny = 0;  // 0 -> follow the domain aspect ratio (2D) or 1 (1D)
};

Grid init_case(const CaseSpec& spec, Resolution res, int n_ghost = 2);
Grid build_hydrostatic_profile(const CaseSpec& spec, Resolution res, int n_ghost = 2);

/// Gravity vortex helpers (exposed for the stationarity tests).
namespace gravity_vortex {
double potential(double r);
double potential_derivative(double r);
double velocity(double r);  // u_theta
double pressure(double r, double mach);
}  // namespace gravity_vortex

struct DiagnosticsReport {
  double l1_density = 0.0;
  double linf_density = 0.0;
  double ekin_ratio = 1.0;
  double max_abs_velocity = 0.0;
  double entropy_residual_min = 0.0;
  long step_count = 0;
  double wall_time = 0.0;
  double final_time = 0.0;
  double mean_step_time = 0.0;
  long subcharacteristic_warnings = 0;
  double min_density = 0.0;
  double min_internal_energy = 0.0;
};

struct Snapshot {
  double time = 0.0;
  Grid grid;
};

struct RunOptions {
  double end_time = -1.0;  // < 0 -> case default
  std::vector<double> snapshot_times;
  long max_steps = -1;
  // called after every step with the current time
  std::function<void(const Grid&, const StepReport&, double)> on_step;
};

struct RunResult {
  DiagnosticsReport report;
  std::vector<Snapshot> snapshots;
  Grid final_grid;
};

RunResult run_case(const CaseSpec& spec, const SchemeConfig& cfg, Resolution res, const RunOptions& opts = {});

struct ConvergenceResult {
  std::vector<int> resolutions;
  std::vector<double> l1, linf;
  double order_l1 = 0.0;    // minus the least-squares slope of log(err) vs log(N)
  double order_linf = 0.0;
};

ConvergenceResult convergence_study(const CaseSpec& spec, const SchemeConfig& cfg, const std::vector<int>& resolutions,
                                    double end_time = -1.0);
/// Least-squares slope of log(err) against log(n).
double fit_slope(const std::vector<int>& n, const std::vector<double>& err);

// field diagnostics
double kinetic_energy(const Grid& g, const GasParams& gas);
double max_velocity(const Grid& g);
double total_mass(const Grid& g);
struct ErrorNorms {
  double l1 = 0.0;
  double linf = 0.0;
};
ErrorNorms density_error(const Grid& g, const std::vector<double>& reference_density);
/// Reference density at every interior cell (row-major) at time t.
std::vector<double> reference_density(const CaseSpec& spec, const Grid& initial, double t);

}  // namespace fslp
