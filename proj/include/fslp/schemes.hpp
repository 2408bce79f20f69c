#pragma once
/// Time steppers: FSLP (order 1, MUSCL-Hancock / SSP-RK2 order 2), OSLP
/// (order 1) and HLLC (orders 1 and 2), plus the time-step formulas.

#include <memory>
#include <string>
#include <vector>

#include "fslp/flux_core.hpp"
#include "fslp/grid.hpp"

namespace fslp {

enum class Scheme { FSLP, OSLP, HLLC };
enum class ThetaPolicy { AllRegime, Fixed };
enum class Limiter { Minmod };
enum class TimeIntegrator { Hancock, SspRk2 };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& s);

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SchemeConfig {
  Scheme scheme = Scheme::FSLP;
  int order = 1;
  double c_cfl = 1.0;
  double K = 1.1;
  ThetaPolicy theta_policy = ThetaPolicy::AllRegime;
  double theta_fixed = 1.0;
  Limiter limiter = Limiter::Minmod;
  TimeIntegrator time_integrator = TimeIntegrator::Hancock;
  bool diagnostics = false;

  // Courant numbers: 1.0 at first order, 0.5 at second order
  static double default_cfl(Scheme s, int order);
  static SchemeConfig make(Scheme s, int order = 1);
  // rejects OSLP at order 2, K <= 1, theta outside [0, 1], ...
  void validate() const;
  // -1 means "all-regime"
  double theta_override() const { return theta_policy == ThetaPolicy::Fixed ? theta_fixed : -1.0; }
  int stencil_radius() const { return order == 2 ? 2 : 1; }
};

struct StepReport {
  double dt = 0.0;
  double entropy_residual_min = 0.0;  // only meaningful with diagnostics on (FSLP order 1)
  long subcharacteristic_warnings = 0;
  double wall_time = 0.0;
};

double minmod(double a, double b);

/// Time-step formulas.  Each fills ghosts first.
double dt_fslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg);
double dt_oslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg);
double dt_hllc(Grid& grid, const GasParams& gas, const SchemeConfig& cfg);
double compute_dt(Grid& grid, const GasParams& gas, const SchemeConfig& cfg);

StepReport step_fslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt);
StepReport step_oslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt);
StepReport step_hllc(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt);
StepReport step_muscl_fslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt);
StepReport step(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt);

/// Per-cell limited primitive traces (spatial reconstruction only, no
/// predictor).  Indexed by the grid's flat index; filled for interior cells
/// and the first ghost ring.
struct Traces {
  std::vector<PrimitiveState> xm, xp, ym, yp;
};
Traces muscl_reconstruct(Grid& grid, const GasParams& gas);

namespace kernels {
struct Workspace;
}

/// Stateful stepper owning the scratch buffers; the free functions above wrap
/// a temporary Solver.
class Solver {
 public:
  Solver(const GasParams& gas, const SchemeConfig& cfg);
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  double compute_dt(Grid& grid);
  StepReport step(Grid& grid, double dt);
  // computes dt, clips it to dt_cap, steps; avoids a second interface sweep
  // on first-order schemes
  StepReport advance(Grid& grid, double dt_cap);
  // time-level field buffers the scheme keeps resident (2 FSLP/HLLC, 3 OSLP)
  int field_buffers() const;

  const SchemeConfig& config() const { return cfg_; }
  const GasParams& gas() const { return gas_; }

 private:
  GasParams gas_;
  SchemeConfig cfg_;
  std::unique_ptr<kernels::Workspace> ws_;
};

/// Serial reference implementations, written per cell straight from the
/// flux_core functions.  Kept for cross-checking the optimized kernels.
namespace reference {
void step_fslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt);
void step_oslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt);
void step_hllc(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt);
void step_muscl(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt);
double dt_fslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg);
}  // namespace reference

}  // namespace fslp
