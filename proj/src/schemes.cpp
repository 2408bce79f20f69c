#include "fslp/schemes.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "kernels.hpp"

namespace fslp {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::FSLP: return "fslp";
    case Scheme::OSLP: return "oslp";
    case Scheme::HLLC: return "hllc";
  }
  return "?";
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "fslp" || s == "FSLP") return Scheme::FSLP;
  if (s == "oslp" || s == "OSLP") return Scheme::OSLP;
  if (s == "hllc" || s == "HLLC") return Scheme::HLLC;
  throw std::invalid_argument("unknown scheme '" + s + "'");
}

double SchemeConfig::default_cfl(Scheme, int order) { return order == 2 ? 0.5 : 1.0; }

SchemeConfig SchemeConfig::make(Scheme s, int order) {
  SchemeConfig c;
  c.scheme = s;
  c.order = order;
  c.c_cfl = default_cfl(s, order);
  c.validate();
  return c;
}

void SchemeConfig::validate() const {
  if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
  if (scheme == Scheme::OSLP && order == 2) throw std::invalid_argument("OSLP has no second-order variant");
  if (!(c_cfl > 0.0)) throw std::invalid_argument("c_cfl must be positive");
  if (!(K > 1.0)) throw std::invalid_argument("K must exceed 1");
  if (theta_policy == ThetaPolicy::Fixed && !(theta_fixed >= 0.0 && theta_fixed <= 1.0))
    throw std::invalid_argument("fixed theta must lie in [0, 1]");
}

double minmod(double a, double b) { return a * b <= 0.0 ? 0.0 : (std::abs(a) < std::abs(b) ? a : b); }

Solver::Solver(const GasParams& gas, const SchemeConfig& cfg)
    : gas_(gas), cfg_(cfg), ws_(std::make_unique<kernels::Workspace>()) {
  gas_.validate();
  cfg_.validate();
}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

int Solver::field_buffers() const {
  if (cfg_.scheme == Scheme::OSLP) return 3;
  if (cfg_.order == 2 && cfg_.time_integrator == TimeIntegrator::SspRk2) return 3;
  return 2;
}

namespace {

void check_ghosts(const Grid& g, const SchemeConfig& cfg) {
  if (g.n_ghost() < cfg.stencil_radius())
    throw std::invalid_argument("grid has " + std::to_string(g.n_ghost()) + " ghost layers, scheme needs " +
                                std::to_string(cfg.stencil_radius()));
}

}  // namespace

double Solver::compute_dt(Grid& grid) {
  check_ghosts(grid, cfg_);
  auto& w = *ws_;
  apply_boundaries(grid, gas_);
  kernels::primitives(w, grid, gas_);
  double rate;
  if (cfg_.scheme == Scheme::HLLC) {
    rate = kernels::max_rate_hllc(w, grid);
  } else {
    // speeds of the first-order interface solver, also for MUSCL
    SchemeConfig first = cfg_;
    first.order = 1;
    w.warnings = kernels::faces_first_order(w, grid, gas_, first);
    rate = kernels::max_rate(w, grid, cfg_.scheme == Scheme::OSLP);
    w.faces_for = cfg_.order == 1 ? static_cast<const void*>(grid.cells().data()) : nullptr;
  }
  const double dt = cfg_.c_cfl / rate;
  if (!std::isfinite(dt) || !(dt > 0.0)) throw SolverError("time step is not finite (max wave rate " +
                                                           std::to_string(rate) + ")");
  return dt;
}

StepReport Solver::step(Grid& grid, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw SolverError("step: dt must be positive and finite");
  check_ghosts(grid, cfg_);
  const auto t0 = std::chrono::steady_clock::now();
  auto& w = *ws_;
  StepReport rep;
  rep.dt = dt;
  rep.entropy_residual_min = std::numeric_limits<double>::infinity();

  auto swap_in = [&] {
    kernels::check_interior(w.next, grid, dt);
    grid.cells().swap(w.next);
  };

  if (cfg_.order == 1) {
    const bool cached = w.faces_for == grid.cells().data() && cfg_.scheme != Scheme::HLLC;
    if (!cached) {
      apply_boundaries(grid, gas_);
      kernels::primitives(w, grid, gas_);
      w.warnings = kernels::faces_first_order(w, grid, gas_, cfg_);
    }
    w.faces_for = nullptr;
    rep.subcharacteristic_warnings = w.warnings;
    if (cfg_.scheme == Scheme::OSLP) {
      kernels::update_oslp(w, grid, gas_, dt);
    } else {
      kernels::update_conservative(w, grid, dt);
      if (cfg_.diagnostics && cfg_.scheme == Scheme::FSLP)
        rep.entropy_residual_min = kernels::entropy_residual_min(w, grid, gas_, dt);
    }
    swap_in();
  } else if (cfg_.time_integrator == TimeIntegrator::Hancock) {
    w.faces_for = nullptr;
    apply_boundaries(grid, gas_);
    kernels::primitives(w, grid, gas_);
    kernels::traces(w, grid, gas_, 0.5 * dt);
    rep.subcharacteristic_warnings = kernels::faces_from_traces(w, grid, gas_, cfg_);
    kernels::update_conservative(w, grid, dt);
    swap_in();
  } else {
    w.faces_for = nullptr;
    w.saved = grid.cells();
    for (int stage = 0; stage < 2; ++stage) {
      apply_boundaries(grid, gas_);
      kernels::primitives(w, grid, gas_);
      kernels::traces(w, grid, gas_, 0.0);
      rep.subcharacteristic_warnings += kernels::faces_from_traces(w, grid, gas_, cfg_);
      kernels::update_conservative(w, grid, dt);
      if (stage == 1) {
        for (int j = 0; j < grid.ny(); ++j)
          for (int i = 0; i < grid.nx(); ++i) {
            const std::size_t k = grid.index(i, j);
            w.next[k] = 0.5 * (w.saved[k] + w.next[k]);
          }
      }
      swap_in();
    }
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

StepReport Solver::advance(Grid& grid, double dt_cap) {
  const double dt = std::min(compute_dt(grid), dt_cap);
  return step(grid, dt);
}

double dt_fslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg) {
  SchemeConfig c = cfg;
  c.scheme = Scheme::FSLP;
  return Solver(gas, c).compute_dt(grid);
}

double dt_oslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg) {
  SchemeConfig c = cfg;
  c.scheme = Scheme::OSLP;
  c.order = 1;
  return Solver(gas, c).compute_dt(grid);
}

double dt_hllc(Grid& grid, const GasParams& gas, const SchemeConfig& cfg) {
  SchemeConfig c = cfg;
  c.scheme = Scheme::HLLC;
  return Solver(gas, c).compute_dt(grid);
}

double compute_dt(Grid& grid, const GasParams& gas, const SchemeConfig& cfg) {
  return Solver(gas, cfg).compute_dt(grid);
}

StepReport step_fslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt) {
  SchemeConfig c = cfg;
  c.scheme = Scheme::FSLP;
  return Solver(gas, c).step(grid, dt);
}

StepReport step_oslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt) {
  SchemeConfig c = cfg;
  c.scheme = Scheme::OSLP;
  return Solver(gas, c).step(grid, dt);
}

StepReport step_hllc(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt) {
  SchemeConfig c = cfg;
  c.scheme = Scheme::HLLC;
  return Solver(gas, c).step(grid, dt);
}

StepReport step_muscl_fslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt) {
  SchemeConfig c = cfg;
  c.scheme = Scheme::FSLP;
  c.order = 2;
  return Solver(gas, c).step(grid, dt);
}

StepReport step(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt) {
  return Solver(gas, cfg).step(grid, dt);
}

Traces muscl_reconstruct(Grid& grid, const GasParams& gas) {
  if (grid.n_ghost() < 2) throw std::invalid_argument("muscl_reconstruct needs two ghost layers");
  apply_boundaries(grid, gas);
  kernels::Workspace w;
  kernels::primitives(w, grid, gas);
  // spatial reconstruction only: no predictor and no gravity half step
  Traces t;
  const std::size_t n = grid.size();
  t.xm.resize(n);
  t.xp.resize(n);
  t.ym.resize(n);
  t.yp.resize(n);
  const bool two_d = !grid.is_1d();
  const int s = grid.stride();
  const int jlo = two_d ? -1 : 0, jhi = two_d ? grid.ny() + 1 : 1;
  for (int j = jlo; j < jhi; ++j)
    for (int i = -1; i < grid.nx() + 1; ++i) {
      const std::size_t k = grid.index(i, j);
      const CellTraces c = detail::cell_traces(w.prim[k], w.prim[k - 1], w.prim[k + 1], two_d ? &w.prim[k - s] : nullptr,
                                               two_d ? &w.prim[k + s] : nullptr, grid.dx(), grid.dy(), 0.0, gas.gamma,
                                               0.0, 0.0);
      t.xm[k] = c.xm;
      t.xp[k] = c.xp;
      t.ym[k] = c.ym;
      t.yp[k] = c.yp;
    }
  return t;
}

}  // namespace fslp
