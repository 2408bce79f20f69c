// Serial, per-cell reference steppers.  Each cell recomputes its own faces
// straight from the flux_core entry points; nothing is cached or shared.

#include <cmath>
#include <limits>

#include "fslp/schemes.hpp"
#include "kernels.hpp"

namespace fslp::reference {

namespace {

InterfaceFlux fslp_face(const Grid& g, int iL, int jL, int iR, int jR, Direction d, const GasParams& gas,
                        const SchemeConfig& cfg) {
  const ConservativeState UL = to_face_frame(g.at(iL, jL), d), UR = to_face_frame(g.at(iR, jR), d);
  const double h = d == Direction::X ? g.dx() : g.dy();
  return solve_fslp_face(UL, UR, g.phi(iL, jL), g.phi(iR, jR), h, gas, cfg.K, cfg.theta_override()).flux;
}

InterfaceFlux hllc_face(const Grid& g, int iL, int jL, int iR, int jR, Direction d, const GasParams& gas) {
  const ConservativeState UL = to_face_frame(g.at(iL, jL), d), UR = to_face_frame(g.at(iR, jR), d);
  const double h = d == Direction::X ? g.dx() : g.dy();
  InterfaceFlux f = hllc_flux(UL, UR, gas);
  const double m = detail::gravity_jump(UL.rho, UR.rho, g.phi(iR, jR) - g.phi(iL, jL));
  f.src_half_mom = 0.5 * m * (1.0 / h);
  f.src_half_energy = f.u_face * f.src_half_mom;
  return f;
}

template <class Face>
std::vector<ConservativeState> conservative_update(const Grid& g, double dt, Face&& face) {
  std::vector<ConservativeState> out = g.cells();
  const double lx = dt / g.dx(), ly = dt / g.dy();
  for (int j = 0; j < g.ny(); ++j)
    for (int i = 0; i < g.nx(); ++i) {
      const InterfaceFlux xl = face(i - 1, j, i, j, Direction::X);
      const InterfaceFlux xr = face(i, j, i + 1, j, Direction::X);
      if (g.is_1d()) {
        out[g.index(i, j)] = detail::apply_update(g.at(i, j), xl, xr, nullptr, nullptr, lx, ly, dt);
      } else {
        const InterfaceFlux yl = face(i, j - 1, i, j, Direction::Y);
        const InterfaceFlux yr = face(i, j, i, j + 1, Direction::Y);
        out[g.index(i, j)] = detail::apply_update(g.at(i, j), xl, xr, &yl, &yr, lx, ly, dt);
      }
    }
  return out;
}

void commit(Grid& g, std::vector<ConservativeState>&& cells) {
  for (int j = 0; j < g.ny(); ++j)
    for (int i = 0; i < g.nx(); ++i)
      if (!cells[g.index(i, j)].admissible()) throw AdmissibilityError("reference step left the admissible set", i, j);
  g.cells() = std::move(cells);
}

}  // namespace

void step_fslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt) {
  apply_boundaries(grid, gas);
  commit(grid, conservative_update(grid, dt, [&](int iL, int jL, int iR, int jR, Direction d) {
           return fslp_face(grid, iL, jL, iR, jR, d, gas, cfg);
         }));
}

void step_hllc(Grid& grid, const GasParams& gas, const SchemeConfig&, double dt) {
  apply_boundaries(grid, gas);
  commit(grid, conservative_update(grid, dt, [&](int iL, int jL, int iR, int jR, Direction d) {
           return hllc_face(grid, iL, jL, iR, jR, d, gas);
         }));
}

void step_oslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt) {
  apply_boundaries(grid, gas);
  const double lx = dt / grid.dx(), ly = dt / grid.dy();
  auto face = [&](int iL, int jL, int iR, int jR, Direction d) {
    const ConservativeState UL = to_face_frame(grid.at(iL, jL), d), UR = to_face_frame(grid.at(iR, jR), d);
    return solve_fslp_face(UL, UR, grid.phi(iL, jL), grid.phi(iR, jR), d == Direction::X ? grid.dx() : grid.dy(), gas,
                           cfg.K, cfg.theta_override());
  };
  Grid mid = grid;
  std::vector<double> Lj(grid.size(), 1.0);
  // acoustic step: L_j U^- = U^n - pressure differences - gravity
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) {
      const FaceSolution xl = face(i - 1, j, i, j, Direction::X), xr = face(i, j, i + 1, j, Direction::X);
      const ConservativeState& U = grid.at(i, j);
      double L = 1.0 + lx * (xr.star.u_star - xl.star.u_star);
      double mx = U.mom_x - lx * (xr.star.pi_star_theta - xl.star.pi_star_theta) -
                  dt * (xl.flux.src_half_mom + xr.flux.src_half_mom);
      double my = U.mom_y;
      double E = U.rhoE -
                 lx * (xr.star.pi_star_theta * xr.star.u_star - xl.star.pi_star_theta * xl.star.u_star) -
                 dt * (xl.flux.src_half_energy + xr.flux.src_half_energy);
      if (!grid.is_1d()) {
        const FaceSolution yl = face(i, j - 1, i, j, Direction::Y), yr = face(i, j, i, j + 1, Direction::Y);
        L += ly * (yr.star.u_star - yl.star.u_star);
        my -= ly * (yr.star.pi_star_theta - yl.star.pi_star_theta) + dt * (yl.flux.src_half_mom + yr.flux.src_half_mom);
        E -= ly * (yr.star.pi_star_theta * yr.star.u_star - yl.star.pi_star_theta * yl.star.u_star) +
             dt * (yl.flux.src_half_energy + yr.flux.src_half_energy);
      }
      if (!(L > 0.0)) throw SolverError("reference OSLP: acoustic CFL violated");
      Lj[grid.index(i, j)] = L;
      mid.at(i, j) = {U.rho / L, mx / L, my / L, E / L};
    }
  apply_boundaries(mid, grid.boundaries, gas);
  // transport step on the n+1- state with the n-level interface velocities
  std::vector<ConservativeState> out = grid.cells();
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) {
      const double ul = face(i - 1, j, i, j, Direction::X).star.u_star;
      const double ur = face(i, j, i + 1, j, Direction::X).star.u_star;
      ConservativeState N = Lj[grid.index(i, j)] * mid.at(i, j);
      const ConservativeState& a = ul > 0.0 ? mid.at(i - 1, j) : mid.at(i, j);
      const ConservativeState& b = ur > 0.0 ? mid.at(i, j) : mid.at(i + 1, j);
      N.rho -= lx * (ur * b.rho - ul * a.rho);
      N.mom_x -= lx * (ur * b.mom_x - ul * a.mom_x);
      N.mom_y -= lx * (ur * b.mom_y - ul * a.mom_y);
      N.rhoE -= lx * (ur * b.rhoE - ul * a.rhoE);
      if (!grid.is_1d()) {
        const double vl = face(i, j - 1, i, j, Direction::Y).star.u_star;
        const double vr = face(i, j, i, j + 1, Direction::Y).star.u_star;
        const ConservativeState& c = vl > 0.0 ? mid.at(i, j - 1) : mid.at(i, j);
        const ConservativeState& e = vr > 0.0 ? mid.at(i, j) : mid.at(i, j + 1);
        N.rho -= ly * (vr * e.rho - vl * c.rho);
        N.mom_x -= ly * (vr * e.mom_x - vl * c.mom_x);
        N.mom_y -= ly * (vr * e.mom_y - vl * c.mom_y);
        N.rhoE -= ly * (vr * e.rhoE - vl * c.rhoE);
      }
      out[grid.index(i, j)] = N;
    }
  commit(grid, std::move(out));
}

void step_muscl(Grid& grid, const GasParams& gas, const SchemeConfig& cfg, double dt) {
  const bool two_d = !grid.is_1d();
  auto prim = [&](int i, int j) { return cons_to_prim(grid.at(i, j), gas); };
  auto traces_of = [&](int i, int j, double half_dt) {
    const PrimitiveState V = prim(i, j);
    PrimitiveState yd, yu;
    if (two_d) {
      yd = prim(i, j - 1);
      yu = prim(i, j + 1);
    }
    const std::size_t k = grid.index(i, j);
    return detail::cell_traces(V, prim(i - 1, j), prim(i + 1, j), two_d ? &yd : nullptr, two_d ? &yu : nullptr,
                               grid.dx(), grid.dy(), half_dt, gas.gamma, grid.dphi_x_center()[k],
                               two_d ? grid.dphi_y_center()[k] : 0.0);
  };
  auto stage = [&](double half_dt) {
    apply_boundaries(grid, gas);
    long warnings = 0;
    return conservative_update(grid, dt, [&](int iL, int jL, int iR, int jR, Direction d) {
      const std::size_t kL = grid.index(iL, jL);
      PrimitiveState VL, VR;
      double dphi, h;
      if (d == Direction::X) {
        VL = traces_of(iL, jL, half_dt).xp;
        VR = traces_of(iR, jR, half_dt).xm;
        h = grid.dx();
        dphi = grid.dphi_x_face()[kL];
      } else {
        VL = to_face_frame(traces_of(iL, jL, half_dt).yp, Direction::Y);
        VR = to_face_frame(traces_of(iR, jR, half_dt).ym, Direction::Y);
        h = grid.dy();
        dphi = grid.dphi_y_face()[kL];
      }
      const double m = detail::gravity_jump(VL.rho, VR.rho, dphi * h);
      return detail::face_flux(cfg.scheme, VL, VR, m, 1.0 / h, gas.gamma, cfg.K, cfg.theta_override(), warnings);
    });
  };
  if (cfg.time_integrator == TimeIntegrator::Hancock) {
    commit(grid, stage(0.5 * dt));
    return;
  }
  const std::vector<ConservativeState> saved = grid.cells();
  commit(grid, stage(0.0));
  std::vector<ConservativeState> two = stage(0.0);
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) {
      const std::size_t k = grid.index(i, j);
      two[k] = 0.5 * (saved[k] + two[k]);
    }
  commit(grid, std::move(two));
}

double dt_fslp(Grid& grid, const GasParams& gas, const SchemeConfig& cfg) {
  apply_boundaries(grid, gas);
  auto speeds = [&](int iL, int jL, int iR, int jR, Direction d, double& ar, double& us) {
    const ConservativeState UL = to_face_frame(grid.at(iL, jL), d), UR = to_face_frame(grid.at(iR, jR), d);
    const FaceSolution f = solve_fslp_face(UL, UR, grid.phi(iL, jL), grid.phi(iR, jR), 1.0, gas, cfg.K,
                                           cfg.theta_override());
    ar = f.star.a / std::min(UL.rho, UR.rho);
    us = f.star.u_star;
  };
  double rmax = 0.0;
  for (int j = 0; j < grid.ny(); ++j)
    for (int i = 0; i < grid.nx(); ++i) {
      double a1, a2, u1, u2;
      speeds(i - 1, j, i, j, Direction::X, a1, u1);
      speeds(i, j, i + 1, j, Direction::X, a2, u2);
      double r = (2.0 * std::max(a1, a2) + std::max(u1, 0.0) - std::min(u2, 0.0)) / grid.dx();
      if (!grid.is_1d()) {
        speeds(i, j - 1, i, j, Direction::Y, a1, u1);
        speeds(i, j, i, j + 1, Direction::Y, a2, u2);
        r += (2.0 * std::max(a1, a2) + std::max(u1, 0.0) - std::min(u2, 0.0)) / grid.dy();
      }
      rmax = std::max(rmax, r);
    }
  return cfg.c_cfl / rmax;
}

}  // namespace fslp::reference
