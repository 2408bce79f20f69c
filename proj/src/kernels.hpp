#pragma once
// Building blocks shared by the OpenMP kernels and the serial reference.

#include <vector>

#include "fslp/flux_core.hpp"
#include "fslp/grid.hpp"
#include "fslp/schemes.hpp"

namespace fslp {

struct CellTraces {
  PrimitiveState xm, xp, ym, yp;
};

namespace detail {

// Conservative update of one cell from its face fluxes.  y faces are null in 1D.
inline ConservativeState apply_update(const ConservativeState& U, const InterfaceFlux& xl, const InterfaceFlux& xr,
                                      const InterfaceFlux* yl, const InterfaceFlux* yr, double lx, double ly,
                                      double dt) {
  ConservativeState N;
  N.rho = U.rho - lx * (xr.mass - xl.mass);
  N.mom_x = U.mom_x - lx * (xr.mom_n - xl.mom_n) - dt * (xl.src_half_mom + xr.src_half_mom);
  N.mom_y = U.mom_y - lx * (xr.mom_t - xl.mom_t);
  N.rhoE = U.rhoE - lx * (xr.energy - xl.energy) - dt * (xl.src_half_energy + xr.src_half_energy);
  if (yl) {
    N.rho -= ly * (yr->mass - yl->mass);
    N.mom_x -= ly * (yr->mom_t - yl->mom_t);
    N.mom_y -= ly * (yr->mom_n - yl->mom_n) + dt * (yl->src_half_mom + yr->src_half_mom);
    N.rhoE -= ly * (yr->energy - yl->energy) + dt * (yl->src_half_energy + yr->src_half_energy);
  }
  return N;
}

// Limited linear traces of one cell, optionally evolved by a Hancock half step
// (half_dt > 0).  Any inadmissible trace zeroes all slopes of the cell.
inline CellTraces cell_traces(const PrimitiveState& V, const PrimitiveState& xl, const PrimitiveState& xr,
                              const PrimitiveState* yd, const PrimitiveState* yu, double dx, double dy,
                              double half_dt, double gamma, double gphx, double gphy) {
  auto mm = [](double a, double b) { return a * b <= 0.0 ? 0.0 : (std::abs(a) < std::abs(b) ? a : b); };
  PrimitiveState sx{mm((V.rho - xl.rho) / dx, (xr.rho - V.rho) / dx), mm((V.u - xl.u) / dx, (xr.u - V.u) / dx),
                    mm((V.v - xl.v) / dx, (xr.v - V.v) / dx), mm((V.p - xl.p) / dx, (xr.p - V.p) / dx)};
  PrimitiveState sy{};
  if (yd) {
    sy = {mm((V.rho - yd->rho) / dy, (yu->rho - V.rho) / dy), mm((V.u - yd->u) / dy, (yu->u - V.u) / dy),
          mm((V.v - yd->v) / dy, (yu->v - V.v) / dy), mm((V.p - yd->p) / dy, (yu->p - V.p) / dy)};
  }
  auto predict = [&](const PrimitiveState& s, const PrimitiveState& t) {
    PrimitiveState b = V;
    b.rho -= half_dt * (V.u * s.rho + V.rho * s.u + V.v * t.rho + V.rho * t.v);
    b.u -= half_dt * (V.u * s.u + s.p / V.rho + V.v * t.u + gphx);
    b.v -= half_dt * (V.u * s.v + V.v * t.v + t.p / V.rho + gphy);
    b.p -= half_dt * (V.u * s.p + gamma * V.p * s.u + V.v * t.p + gamma * V.p * t.v);
    return b;
  };
  auto shift = [](const PrimitiveState& b, const PrimitiveState& s, double h) {
    return PrimitiveState{b.rho + h * s.rho, b.u + h * s.u, b.v + h * s.v, b.p + h * s.p};
  };
  const PrimitiveState b = predict(sx, sy);
  CellTraces t{shift(b, sx, -0.5 * dx), shift(b, sx, 0.5 * dx), shift(b, sy, -0.5 * dy), shift(b, sy, 0.5 * dy)};
  const bool ok = b.admissible() && t.xm.admissible() && t.xp.admissible() && t.ym.admissible() && t.yp.admissible();
  if (!ok) {
    const PrimitiveState b0 = predict(PrimitiveState{}, PrimitiveState{});
    t = {b0, b0, b0, b0};
  }
  return t;
}

// Face flux from face-frame primitive traces.  m is the gravity jump.
inline InterfaceFlux face_flux(Scheme scheme, const PrimitiveState& VL, const PrimitiveState& VR, double m,
                               double inv_d, double gamma, double K, double theta_override, long& warnings,
                               double* a_out = nullptr, double* pi_out = nullptr) {
  const double cL = std::sqrt(gamma * VL.p / VL.rho), cR = std::sqrt(gamma * VR.p / VR.rho);
  const ConservativeState UL = to_cons_fast(VL, gamma), UR = to_cons_fast(VR, gamma);
  if (scheme == Scheme::HLLC) {
    InterfaceFlux f = hllc(VL, VR, cL, cR, UL, UR);
    f.src_half_mom = 0.5 * m * inv_d;
    f.src_half_energy = f.u_face * f.src_half_mom;
    return f;
  }
  const double a = impedance(VL.rho, cL, VR.rho, cR, K);
  const double th = theta_override >= 0.0 ? theta_override : theta(VL.u, cL, VR.u, cR);
  const double us = u_star(VL.u, VR.u, VL.p, VR.p, m, a);
  const double pi = pi_star(VL.u, VR.u, VL.p, VR.p, a, th);
  if (!(1.0 / VL.rho + (us - VL.u) / a > 0.0) || !(1.0 / VR.rho - (us - VR.u) / a > 0.0)) ++warnings;
  if (a_out) *a_out = a;
  if (pi_out) *pi_out = pi;
  return upwind_flux(us, pi, m, inv_d, UL, UR);
}

}  // namespace detail

namespace kernels {

struct Workspace {
  // per-cell primitive cache (all cells including ghosts)
  std::vector<PrimitiveState> prim;
  std::vector<double> cs;
  std::vector<double> mach_x, mach_y;  // |u|/c, |v|/c
  // faces indexed by the flat index of the left (x) / lower (y) cell
  std::vector<InterfaceFlux> fx, fy;
  std::vector<double> pix, piy;  // theta-corrected star pressure
  std::vector<double> arx, ary;  // a * max(1/rho_L, 1/rho_R)
  std::vector<CellTraces> traces;
  std::vector<ConservativeState> next, saved;
  Grid mid;  // OSLP n+1- state
  long warnings = 0;
  const void* faces_for = nullptr;  // grid whose first-order faces are cached
};

void primitives(Workspace& w, const Grid& g, const GasParams& gas);
long faces_first_order(Workspace& w, const Grid& g, const GasParams& gas, const SchemeConfig& cfg);
// max over cells of S_x/dx + S_y/dy; `oslp` combines acoustic and transport by max
double max_rate(const Workspace& w, const Grid& g, bool oslp);
double max_rate_hllc(const Workspace& w, const Grid& g);
void update_conservative(Workspace& w, const Grid& g, double dt);
void update_oslp(Workspace& w, Grid& g, const GasParams& gas, double dt);
void traces(Workspace& w, const Grid& g, const GasParams& gas, double half_dt);
long faces_from_traces(Workspace& w, const Grid& g, const GasParams& gas, const SchemeConfig& cfg);
double entropy_residual_min(const Workspace& w, const Grid& g, const GasParams& gas, double dt);
void check_interior(const std::vector<ConservativeState>& cells, const Grid& g, double dt);

}  // namespace kernels
}  // namespace fslp
