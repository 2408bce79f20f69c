// OpenMP kernels.  Every parallel loop writes disjoint locations from
// read-only inputs; the only cross-cell reductions are max/min/count, which
// are order independent, so results do not depend on the thread count.

#include "kernels.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fslp::kernels {

namespace {

void fail_cell(const Grid& g, std::size_t k, const char* what, double dt) {
  const int i = static_cast<int>(k % g.stride()) - g.gx();
  const int j = static_cast<int>(k / g.stride()) - g.gy();
  std::ostringstream os;
  os << what << " (dt = " << dt << ")";
  throw AdmissibilityError(os.str(), i, j);
}

}  // namespace

void primitives(Workspace& w, const Grid& g, const GasParams& gas) {
  const std::size_t n = g.size();
  w.prim.resize(n);
  w.cs.resize(n);
  w.mach_x.resize(n);
  w.mach_y.resize(n);
  const auto& U = g.cells();
  const double gamma = gas.gamma;
  long bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad)
  for (std::size_t k = 0; k < n; ++k) {
    const PrimitiveState V = to_prim_fast(U[k], gamma);
    w.prim[k] = V;
    const double c = std::sqrt(gamma * V.p / V.rho);
    w.cs[k] = c;
    w.mach_x[k] = std::abs(V.u) / c;
    w.mach_y[k] = std::abs(V.v) / c;
    if (!(V.rho > 0.0) || !(V.p > 0.0)) ++bad;
  }
  if (bad) {
    for (std::size_t k = 0; k < n; ++k)
      if (!(w.prim[k].rho > 0.0) || !(w.prim[k].p > 0.0)) fail_cell(g, k, "inadmissible state before step", 0.0);
  }
}

long faces_first_order(Workspace& w, const Grid& g, const GasParams& gas, const SchemeConfig& cfg) {
  const std::size_t n = g.size();
  w.fx.resize(n);
  w.pix.resize(n);
  w.arx.resize(n);
  const int nx = g.nx(), ny = g.ny();
  (void)gas;
  const double K = cfg.K, th0 = cfg.theta_override();
  const bool hllc = cfg.scheme == Scheme::HLLC;
  const auto& U = g.cells();
  const auto& phi = g.phi_data();
  long warn = 0;

  auto solve = [&](std::size_t kL, std::size_t kR, bool ydir, double inv_d, InterfaceFlux& f, double& pi_out,
                   double& ar_out, long& wcount) {
    PrimitiveState VL = w.prim[kL], VR = w.prim[kR];
    ConservativeState UL = U[kL], UR = U[kR];
    if (ydir) {
      VL = to_face_frame(VL, Direction::Y);
      VR = to_face_frame(VR, Direction::Y);
      UL = to_face_frame(UL, Direction::Y);
      UR = to_face_frame(UR, Direction::Y);
    }
    const double cL = w.cs[kL], cR = w.cs[kR];
    const double m = detail::gravity_jump(VL.rho, VR.rho, phi[kR] - phi[kL]);
    if (hllc) {
      f = detail::hllc(VL, VR, cL, cR, UL, UR);
      f.src_half_mom = 0.5 * m * inv_d;
      f.src_half_energy = f.u_face * f.src_half_mom;
      return;
    }
    const double a = detail::impedance(VL.rho, cL, VR.rho, cR, K);
    const std::vector<double>& mach = ydir ? w.mach_y : w.mach_x;
    const double th = th0 >= 0.0 ? th0 : std::min(1.0, std::max(mach[kL], mach[kR]));
    const double us = detail::u_star(VL.u, VR.u, VL.p, VR.p, m, a);
    const double pi = detail::pi_star(VL.u, VR.u, VL.p, VR.p, a, th);
    // positive star specific volumes, multiplied through by a*rho
    if (!(a + VL.rho * (us - VL.u) > 0.0) || !(a - VR.rho * (us - VR.u) > 0.0)) ++wcount;
    f = detail::upwind_flux(us, pi, m, inv_d, UL, UR);
    pi_out = pi;
    ar_out = a / std::min(VL.rho, VR.rho);
  };

  const double inv_dx = 1.0 / g.dx();
#pragma omp parallel for collapse(2) schedule(static) reduction(+ : warn)
  for (int j = 0; j < ny; ++j)
    for (int i = -1; i < nx; ++i) {
      const std::size_t k = g.index(i, j);
      solve(k, k + 1, false, inv_dx, w.fx[k], w.pix[k], w.arx[k], warn);
    }

  if (!g.is_1d()) {
    w.fy.resize(n);
    w.piy.resize(n);
    w.ary.resize(n);
    const std::size_t s = g.stride();
    const double inv_dy = 1.0 / g.dy();
#pragma omp parallel for collapse(2) schedule(static) reduction(+ : warn)
    for (int j = -1; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const std::size_t k = g.index(i, j);
        solve(k, k + s, true, inv_dy, w.fy[k], w.piy[k], w.ary[k], warn);
      }
  }
  return warn;
}

double max_rate(const Workspace& w, const Grid& g, bool oslp) {
  const int nx = g.nx(), ny = g.ny();
  const bool two_d = !g.is_1d();
  const std::size_t s = g.stride();
  const double inv_dx = 1.0 / g.dx(), inv_dy = 1.0 / g.dy();
  double rmax = 0.0;
#pragma omp parallel for collapse(2) schedule(static) reduction(max : rmax)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = g.index(i, j);
      const double acx = 2.0 * std::max(w.arx[k - 1], w.arx[k]);
      const double trx = std::max(w.fx[k - 1].u_face, 0.0) - std::min(w.fx[k].u_face, 0.0);
      double ac = acx * inv_dx, tr = trx * inv_dx;
      if (two_d) {
        ac += 2.0 * std::max(w.ary[k - s], w.ary[k]) * inv_dy;
        tr += (std::max(w.fy[k - s].u_face, 0.0) - std::min(w.fy[k].u_face, 0.0)) * inv_dy;
      }
      const double r = oslp ? std::max(ac, tr) : ac + tr;
      rmax = std::max(rmax, r);
    }
  return rmax;
}

double max_rate_hllc(const Workspace& w, const Grid& g) {
  const int nx = g.nx(), ny = g.ny();
  const bool two_d = !g.is_1d();
  const double inv_dx = 1.0 / g.dx(), inv_dy = 1.0 / g.dy();
  double rmax = 0.0;
#pragma omp parallel for collapse(2) schedule(static) reduction(max : rmax)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = g.index(i, j);
      const PrimitiveState& V = w.prim[k];
      double r = (std::abs(V.u) + w.cs[k]) * inv_dx;
      if (two_d) r += (std::abs(V.v) + w.cs[k]) * inv_dy;
      rmax = std::max(rmax, r);
    }
  return rmax;
}

void update_conservative(Workspace& w, const Grid& g, double dt) {
  w.next.resize(g.size());
  const int nx = g.nx(), ny = g.ny();
  const bool two_d = !g.is_1d();
  const std::size_t s = g.stride();
  const double lx = dt / g.dx(), ly = dt / g.dy();
  const auto& U = g.cells();
#pragma omp parallel for collapse(2) schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = g.index(i, j);
      w.next[k] = detail::apply_update(U[k], w.fx[k - 1], w.fx[k], two_d ? &w.fy[k - s] : nullptr,
                                       two_d ? &w.fy[k] : nullptr, lx, ly, dt);
    }
}

void update_oslp(Workspace& w, Grid& g, const GasParams& gas, double dt) {
  const int nx = g.nx(), ny = g.ny();
  const bool two_d = !g.is_1d();
  const std::size_t s = g.stride();
  const double lx = dt / g.dx(), ly = dt / g.dy();
  if (w.mid.size() != g.size() || w.mid.nx() != nx || w.mid.ny() != ny) w.mid = g;
  auto& M = w.mid.cells();
  const auto& U = g.cells();
  long bad = 0;

  // acoustic step
#pragma omp parallel for collapse(2) schedule(static) reduction(+ : bad)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = g.index(i, j);
      const InterfaceFlux &xl = w.fx[k - 1], &xr = w.fx[k];
      double L = 1.0 + lx * (xr.u_face - xl.u_face);
      double mx = U[k].mom_x - lx * (w.pix[k] - w.pix[k - 1]) - dt * (xl.src_half_mom + xr.src_half_mom);
      double my = U[k].mom_y;
      double E = U[k].rhoE - lx * (w.pix[k] * xr.u_face - w.pix[k - 1] * xl.u_face) -
                 dt * (xl.src_half_energy + xr.src_half_energy);
      if (two_d) {
        const InterfaceFlux &yl = w.fy[k - s], &yr = w.fy[k];
        L += ly * (yr.u_face - yl.u_face);
        my -= ly * (w.piy[k] - w.piy[k - s]) + dt * (yl.src_half_mom + yr.src_half_mom);
        E -= ly * (w.piy[k] * yr.u_face - w.piy[k - s] * yl.u_face) + dt * (yl.src_half_energy + yr.src_half_energy);
      }
      if (!(L > 0.0)) ++bad;
      M[k] = {U[k].rho / L, mx / L, my / L, E / L};
    }
  if (bad) throw SolverError("OSLP acoustic step: L_j <= 0, acoustic CFL violated (dt = " + std::to_string(dt) + ")");

  // ghosts of the n+1- state for the upwind transport fluxes
  apply_boundaries(w.mid, g.boundaries, gas);

  w.next.resize(g.size());
#pragma omp parallel for collapse(2) schedule(static)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = g.index(i, j);
      const double ul = w.fx[k - 1].u_face, ur = w.fx[k].u_face;
      double L = 1.0 + lx * (ur - ul);
      double vl = 0.0, vr = 0.0;
      if (two_d) {
        vl = w.fy[k - s].u_face;
        vr = w.fy[k].u_face;
        L += ly * (vr - vl);
      }
      const ConservativeState& xl = ul > 0.0 ? M[k - 1] : M[k];
      const ConservativeState& xr = ur > 0.0 ? M[k] : M[k + 1];
      ConservativeState N = L * M[k];
      N.rho -= lx * (ur * xr.rho - ul * xl.rho);
      N.mom_x -= lx * (ur * xr.mom_x - ul * xl.mom_x);
      N.mom_y -= lx * (ur * xr.mom_y - ul * xl.mom_y);
      N.rhoE -= lx * (ur * xr.rhoE - ul * xl.rhoE);
      if (two_d) {
        const ConservativeState& yl = vl > 0.0 ? M[k - s] : M[k];
        const ConservativeState& yr = vr > 0.0 ? M[k] : M[k + s];
        N.rho -= ly * (vr * yr.rho - vl * yl.rho);
        N.mom_x -= ly * (vr * yr.mom_x - vl * yl.mom_x);
        N.mom_y -= ly * (vr * yr.mom_y - vl * yl.mom_y);
        N.rhoE -= ly * (vr * yr.rhoE - vl * yl.rhoE);
      }
      w.next[k] = N;
    }
}

void traces(Workspace& w, const Grid& g, const GasParams& gas, double half_dt) {
  w.traces.resize(g.size());
  const int nx = g.nx(), ny = g.ny();
  const bool two_d = !g.is_1d();
  const int s = g.stride();
  const double dx = g.dx(), dy = g.dy(), gamma = gas.gamma;
  const auto& gpx = g.dphi_x_center();
  const auto& gpy = g.dphi_y_center();
  const int jlo = two_d ? -1 : 0, jhi = two_d ? ny + 1 : 1;
#pragma omp parallel for collapse(2) schedule(static)
  for (int j = jlo; j < jhi; ++j)
    for (int i = -1; i < nx + 1; ++i) {
      const std::size_t k = g.index(i, j);
      const PrimitiveState* yd = two_d ? &w.prim[k - s] : nullptr;
      const PrimitiveState* yu = two_d ? &w.prim[k + s] : nullptr;
      w.traces[k] = detail::cell_traces(w.prim[k], w.prim[k - 1], w.prim[k + 1], yd, yu, dx, dy, half_dt, gamma,
                                        gpx[k], two_d ? gpy[k] : 0.0);
    }
}

long faces_from_traces(Workspace& w, const Grid& g, const GasParams& gas, const SchemeConfig& cfg) {
  const std::size_t n = g.size();
  w.fx.resize(n);
  const int nx = g.nx(), ny = g.ny();
  const double gamma = gas.gamma, K = cfg.K, th0 = cfg.theta_override();
  const auto& dpx = g.dphi_x_face();
  const double dx = g.dx(), inv_dx = 1.0 / dx;
  long warn = 0;
#pragma omp parallel for collapse(2) schedule(static) reduction(+ : warn)
  for (int j = 0; j < ny; ++j)
    for (int i = -1; i < nx; ++i) {
      const std::size_t k = g.index(i, j);
      const PrimitiveState& VL = w.traces[k].xp;
      const PrimitiveState& VR = w.traces[k + 1].xm;
      const double m = detail::gravity_jump(VL.rho, VR.rho, dpx[k] * dx);
      w.fx[k] = detail::face_flux(cfg.scheme, VL, VR, m, inv_dx, gamma, K, th0, warn);
    }
  if (!g.is_1d()) {
    w.fy.resize(n);
    const std::size_t s = g.stride();
    const auto& dpy = g.dphi_y_face();
    const double dy = g.dy(), inv_dy = 1.0 / dy;
#pragma omp parallel for collapse(2) schedule(static) reduction(+ : warn)
    for (int j = -1; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        const std::size_t k = g.index(i, j);
        const PrimitiveState VL = to_face_frame(w.traces[k].yp, Direction::Y);
        const PrimitiveState VR = to_face_frame(w.traces[k + s].ym, Direction::Y);
        const double m = detail::gravity_jump(VL.rho, VR.rho, dpy[k] * dy);
        w.fy[k] = detail::face_flux(cfg.scheme, VL, VR, m, inv_dy, gamma, K, th0, warn);
      }
  }
  return warn;
}

double entropy_residual_min(const Workspace& w, const Grid& g, const GasParams& gas, double dt) {
  // Q = u* rho_up s_up; the pressure part of the fan carries no entropy flux
  const int nx = g.nx(), ny = g.ny();
  const bool two_d = !g.is_1d();
  const std::size_t s = g.stride();
  const double lx = dt / g.dx(), ly = dt / g.dy();
  const double cv = gas.cv, gamma = gas.gamma;
  auto rs = [&](const PrimitiveState& V) { return V.rho * cv * (std::log(V.p) - gamma * std::log(V.rho)); };
  auto q = [&](std::size_t kL, std::size_t kR, double us) { return us * rs(us > 0.0 ? w.prim[kL] : w.prim[kR]); };
  double rmin = std::numeric_limits<double>::infinity();
#pragma omp parallel for collapse(2) schedule(static) reduction(min : rmin)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = g.index(i, j);
      const PrimitiveState Vn = to_prim_fast(w.next[k], gamma);
      double r = rs(Vn) - rs(w.prim[k]) + lx * (q(k, k + 1, w.fx[k].u_face) - q(k - 1, k, w.fx[k - 1].u_face));
      if (two_d) r += ly * (q(k, k + s, w.fy[k].u_face) - q(k - s, k, w.fy[k - s].u_face));
      rmin = std::min(rmin, r);
    }
  return rmin;
}

void check_interior(const std::vector<ConservativeState>& cells, const Grid& g, double dt) {
  const int nx = g.nx(), ny = g.ny();
  long bad = 0;
#pragma omp parallel for collapse(2) schedule(static) reduction(+ : bad)
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const ConservativeState& U = cells[g.index(i, j)];
      if (!(U.rho > 0.0) || !(U.internal_energy_density() > 0.0)) ++bad;
    }
  if (!bad) return;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const ConservativeState& U = cells[g.index(i, j)];
      if (!(U.rho > 0.0) || !(U.internal_energy_density() > 0.0))
        fail_cell(g, g.index(i, j), "state left the admissible set after the step", dt);
    }
}

}  // namespace fslp::kernels
