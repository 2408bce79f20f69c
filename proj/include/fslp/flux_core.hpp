#pragma once
/// Interface solvers.  Every function works in the face frame: `u` / `mom_x`
/// carry the component normal to the face (see to_face_frame).

#include <algorithm>
#include <cmath>

#include "fslp/eos.hpp"
#include "fslp/state.hpp"

namespace fslp {

struct StarState {
  double a = 0.0;
  double theta = 1.0;
  double u_star = 0.0;
  double pi_star_theta = 0.0;
  double pi_star = 0.0;  // theta = 1 value
  double m_jump = 0.0;   // ((rho_L + rho_R)/2) (phi_R - phi_L)
  double tau_star_L = 0.0, tau_star_R = 0.0;
  double e_star_L = 0.0, e_star_R = 0.0;  // star internal energies
  double E_star_L = 0.0, E_star_R = 0.0;  // star specific total energies

  double pi_star_L() const { return pi_star + 0.5 * m_jump; }
  double pi_star_R() const { return pi_star - 0.5 * m_jump; }
  // false when a is too small for positive star specific volumes
  bool subcharacteristic_ok() const { return tau_star_L > 0.0 && tau_star_R > 0.0; }
};

struct InterfaceFlux {
  double mass = 0.0;
  double mom_n = 0.0;
  double mom_t = 0.0;
  double energy = 0.0;
  // this face's share of the adjacent cells' gravity source:
  // half of {rho dphi} and half of u_face {rho dphi}
  double src_half_mom = 0.0;
  double src_half_energy = 0.0;
  double u_face = 0.0;  // u* (FSLP) or the contact speed (HLLC)
};

namespace detail {

inline double impedance(double rhoL, double cL, double rhoR, double cR, double K) {
  return K * std::max(rhoL * cL, rhoR * cR);
}
inline double theta(double uL, double cL, double uR, double cR) {
  return std::min(1.0, std::max(std::abs(uL) / cL, std::abs(uR) / cR));
}
inline double gravity_jump(double rhoL, double rhoR, double dphi) { return 0.5 * (rhoL + rhoR) * dphi; }
inline double u_star(double uL, double uR, double pL, double pR, double m, double a) {
  return 0.5 * (uL + uR) - (pR - pL + m) / (2.0 * a);
}
inline double pi_star(double uL, double uR, double pL, double pR, double a, double theta) {
  return 0.5 * (pL + pR) - 0.5 * theta * a * (uR - uL);
}

// Upwinded FSLP flux; left state when u* > 0.
inline InterfaceFlux upwind_flux(double ustar, double pi, double m, double inv_dx, const ConservativeState& UL,
                                 const ConservativeState& UR) {
  const ConservativeState& Up = ustar > 0.0 ? UL : UR;
  InterfaceFlux f;
  f.mass = ustar * Up.rho;
  f.mom_n = ustar * Up.mom_x + pi;
  f.mom_t = ustar * Up.mom_y;
  f.energy = ustar * Up.rhoE + pi * ustar;
  f.src_half_mom = 0.5 * m * inv_dx;
  f.src_half_energy = ustar * f.src_half_mom;
  f.u_face = ustar;
  return f;
}

}  // namespace detail

double acoustic_impedance(const PrimitiveState& VL, const PrimitiveState& VR, const GasParams& gas, double K);
double low_mach_theta(const PrimitiveState& VL, const PrimitiveState& VR, const GasParams& gas);
StarState star_states(const PrimitiveState& VL, const PrimitiveState& VR, double phi_L, double phi_R, double a,
                      double theta, const GasParams& gas);
/// FSLP flux; `dx` is the cell size normal to the face.
InterfaceFlux fslp_flux(const ConservativeState& UL, const ConservativeState& UR, const StarState& star, double dx);
/// Three-wave HLLC flux with Davis wave-speed bounds (no gravity part).
InterfaceFlux hllc_flux(const ConservativeState& UL, const ConservativeState& UR, const GasParams& gas);

/// Convenience: full FSLP interface solve from conservative face-frame states.
struct FaceSolution {
  StarState star;
  InterfaceFlux flux;
};
FaceSolution solve_fslp_face(const ConservativeState& UL, const ConservativeState& UR, double phi_L, double phi_R,
                             double dx, const GasParams& gas, double K, double theta_override = -1.0);

/// Appendix-C style theta-modified star velocities and energies per side.
struct ThetaStarStates {
  double u_L, u_R, E_L, E_R;
};
ThetaStarStates theta_star_states(const StarState& star, const PrimitiveState& VL, const PrimitiveState& VR);

namespace detail {

// HLLC on face-frame primitives; shared by hllc_flux and the kernels.
inline InterfaceFlux hllc(const PrimitiveState& VL, const PrimitiveState& VR, double cL, double cR,
                          const ConservativeState& UL, const ConservativeState& UR) {
  const double sL = std::min(VL.u - cL, VR.u - cR);
  const double sR = std::max(VL.u + cL, VR.u + cR);
  const double qL = VL.rho * (sL - VL.u), qR = VR.rho * (sR - VR.u);
  const double sM = (VR.p - VL.p + VL.u * qL - VR.u * qR) / (qL - qR);
  auto phys = [](const PrimitiveState& V, const ConservativeState& U) {
    InterfaceFlux f;
    f.mass = U.mom_x;
    f.mom_n = U.mom_x * V.u + V.p;
    f.mom_t = U.mom_y * V.u;
    f.energy = (U.rhoE + V.p) * V.u;
    return f;
  };
  auto star = [&](const PrimitiveState& V, const ConservativeState& U, double s) {
    const double k = V.rho * (s - V.u) / (s - sM);
    InterfaceFlux f = phys(V, U);
    const double rhoS = k;
    const double mnS = k * sM;
    const double mtS = k * V.v;
    const double ES = k * (U.rhoE / V.rho + (sM - V.u) * (sM + V.p / (V.rho * (s - V.u))));
    f.mass += s * (rhoS - U.rho);
    f.mom_n += s * (mnS - U.mom_x);
    f.mom_t += s * (mtS - U.mom_y);
    f.energy += s * (ES - U.rhoE);
    return f;
  };
  InterfaceFlux f;
  if (sL >= 0.0)
    f = phys(VL, UL);
  else if (sM >= 0.0)
    f = star(VL, UL, sL);
  else if (sR > 0.0)
    f = star(VR, UR, sR);
  else
    f = phys(VR, UR);
  f.u_face = sM;
  return f;
}

}  // namespace detail

}  // namespace fslp
