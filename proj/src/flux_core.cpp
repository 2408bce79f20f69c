#include "fslp/flux_core.hpp"

#include <stdexcept>

namespace fslp {

double acoustic_impedance(const PrimitiveState& VL, const PrimitiveState& VR, const GasParams& gas, double K) {
  const double cL = sound_speed(gas.gamma, VL.rho, VL.p);
  const double cR = sound_speed(gas.gamma, VR.rho, VR.p);
  return detail::impedance(VL.rho, cL, VR.rho, cR, K);
}

double low_mach_theta(const PrimitiveState& VL, const PrimitiveState& VR, const GasParams& gas) {
  const double cL = sound_speed(gas.gamma, VL.rho, VL.p);
  const double cR = sound_speed(gas.gamma, VR.rho, VR.p);
  return detail::theta(VL.u, cL, VR.u, cR);
}

StarState star_states(const PrimitiveState& VL, const PrimitiveState& VR, double phi_L, double phi_R, double a,
                      double theta, const GasParams& gas) {
  if (!(a > 0.0)) throw std::invalid_argument("star_states: impedance must be positive");
  StarState s;
  s.a = a;
  s.theta = theta;
  s.m_jump = detail::gravity_jump(VL.rho, VR.rho, phi_R - phi_L);
  s.u_star = detail::u_star(VL.u, VR.u, VL.p, VR.p, s.m_jump, a);
  s.pi_star_theta = detail::pi_star(VL.u, VR.u, VL.p, VR.p, a, theta);
  s.pi_star = detail::pi_star(VL.u, VR.u, VL.p, VR.p, a, 1.0);
  s.tau_star_L = 1.0 / VL.rho + (s.u_star - VL.u) / a;
  s.tau_star_R = 1.0 / VR.rho - (s.u_star - VR.u) / a;
  const double gm1 = gas.gamma - 1.0;
  const double EL = VL.p / (gm1 * VL.rho) + 0.5 * (VL.u * VL.u + VL.v * VL.v);
  const double ER = VR.p / (gm1 * VR.rho) + 0.5 * (VR.u * VR.u + VR.v * VR.v);
  s.E_star_L = EL - (s.pi_star_L() * s.u_star - VL.p * VL.u) / a;
  s.E_star_R = ER + (s.pi_star_R() * s.u_star - VR.p * VR.u) / a;
  s.e_star_L = s.E_star_L - 0.5 * (s.u_star * s.u_star + VL.v * VL.v);
  s.e_star_R = s.E_star_R - 0.5 * (s.u_star * s.u_star + VR.v * VR.v);
  return s;
}

InterfaceFlux fslp_flux(const ConservativeState& UL, const ConservativeState& UR, const StarState& star, double dx) {
  return detail::upwind_flux(star.u_star, star.pi_star_theta, star.m_jump, 1.0 / dx, UL, UR);
}

InterfaceFlux hllc_flux(const ConservativeState& UL, const ConservativeState& UR, const GasParams& gas) {
  const PrimitiveState VL = cons_to_prim(UL, gas), VR = cons_to_prim(UR, gas);
  return detail::hllc(VL, VR, sound_speed(gas.gamma, VL.rho, VL.p), sound_speed(gas.gamma, VR.rho, VR.p), UL, UR);
}

FaceSolution solve_fslp_face(const ConservativeState& UL, const ConservativeState& UR, double phi_L, double phi_R,
                             double dx, const GasParams& gas, double K, double theta_override) {
  const PrimitiveState VL = cons_to_prim(UL, gas), VR = cons_to_prim(UR, gas);
  const double a = acoustic_impedance(VL, VR, gas, K);
  const double th = theta_override >= 0.0 ? theta_override : low_mach_theta(VL, VR, gas);
  FaceSolution out;
  out.star = star_states(VL, VR, phi_L, phi_R, a, th, gas);
  out.flux = fslp_flux(UL, UR, out.star, dx);
  return out;
}

ThetaStarStates theta_star_states(const StarState& star, const PrimitiveState& VL, const PrimitiveState& VR) {
  const double half_du = 0.5 * (1.0 - star.theta) * (VR.u - VL.u);
  return {star.u_star - half_du, star.u_star + half_du, star.E_star_L - half_du * star.u_star,
          star.E_star_R + half_du * star.u_star};
}

}  // namespace fslp
