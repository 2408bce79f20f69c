#pragma once
/// Exact Riemann solver for the 1D perfect-gas Euler equations (reference
/// profiles for the shock-tube cases).  The tangential velocity is carried
/// passively across the contact.

#include <vector>

#include "fslp/eos.hpp"
#include "fslp/state.hpp"

namespace fslp {

enum class WaveKind { Shock, Rarefaction };

struct RiemannSolution {
  PrimitiveState left, right;
  GasParams gas;
  double p_star = 0.0;
  double u_star = 0.0;
  double rho_star_L = 0.0, rho_star_R = 0.0;
  WaveKind left_wave = WaveKind::Rarefaction;
  WaveKind right_wave = WaveKind::Rarefaction;
  bool vacuum = false;
  int iterations = 0;

  /// Exact state at similarity coordinate xi = (x - x0)/t.
  PrimitiveState sample(double xi) const;
};

/// Pressure function f(p) = f_L(p) + f_R(p) + (u_R - u_L); its root is p*.
double pressure_function(double p, const PrimitiveState& VL, const PrimitiveState& VR, const GasParams& gas);

RiemannSolution solve_exact(const PrimitiveState& VL, const PrimitiveState& VR, const GasParams& gas);
std::vector<PrimitiveState> sample_profile(const RiemannSolution& sol, const std::vector<double>& x, double x0,
                                           double t);

}  // namespace fslp
