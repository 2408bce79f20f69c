#pragma once
/// Verification machinery: pressure / advection sub-steps whose convex
/// combination reproduces the FSLP update, star-state stability checks, and
/// the relaxation-system eigenstructure residual.  One-dimensional grids only.

#include <array>
#include <vector>

#include "fslp/flux_core.hpp"
#include "fslp/grid.hpp"
#include "fslp/schemes.hpp"

namespace fslp {

struct AugmentedState {
  ConservativeState U;
  double rho_pi = 0.0;   // rho * Pi (surrogate pressure)
  double rho_tau = 1.0;  // rho * T (surrogate specific volume)
};

/// A 1D grid plus the surrogate fields, indexed like grid.cells().
struct AugmentedGrid {
  Grid grid;
  std::vector<double> rho_pi;
  std::vector<double> rho_tau;

  AugmentedState at(int i) const {
    const std::size_t k = grid.index(i, 0);
    return {grid.cells()[k], rho_pi[k], rho_tau[k]};
  }
};

/// Equilibrium initialization: Pi = p^EOS, rho*T = 1.
AugmentedGrid make_augmented(const Grid& grid, const GasParams& gas);

struct AlphaSplit {
  double alpha = 0.5;
};

/// Global alpha from the cell maximizing c_j + v_j, chosen so that the
/// pressure and advection sub-steps see the same effective Courant number
/// (c/alpha = v/(1 - alpha)); clamped away from 0 and 1.
AlphaSplit select_alpha(Grid& grid, const GasParams& gas, const SchemeConfig& cfg);

AugmentedGrid pressure_substep(const AugmentedGrid& aug, double alpha, double dt, const GasParams& gas,
                               const SchemeConfig& cfg);
AugmentedGrid advection_substep(const AugmentedGrid& aug, double alpha, double dt, const GasParams& gas,
                                const SchemeConfig& cfg);
AugmentedGrid convex_combine(const AugmentedGrid& P, const AugmentedGrid& A, double alpha);

struct ConditionCo {
  bool pass = true;
  double residual_L = 0.0;
  double residual_R = 0.0;
};
ConditionCo check_condition_co(const PrimitiveState& VL, const PrimitiveState& VR, const StarState& star,
                               const GasParams& gas);

/// Relative residuals of the acoustic Riemann invariants across each wave:
/// e - Pi^2/(2a^2) and T + Pi/a^2.
struct StarInvariantResiduals {
  double energy_L = 0.0, energy_R = 0.0;
  double volume_L = 0.0, volume_R = 0.0;
  double max() const;
};
StarInvariantResiduals star_invariant_residuals(const PrimitiveState& VL, const PrimitiveState& VR,
                                                const StarState& star, const GasParams& gas);

/// Relaxation state W = [uP, PiP, rhoP, phi, eP - PiP^2/2a^2, TP + PiP/a^2,
/// rhoA TA - rhoP PiP/a^2, uA, PiA, EA, rhoA] together with the impedance.
struct RelaxationState {
  std::array<double, 11> w{};
  double a = 1.0;

  double u_p() const { return w[0]; }
  double rho_p() const { return w[2]; }
  double rho_a() const { return w[10]; }
};

using Matrix11 = std::array<std::array<double, 11>, 11>;
Matrix11 relaxation_matrix(const RelaxationState& W);

struct EigenReport {
  double max_residual = 0.0;
  int pairs_checked = 0;
  int pairs_skipped = 0;  // r_+/- with a vanishing denominator
};
EigenReport eigenstructure_residual(const RelaxationState& W);

}  // namespace fslp
