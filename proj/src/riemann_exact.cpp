#include "fslp/riemann_exact.hpp"

#include <cmath>
#include <stdexcept>

namespace fslp {

namespace {

struct SideFn {
  double f, df;
};

// f_K and its derivative for one side (shock branch when p > p_K)
SideFn side(double p, const PrimitiveState& V, double c, double g) {
  if (p > V.p) {
    const double A = 2.0 / ((g + 1.0) * V.rho), B = (g - 1.0) / (g + 1.0) * V.p;
    const double q = std::sqrt(A / (p + B));
    return {(p - V.p) * q, q * (1.0 - 0.5 * (p - V.p) / (B + p))};
  }
  const double z = (g - 1.0) / (2.0 * g);
  const double r = std::pow(p / V.p, z);
  return {2.0 * c / (g - 1.0) * (r - 1.0), std::pow(p / V.p, -(g + 1.0) / (2.0 * g)) / (V.rho * c)};
}

}  // namespace

double pressure_function(double p, const PrimitiveState& VL, const PrimitiveState& VR, const GasParams& gas) {
  const double g = gas.gamma;
  const double cL = sound_speed(g, VL.rho, VL.p), cR = sound_speed(g, VR.rho, VR.p);
  return side(p, VL, cL, g).f + side(p, VR, cR, g).f + (VR.u - VL.u);
}

RiemannSolution solve_exact(const PrimitiveState& VL, const PrimitiveState& VR, const GasParams& gas) {
  if (!VL.admissible() || !VR.admissible()) throw AdmissibilityError("solve_exact: inadmissible input state");
  const double g = gas.gamma;
  const double cL = sound_speed(g, VL.rho, VL.p), cR = sound_speed(g, VR.rho, VR.p);
  RiemannSolution s;
  s.left = VL;
  s.right = VR;
  s.gas = gas;
  const double du = VR.u - VL.u;
  if (2.0 * (cL + cR) / (g - 1.0) <= du) {
    s.vacuum = true;
    return s;
  }
  // two-rarefaction guess
  const double z = (g - 1.0) / (2.0 * g);
  double p = std::pow((cL + cR - 0.5 * (g - 1.0) * du) / (cL / std::pow(VL.p, z) + cR / std::pow(VR.p, z)), 1.0 / z);
  if (!(p > 0.0) || !std::isfinite(p)) p = 1e-8 * std::min(VL.p, VR.p);
  auto F = [&](double q) { return side(q, VL, cL, g).f + side(q, VR, cR, g).f + du; };
  const double scale = std::abs(du) + cL + cR;
  bool converged = false;
  for (int it = 0; it < 50; ++it) {
    const SideFn a = side(p, VL, cL, g), b = side(p, VR, cR, g);
    const double f = a.f + b.f + du;
    s.iterations = it + 1;
    if (std::abs(f) <= 1e-14 * scale) {
      converged = true;
      break;
    }
    double pn = p - f / (a.df + b.df);
    if (!(pn > 0.0)) pn = 0.5 * p;
    if (std::abs(pn - p) <= 1e-15 * p) {
      p = pn;
      converged = true;
      break;
    }
    p = pn;
  }
  if (!converged) {
    // bisection on a bracket; f is increasing in p
    double lo = 0.0, hi = std::max(VL.p, VR.p);
    while (F(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (F(mid) < 0.0 ? lo : hi) = mid;
    }
    p = 0.5 * (lo + hi);
  }
  s.p_star = p;
  s.u_star = 0.5 * (VL.u + VR.u) + 0.5 * (side(p, VR, cR, g).f - side(p, VL, cL, g).f);
  const double gr = (g - 1.0) / (g + 1.0);
  auto star_rho = [&](const PrimitiveState& V, WaveKind& kind) {
    if (p > V.p) {
      kind = WaveKind::Shock;
      const double r = p / V.p;
      return V.rho * (r + gr) / (gr * r + 1.0);
    }
    kind = WaveKind::Rarefaction;
    return V.rho * std::pow(p / V.p, 1.0 / g);
  };
  s.rho_star_L = star_rho(VL, s.left_wave);
  s.rho_star_R = star_rho(VR, s.right_wave);
  return s;
}

PrimitiveState RiemannSolution::sample(double xi) const {
  const double g = gas.gamma;
  const double cL = sound_speed(g, left.rho, left.p), cR = sound_speed(g, right.rho, right.p);
  const double gp = (g + 1.0) / (2.0 * g), gm = (g - 1.0) / (2.0 * g);
  auto fan = [&](const PrimitiveState& V, double c, double sgn) {
    // inside a rarefaction fan; sgn = +1 left-facing, -1 right-facing
    const double k = 2.0 / (g + 1.0) + sgn * (g - 1.0) / ((g + 1.0) * c) * (V.u - xi);
    const double rho = V.rho * std::pow(k, 2.0 / (g - 1.0));
    const double u = 2.0 / (g + 1.0) * (sgn * c + 0.5 * (g - 1.0) * V.u + xi);
    return PrimitiveState{rho, u, V.v, V.p * std::pow(k, 2.0 * g / (g - 1.0))};
  };
  if (vacuum) {
    const double sL = left.u + 2.0 * cL / (g - 1.0), sR = right.u - 2.0 * cR / (g - 1.0);
    if (xi <= left.u - cL) return left;
    if (xi < sL) return fan(left, cL, 1.0);
    if (xi <= sR) return PrimitiveState{0.0, 0.5 * (sL + sR), 0.0, 0.0};
    if (xi < right.u + cR) return fan(right, cR, -1.0);
    return right;
  }
  if (xi <= u_star) {
    const PrimitiveState& V = left;
    if (left_wave == WaveKind::Shock) {
      const double sL = V.u - cL * std::sqrt(gp * p_star / V.p + gm);
      return xi <= sL ? V : PrimitiveState{rho_star_L, u_star, V.v, p_star};
    }
    const double head = V.u - cL;
    const double tail = u_star - cL * std::pow(p_star / V.p, gm);
    if (xi <= head) return V;
    if (xi >= tail) return PrimitiveState{rho_star_L, u_star, V.v, p_star};
    return fan(V, cL, 1.0);
  }
  const PrimitiveState& V = right;
  if (right_wave == WaveKind::Shock) {
    const double sR = V.u + cR * std::sqrt(gp * p_star / V.p + gm);
    return xi >= sR ? V : PrimitiveState{rho_star_R, u_star, V.v, p_star};
  }
  const double head = V.u + cR;
  const double tail = u_star + cR * std::pow(p_star / V.p, gm);
  if (xi >= head) return V;
  if (xi <= tail) return PrimitiveState{rho_star_R, u_star, V.v, p_star};
  return fan(V, cR, -1.0);
}

std::vector<PrimitiveState> sample_profile(const RiemannSolution& sol, const std::vector<double>& x, double x0,
                                           double t) {
  if (!(t > 0.0)) throw std::invalid_argument("sample_profile: t must be positive");
  std::vector<PrimitiveState> out;
  out.reserve(x.size());
  for (double xv : x) out.push_back(sol.sample((xv - x0) / t));
  return out;
}

}  // namespace fslp
