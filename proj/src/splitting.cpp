#include "fslp/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fslp {

namespace {

void require_1d(const Grid& g) {
  if (!g.is_1d()) throw std::invalid_argument("splitting sub-steps are one-dimensional");
}

// Interface solutions for faces i-1/2, i in [0, nx]; entry i is the face left of cell i.
std::vector<FaceSolution> faces(Grid& g, const GasParams& gas, const SchemeConfig& cfg) {
  apply_boundaries(g, gas);
  std::vector<FaceSolution> f(g.nx() + 1);
  for (int i = 0; i <= g.nx(); ++i)
    f[i] = solve_fslp_face(g.at(i - 1, 0), g.at(i, 0), g.phi(i - 1, 0), g.phi(i, 0), g.dx(), gas, cfg.K,
                           cfg.theta_override());
  return f;
}

void fill_surrogate_ghosts(AugmentedGrid& a) {
  // surrogate fields follow the same periodic / copy rule as the cells
  const Grid& g = a.grid;
  const int n = g.nx();
  for (int k = 1; k <= g.gx(); ++k) {
    const bool per_lo = g.boundaries.x_lo == BoundaryKind::Periodic;
    const bool per_hi = g.boundaries.x_hi == BoundaryKind::Periodic;
    const std::size_t lo = g.index(-k, 0), hi = g.index(n - 1 + k, 0);
    const std::size_t src_lo = g.index(per_lo ? n - k : 0, 0), src_hi = g.index(per_hi ? k - 1 : n - 1, 0);
    a.rho_pi[lo] = a.rho_pi[src_lo];
    a.rho_tau[lo] = a.rho_tau[src_lo];
    a.rho_pi[hi] = a.rho_pi[src_hi];
    a.rho_tau[hi] = a.rho_tau[src_hi];
  }
}

}  // namespace

AugmentedGrid make_augmented(const Grid& grid, const GasParams& gas) {
  require_1d(grid);
  AugmentedGrid a{grid, std::vector<double>(grid.size(), 0.0), std::vector<double>(grid.size(), 1.0)};
  apply_boundaries(a.grid, gas);
  for (std::size_t k = 0; k < a.grid.size(); ++k) {
    const ConservativeState& U = a.grid.cells()[k];
    if (U.rho > 0.0) a.rho_pi[k] = U.rho * cons_to_prim(U, gas).p;
  }
  return a;
}

AlphaSplit select_alpha(Grid& grid, const GasParams& gas, const SchemeConfig& cfg) {
  require_1d(grid);
  const auto f = faces(grid, gas, cfg);
  double best = -1.0, c_best = 1.0, v_best = 1.0;
  for (int i = 0; i < grid.nx(); ++i) {
    const double rho = grid.at(i, 0).rho;
    const double c = 2.0 * std::max(f[i].star.a, f[i + 1].star.a) / rho;
    const double v = std::max(f[i].star.u_star, 0.0) - std::min(f[i + 1].star.u_star, 0.0);
    if (c + v > best) {
      best = c + v;
      c_best = c;
      v_best = v;
    }
  }
  const double alpha = c_best / (c_best + v_best);
  return {std::clamp(alpha, 1e-3, 1.0 - 1e-3)};
}

AugmentedGrid pressure_substep(const AugmentedGrid& aug, double alpha, double dt, const GasParams& gas,
                               const SchemeConfig& cfg) {
  require_1d(aug.grid);
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  AugmentedGrid out = aug;
  const auto f = faces(out.grid, gas, cfg);
  const double lam = dt / (alpha * aug.grid.dx()), src = dt / alpha;
  for (int i = 0; i < aug.grid.nx(); ++i) {
    const std::size_t k = aug.grid.index(i, 0);
    const ConservativeState& U = aug.grid.cells()[k];
    const StarState &l = f[i].star, &r = f[i + 1].star;
    if (lam * std::max(l.a, r.a) / U.rho > 0.5 * (1.0 + 1e-12))
      throw SolverError("pressure sub-step CFL violated at cell " + std::to_string(i));
    ConservativeState& N = out.grid.cells()[k];
    N.mom_x = U.mom_x - lam * (r.pi_star_theta - l.pi_star_theta) -
              src * (f[i].flux.src_half_mom + f[i + 1].flux.src_half_mom);
    N.rhoE = U.rhoE - lam * (r.pi_star_theta * r.u_star - l.pi_star_theta * l.u_star) -
             src * (f[i].flux.src_half_energy + f[i + 1].flux.src_half_energy);
    out.rho_pi[k] = aug.rho_pi[k] - lam * (r.a * r.a * r.u_star - l.a * l.a * l.u_star);
    out.rho_tau[k] = aug.rho_tau[k] + lam * (r.u_star - l.u_star);
  }
  fill_surrogate_ghosts(out);
  return out;
}

AugmentedGrid advection_substep(const AugmentedGrid& aug, double alpha, double dt, const GasParams& gas,
                                const SchemeConfig& cfg) {
  require_1d(aug.grid);
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  AugmentedGrid out = aug;
  AugmentedGrid src = aug;
  const auto f = faces(src.grid, gas, cfg);
  fill_surrogate_ghosts(src);
  const double lam = dt / ((1.0 - alpha) * aug.grid.dx());
  const auto& C = src.grid.cells();
  for (int i = 0; i < aug.grid.nx(); ++i) {
    const std::size_t k = aug.grid.index(i, 0);
    const double ul = f[i].star.u_star, ur = f[i + 1].star.u_star;
    if (lam * (std::max(ul, 0.0) - std::min(ur, 0.0)) >= 1.0)
      throw SolverError("advection sub-step CFL violated at cell " + std::to_string(i));
    const std::size_t a = ul > 0.0 ? k - 1 : k;
    const std::size_t b = ur > 0.0 ? k : k + 1;
    ConservativeState& N = out.grid.cells()[k];
    N.rho = C[k].rho - lam * (ur * C[b].rho - ul * C[a].rho);
    N.mom_x = C[k].mom_x - lam * (ur * C[b].mom_x - ul * C[a].mom_x);
    N.mom_y = C[k].mom_y - lam * (ur * C[b].mom_y - ul * C[a].mom_y);
    N.rhoE = C[k].rhoE - lam * (ur * C[b].rhoE - ul * C[a].rhoE);
    out.rho_pi[k] = src.rho_pi[k] - lam * (ur * src.rho_pi[b] - ul * src.rho_pi[a]);
    out.rho_tau[k] = src.rho_tau[k] - lam * (ur * src.rho_tau[b] - ul * src.rho_tau[a]);
  }
  fill_surrogate_ghosts(out);
  return out;
}

AugmentedGrid convex_combine(const AugmentedGrid& P, const AugmentedGrid& A, double alpha) {
  if (P.grid.nx() != A.grid.nx() || P.grid.ny() != A.grid.ny() || P.grid.size() != A.grid.size())
    throw std::invalid_argument("convex_combine: grids differ in shape");
  AugmentedGrid out = P;
  for (int i = 0; i < P.grid.nx(); ++i) {
    const std::size_t k = P.grid.index(i, 0);
    out.grid.cells()[k] = alpha * P.grid.cells()[k] + (1.0 - alpha) * A.grid.cells()[k];
    out.rho_pi[k] = alpha * P.rho_pi[k] + (1.0 - alpha) * A.rho_pi[k];
    out.rho_tau[k] = alpha * P.rho_tau[k] + (1.0 - alpha) * A.rho_tau[k];
  }
  return out;
}

ConditionCo check_condition_co(const PrimitiveState& VL, const PrimitiveState& VR, const StarState& star,
                               const GasParams& gas) {
  const double a2 = star.a * star.a;
  const double du = VR.u - VL.u;
  const double shear = (1.0 - star.theta) * (1.0 - star.theta) * du * du / 8.0;
  auto side = [&](const PrimitiveState& V, double tau_star, double pi_k) {
    if (!(tau_star > 0.0)) return -std::numeric_limits<double>::infinity();
    // isentrope through V: p rho^-gamma constant
    const double p_eos = V.p * std::pow(V.rho * tau_star, -gas.gamma);
    const double d = p_eos - pi_k;
    return d * d / (2.0 * a2) - shear;
  };
  ConditionCo c;
  c.residual_L = side(VL, star.tau_star_L, star.pi_star_L());
  c.residual_R = side(VR, star.tau_star_R, star.pi_star_R());
  c.pass = c.residual_L >= 0.0 && c.residual_R >= 0.0;
  return c;
}

double StarInvariantResiduals::max() const { return std::max({energy_L, energy_R, volume_L, volume_R}); }

StarInvariantResiduals star_invariant_residuals(const PrimitiveState& VL, const PrimitiveState& VR,
                                                const StarState& star, const GasParams& gas) {
  const double a = star.a, a2 = a * a;
  auto energy = [&](const PrimitiveState& V, double e_star, double pi_k) {
    const double e = V.p / ((gas.gamma - 1.0) * V.rho);
    const double lhs = e_star - pi_k * pi_k / (2.0 * a2);
    const double rhs = e - V.p * V.p / (2.0 * a2);
    // magnitude of the terms that cancel in the star energy
    const double scale = e + V.p * V.p / (2.0 * a2) + 0.5 * (V.u * V.u + V.v * V.v + star.u_star * star.u_star) +
                         std::abs(pi_k * star.u_star) / a;
    return std::abs(lhs - rhs) / scale;
  };
  auto volume = [&](const PrimitiveState& V, double tau_star, double pi_k) {
    const double lhs = tau_star + pi_k / a2;
    const double rhs = 1.0 / V.rho + V.p / a2;
    return std::abs(lhs - rhs) / (1.0 / V.rho + V.p / a2 + std::abs(star.u_star - V.u) / a);
  };
  StarInvariantResiduals r;
  r.energy_L = energy(VL, star.e_star_L, star.pi_star_L());
  r.energy_R = energy(VR, star.e_star_R, star.pi_star_R());
  r.volume_L = volume(VL, star.tau_star_L, star.pi_star_L());
  r.volume_R = volume(VR, star.tau_star_R, star.pi_star_R());
  return r;
}

Matrix11 relaxation_matrix(const RelaxationState& W) {
  Matrix11 M{};
  const double rp = W.rho_p(), a = W.a, up = W.u_p();
  M[0][1] = 2.0 / rp;
  M[0][3] = 2.0;
  M[1][0] = 2.0 * a * a / rp;
  M[7][7] = 2.0 * up;
  M[8][8] = 2.0 * up;
  M[9][9] = 2.0 * up;
  M[10][0] = 2.0 * W.rho_a();
  M[10][10] = 2.0 * up;
  return M;
}

EigenReport eigenstructure_residual(const RelaxationState& W) {
  if (!(W.rho_p() > 0.0) || !(W.a > 0.0)) throw std::invalid_argument("eigenstructure: need rhoP > 0 and a > 0");
  const Matrix11 M = relaxation_matrix(W);
  const double rp = W.rho_p(), a = W.a, up = W.u_p(), ra = W.rho_a();
  using Vec = std::array<double, 11>;
  auto unit = [](int k) {
    Vec v{};
    v[k] = 1.0;
    return v;
  };
  std::vector<std::pair<double, Vec>> pairs;
  pairs.push_back({0.0, unit(2)});
  Vec r02{};
  r02[1] = -rp;
  r02[3] = 1.0;
  pairs.push_back({0.0, r02});
  for (int k : {4, 5, 6}) pairs.push_back({0.0, unit(k)});
  for (int k : {7, 8, 9, 10}) pairs.push_back({2.0 * up, unit(k)});
  EigenReport rep;
  for (double sgn : {1.0, -1.0}) {
    const double den = rp * up - sgn * a;
    if (std::abs(den) <= 1e-14 * (std::abs(rp * up) + a)) {
      ++rep.pairs_skipped;
      continue;
    }
    Vec r{};
    r[0] = 1.0;
    r[1] = sgn * a;
    r[10] = -ra * rp / den;
    pairs.push_back({sgn * 2.0 * a / rp, r});
  }
  for (const auto& [lam, r] : pairs) {
    double scale = 0.0, res = 0.0;
    for (int i = 0; i < 11; ++i) scale = std::max(scale, std::abs(lam * r[i]));
    for (int i = 0; i < 11; ++i) {
      double s = 0.0;
      for (int j = 0; j < 11; ++j) s += M[i][j] * r[j];
      res = std::max(res, std::abs(s - lam * r[i]));
    }
    // residual relative to the size of lambda r (absolute when lambda r = 0)
    rep.max_residual = std::max(rep.max_residual, res / std::max(scale, 1.0));
    ++rep.pairs_checked;
  }
  return rep;
}

}  // namespace fslp
