#include "fslp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fslp {

void BoundarySpec::validate() const {
  auto paired = [](BoundaryKind a, BoundaryKind b) {
    return (a == BoundaryKind::Periodic) == (b == BoundaryKind::Periodic);
  };
  if (!paired(x_lo, x_hi) || !paired(y_lo, y_hi))
    throw std::invalid_argument("periodic boundaries must be set on both opposite sides");
}

Grid::Grid(int nx, int ny, double x0, double y0, double dx, double dy, int n_ghost)
    : nx_(nx), ny_(ny), ng_(n_ghost), x0_(x0), y0_(y0), dx_(dx), dy_(dy) {
  if (nx < 1 || ny < 1) throw std::invalid_argument("grid needs at least one cell per direction");
  if (!(dx > 0.0) || !(dy > 0.0)) throw std::invalid_argument("cell sizes must be positive");
  if (n_ghost < 1) throw std::invalid_argument("at least one ghost layer is required");
  const std::size_t n = static_cast<std::size_t>(stride()) * rows();
  cells_.assign(n, ConservativeState{});
  phi_.assign(n, 0.0);
  dphix_face_.assign(n, 0.0);
  dphiy_face_.assign(n, 0.0);
  dphix_center_.assign(n, 0.0);
  dphiy_center_.assign(n, 0.0);
}

void Grid::set_potential(const Potential& pot) {
  pot_ = pot;
  flat_ = pot.flat();
  const int sx = stride(), sy = rows();
  for (int r = 0; r < sy; ++r) {
    for (int c = 0; c < sx; ++c) {
      const int i = c - gx(), j = r - gy();
      const std::size_t k = static_cast<std::size_t>(r) * sx + c;
      const double x = x_center(i), y = y_center(j);
      phi_[k] = flat_ ? 0.0 : pot.value(x, y);
      if (!std::isfinite(phi_[k])) throw std::invalid_argument("potential is not finite");
    }
  }
  for (int r = 0; r < sy; ++r) {
    for (int c = 0; c < sx; ++c) {
      const int i = c - gx(), j = r - gy();
      const std::size_t k = static_cast<std::size_t>(r) * sx + c;
      const double x = x_center(i), y = y_center(j);
      if (flat_) continue;
      if (pot.gradient) {
        dphix_face_[k] = pot.gradient(x + 0.5 * dx_, y)[0];
        dphiy_face_[k] = is_1d() ? 0.0 : pot.gradient(x, y + 0.5 * dy_)[1];
        const auto g = pot.gradient(x, y);
        dphix_center_[k] = g[0];
        dphiy_center_[k] = is_1d() ? 0.0 : g[1];
      } else {
        // one-sided at the outermost ghosts, never used by interior stencils
        const bool has_r = c + 1 < sx, has_l = c > 0;
        const bool has_u = r + 1 < sy, has_d = r > 0;
        dphix_face_[k] = has_r ? (phi_[k + 1] - phi_[k]) / dx_ : 0.0;
        dphiy_face_[k] = has_u ? (phi_[k + sx] - phi_[k]) / dy_ : 0.0;
        dphix_center_[k] = (has_r && has_l) ? (phi_[k + 1] - phi_[k - 1]) / (2.0 * dx_) : 0.0;
        dphiy_center_[k] = (has_u && has_d) ? (phi_[k + sx] - phi_[k - sx]) / (2.0 * dy_) : 0.0;
      }
    }
  }
}

namespace {

// Wall ghost: mirrored normal velocity, copied tangential velocity, linearly
// extrapolated temperature, density from the discrete hydrostatic relation
// with the inner neighbour so that u* vanishes on the wall face.  Steep
// temperature gradients are clamped to [T/2, 2T] of the wall cell; if the
// hydrostatic density still comes out non-positive the ghost is a plain mirror.
ConservativeState wall_ghost(const ConservativeState& mirror, const ConservativeState& inner, double phi_inner,
                             double phi_ghost, double t_wall, double t_ghost, Direction d, const GasParams& gas) {
  const PrimitiveState vm = cons_to_prim(mirror, gas);
  const PrimitiveState vi = cons_to_prim(inner, gas);
  const double R = gas.gas_constant();
  const double dphi = phi_inner - phi_ghost;
  t_ghost = std::clamp(t_ghost, 0.5 * t_wall, 2.0 * t_wall);
  const double denom = R * t_ghost - 0.5 * dphi;
  const double rho = (vi.p + 0.5 * vi.rho * dphi) / denom;
  PrimitiveState g = vm;
  if (denom > 0.0 && rho > 0.0) g = {rho, vm.u, vm.v, R * rho * t_ghost};
  if (d == Direction::X)
    g.u = -g.u;
  else
    g.v = -g.v;
  return to_cons_fast(g, gas.gamma);
}

double cell_temperature(const ConservativeState& U, const GasParams& gas) {
  const PrimitiveState v = cons_to_prim(U, gas);
  return v.p / (gas.gas_constant() * v.rho);
}

// Fills the ghosts of one line of cells.  `cell(k)` addresses the k-th cell
// along the line (k in [-ng, n + ng)), `phi(k)` its potential.
template <class Cell, class Phi>
void fill_line(Cell&& cell, Phi&& phi, int n, int ng, BoundaryKind lo, BoundaryKind hi, Direction d,
               const GasParams& gas) {
  for (int g = 1; g <= ng; ++g) {
    switch (lo) {
      case BoundaryKind::Periodic: cell(-g) = cell(n - g); break;
      case BoundaryKind::Neumann: cell(-g) = cell(0); break;
      case BoundaryKind::Wall: {
        const double t0 = cell_temperature(cell(0), gas);
        const double t1 = n > 1 ? cell_temperature(cell(1), gas) : t0;
        const int m = std::min(g - 1, n - 1);
        cell(-g) = wall_ghost(cell(m), cell(-g + 1), phi(-g + 1), phi(-g), t0, t0 - g * (t1 - t0), d, gas);
        break;
      }
    }
    switch (hi) {
      case BoundaryKind::Periodic: cell(n - 1 + g) = cell(g - 1); break;
      case BoundaryKind::Neumann: cell(n - 1 + g) = cell(n - 1); break;
      case BoundaryKind::Wall: {
        const double t0 = cell_temperature(cell(n - 1), gas);
        const double t1 = n > 1 ? cell_temperature(cell(n - 2), gas) : t0;
        const int m = std::max(n - g, 0);
        cell(n - 1 + g) =
            wall_ghost(cell(m), cell(n - 2 + g), phi(n - 2 + g), phi(n - 1 + g), t0, t0 - g * (t1 - t0),
                       d, gas);
        break;
      }
    }
  }
}

}  // namespace

void apply_boundaries(Grid& grid, const BoundarySpec& spec, const GasParams& gas) {
  spec.validate();
  const int nx = grid.nx(), ny = grid.ny();
  for (int j = 0; j < ny; ++j) {
    fill_line([&](int k) -> ConservativeState& { return grid.at(k, j); }, [&](int k) { return grid.phi(k, j); }, nx,
              grid.gx(), spec.x_lo, spec.x_hi, Direction::X, gas);
  }
  if (grid.is_1d()) return;
  for (int i = -grid.gx(); i < nx + grid.gx(); ++i) {
    fill_line([&](int k) -> ConservativeState& { return grid.at(i, k); }, [&](int k) { return grid.phi(i, k); }, ny,
              grid.gy(), spec.y_lo, spec.y_hi, Direction::Y, gas);
  }
}

AdmissibilityReport admissibility_scan(const Grid& grid) {
  AdmissibilityReport rep;
  rep.min_rho = std::numeric_limits<double>::infinity();
  rep.min_rhoe = std::numeric_limits<double>::infinity();
  grid.for_each_interior([&](int i, int j) {
    const ConservativeState& U = grid.at(i, j);
    const double rhoe = U.rho > 0.0 ? U.internal_energy_density() : -std::numeric_limits<double>::infinity();
    rep.min_rho = std::min(rep.min_rho, U.rho);
    rep.min_rhoe = std::min(rep.min_rhoe, rhoe);
    if (!(U.rho > 0.0) || !(rhoe > 0.0)) rep.offenders.emplace_back(i, j);
  });
  return rep;
}

}  // namespace fslp
