#pragma once
/// Uniform structured 1D/2D mesh with inlined ghost layers.
///
/// Storage is one flat row-major buffer over (y, x) including ghosts.  A grid
/// with ny == 1 is one-dimensional and carries no ghost rows.

#include <array>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "fslp/eos.hpp"
#include "fslp/state.hpp"

namespace fslp {

enum class BoundaryKind { Periodic, Neumann, Wall };

struct BoundarySpec {
  BoundaryKind x_lo = BoundaryKind::Periodic;
  BoundaryKind x_hi = BoundaryKind::Periodic;
  BoundaryKind y_lo = BoundaryKind::Periodic;
  BoundaryKind y_hi = BoundaryKind::Periodic;

  static BoundarySpec all(BoundaryKind k) { return {k, k, k, k}; }
  // periodic sides must come in matched pairs
  void validate() const;
};

/// Closed-form gravitational potential.  An empty value means phi = 0.
struct Potential {
  std::function<double(double, double)> value;
  std::function<std::array<double, 2>(double, double)> gradient;

  bool flat() const { return !value; }
};

class Grid {
 public:
  Grid() = default;
  Grid(int nx, int ny, double x0, double y0, double dx, double dy, int n_ghost);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  double x0() const { return x0_; }
  double y0() const { return y0_; }
  int n_ghost() const { return ng_; }
  bool is_1d() const { return ny_ == 1; }
  int gx() const { return ng_; }
  int gy() const { return is_1d() ? 0 : ng_; }
  // row stride and row count of the flat buffer
  int stride() const { return nx_ + 2 * gx(); }
  int rows() const { return ny_ + 2 * gy(); }
  std::size_t size() const { return cells_.size(); }

  // flat index of cell (i, j); ghost cells have i < 0, i >= nx, etc.
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + gy()) * stride() + static_cast<std::size_t>(i + gx());
  }
  ConservativeState& at(int i, int j) { return cells_[index(i, j)]; }
  const ConservativeState& at(int i, int j) const { return cells_[index(i, j)]; }
  double phi(int i, int j) const { return phi_[index(i, j)]; }

  double x_center(int i) const { return x0_ + (i + 0.5) * dx_; }
  double y_center(int j) const { return is_1d() ? y0_ + 0.5 * dy_ : y0_ + (j + 0.5) * dy_; }

  std::vector<ConservativeState>& cells() { return cells_; }
  const std::vector<ConservativeState>& cells() const { return cells_; }
  const std::vector<double>& phi_data() const { return phi_; }
  // d(phi)/dx on the face right of each cell, d(phi)/dy on the face above it
  const std::vector<double>& dphi_x_face() const { return dphix_face_; }
  const std::vector<double>& dphi_y_face() const { return dphiy_face_; }
  // cell-centre gradient, used by the Hancock predictor
  const std::vector<double>& dphi_x_center() const { return dphix_center_; }
  const std::vector<double>& dphi_y_center() const { return dphiy_center_; }
  bool flat_potential() const { return flat_; }

  // Evaluates phi at every cell centre including ghosts.
  void set_potential(const Potential& pot);
  const Potential& potential() const { return pot_; }

  BoundarySpec boundaries;

  // Interior cells only, row-major.
  template <class F>
  void for_each_interior(F&& f) const {
    for (int j = 0; j < ny_; ++j)
      for (int i = 0; i < nx_; ++i) f(i, j);
  }

 private:
  int nx_ = 0, ny_ = 0, ng_ = 1;
  double x0_ = 0.0, y0_ = 0.0, dx_ = 1.0, dy_ = 1.0;
  std::vector<ConservativeState> cells_;
  std::vector<double> phi_;
  std::vector<double> dphix_face_, dphiy_face_, dphix_center_, dphiy_center_;
  Potential pot_;
  bool flat_ = true;
};

/// Fills ghost layers: x sides over interior rows first, then y sides over all
/// columns so that corners are populated.
void apply_boundaries(Grid& grid, const BoundarySpec& spec, const GasParams& gas);
inline void apply_boundaries(Grid& grid, const GasParams& gas) { apply_boundaries(grid, grid.boundaries, gas); }

struct AdmissibilityReport {
  double min_rho = 0.0;
  double min_rhoe = 0.0;
  std::vector<std::pair<int, int>> offenders;

  bool ok() const { return offenders.empty(); }
};

AdmissibilityReport admissibility_scan(const Grid& grid);

}  // namespace fslp
