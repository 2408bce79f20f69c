#pragma once
// Shared helpers for the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <random>

#include "fslp/cases.hpp"
#include "fslp/grid.hpp"

namespace fslp::testutil {

inline PrimitiveState random_prim(std::mt19937_64& rng, bool two_d = true) {
  std::uniform_real_distribution<double> lr(-2.0, 1.0), vel(-2.0, 2.0);
  return {std::pow(10.0, lr(rng)), vel(rng), two_d ? vel(rng) : 0.0, std::pow(10.0, lr(rng))};
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

// Periodic 1D grid of random admissible cells.
inline Grid random_grid_1d(std::mt19937_64& rng, int n, const GasParams& gas, int ng = 2) {
  Grid g(n, 1, 0.0, 0.0, 1.0 / n, 1.0, ng);
  for (int i = 0; i < n; ++i) g.at(i, 0) = prim_to_cons(random_prim(rng, false), gas);
  apply_boundaries(g, gas);
  return g;
}

inline Grid random_grid_2d(std::mt19937_64& rng, int nx, int ny, const GasParams& gas, int ng = 2) {
  Grid g(nx, ny, 0.0, 0.0, 1.0 / nx, 1.0 / ny, ng);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) g.at(i, j) = prim_to_cons(random_prim(rng), gas);
  apply_boundaries(g, gas);
  return g;
}

inline double max_abs_diff(const Grid& a, const Grid& b) {
  double m = 0.0;
  a.for_each_interior([&](int i, int j) {
    const ConservativeState &x = a.at(i, j), &y = b.at(i, j);
    m = std::max({m, std::abs(x.rho - y.rho), std::abs(x.mom_x - y.mom_x), std::abs(x.mom_y - y.mom_y),
                  std::abs(x.rhoE - y.rhoE)});
  });
  return m;
}

inline double max_abs(const Grid& a) {
  double m = 0.0;
  a.for_each_interior([&](int i, int j) {
    const ConservativeState& x = a.at(i, j);
    m = std::max({m, std::abs(x.rho), std::abs(x.mom_x), std::abs(x.mom_y), std::abs(x.rhoE)});
  });
  return m;
}

}  // namespace fslp::testutil
