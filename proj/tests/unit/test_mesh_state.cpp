#include <gtest/gtest.h>

#include <random>

#include "fslp/grid.hpp"
#include "fslp/state.hpp"
#include "test_util.hpp"

using namespace fslp;

namespace {
const GasParams kAir{1.4, 1.0};
}

TEST(State, ConsToPrimExamples) {
  const PrimitiveState r = cons_to_prim({1, 0, 0, 2.5}, kAir);
  EXPECT_EQ(r.rho, 1.0);
  EXPECT_EQ(r.u, 0.0);
  EXPECT_NEAR(r.p, 1.0, 1e-15);
  const PrimitiveState s = cons_to_prim({0.125, 0, 0, 0.25}, kAir);
  EXPECT_DOUBLE_EQ(s.rho, 0.125);
  EXPECT_NEAR(s.p, 0.1, 1e-16);
  const PrimitiveState m = cons_to_prim({1, 1, 0, 3.0}, kAir);
  EXPECT_DOUBLE_EQ(m.u, 1.0);
  EXPECT_NEAR(m.p, 1.0, 1e-15);
}

TEST(State, PrimToConsExamples) {
  const ConservativeState u = prim_to_cons({1, 0, 0, 1}, kAir);
  EXPECT_EQ(u.rho, 1.0);
  EXPECT_EQ(u.mom_x, 0.0);
  EXPECT_NEAR(u.rhoE, 2.5, 1e-15);
  const ConservativeState e = prim_to_cons({1, -2, 0, 0.4}, kAir);
  EXPECT_DOUBLE_EQ(e.mom_x, -2.0);
  EXPECT_NEAR(e.rhoE, 3.0, 1e-15);
}

TEST(State, InadmissibleConversionThrows) {
  EXPECT_THROW(cons_to_prim({0.0, 0, 0, 1}, kAir), AdmissibilityError);
  EXPECT_THROW(cons_to_prim({1.0, 2, 0, 1}, kAir), AdmissibilityError);
  EXPECT_THROW(prim_to_cons({1.0, 0, 0, -1}, kAir), AdmissibilityError);
}

TEST(StateProperty, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10000; ++k) {
    const PrimitiveState V = testutil::random_prim(rng);
    const PrimitiveState W = cons_to_prim(prim_to_cons(V, kAir), kAir);
    EXPECT_LE(testutil::rel_diff(V.rho, W.rho), 1e-14);
    EXPECT_NEAR(V.u, W.u, 1e-14 * (1 + std::abs(V.u)));
    EXPECT_NEAR(V.v, W.v, 1e-14 * (1 + std::abs(V.v)));
    // p is recovered by cancellation against the kinetic energy
    const double scale = V.p + 0.5 * V.rho * (V.u * V.u + V.v * V.v);
    EXPECT_LE(std::abs(V.p - W.p) / scale, 1e-14);
  }
}

TEST(State, EulerFluxDirections) {
  const ConservativeState U = prim_to_cons({2.0, 0.5, -0.25, 1.5}, kAir);
  const ConservativeState F = euler_flux(U, kAir, Direction::X), G = euler_flux(U, kAir, Direction::Y);
  EXPECT_DOUBLE_EQ(F.rho, 1.0);
  EXPECT_NEAR(F.mom_x, 2.0 * 0.25 + 1.5, 1e-15);
  EXPECT_DOUBLE_EQ(G.rho, -0.5);
  EXPECT_NEAR(G.mom_y, 2.0 * 0.0625 + 1.5, 1e-15);
  EXPECT_NEAR(F.rhoE, 0.5 * (U.rhoE + 1.5), 1e-15);
}

namespace {
Grid four_cells(BoundaryKind k) {
  Grid g(4, 1, 0.0, 0.0, 0.25, 1.0, 1);
  for (int i = 0; i < 4; ++i) g.at(i, 0) = prim_to_cons({1.0 + i, 0.1 * i, 0.0, 1.0 + 0.5 * i}, kAir);
  g.boundaries = BoundarySpec::all(k);
  apply_boundaries(g, kAir);
  return g;
}
}  // namespace

TEST(Boundaries, PeriodicCopiesOppositeCells) {
  const Grid g = four_cells(BoundaryKind::Periodic);
  EXPECT_EQ(g.at(-1, 0), g.at(3, 0));
  EXPECT_EQ(g.at(4, 0), g.at(0, 0));
}

TEST(Boundaries, NeumannCopiesAdjacentCell) {
  const Grid g = four_cells(BoundaryKind::Neumann);
  EXPECT_EQ(g.at(-1, 0), g.at(0, 0));
  EXPECT_EQ(g.at(4, 0), g.at(3, 0));
}

TEST(Boundaries, WallMirrorsNormalVelocity) {
  Grid g(4, 4, 0.0, 0.0, 0.25, 0.25, 2);
  g.boundaries = BoundarySpec::all(BoundaryKind::Wall);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) g.at(i, j) = prim_to_cons({1.0, 0.3, 0.3, 1.0}, kAir);
  apply_boundaries(g, kAir);
  const PrimitiveState L = cons_to_prim(g.at(-1, 1), kAir), B = cons_to_prim(g.at(1, -1), kAir);
  EXPECT_DOUBLE_EQ(L.u, -0.3);
  EXPECT_DOUBLE_EQ(L.v, 0.3);
  EXPECT_DOUBLE_EQ(B.v, -0.3);
  EXPECT_DOUBLE_EQ(B.u, 0.3);
  EXPECT_NEAR(L.rho, 1.0, 1e-15);
  EXPECT_NEAR(L.p, 1.0, 1e-14);
  EXPECT_NEAR(B.rho, 1.0, 1e-15);
}

TEST(Boundaries, WallExtrapolatesTemperatureLinearly) {
  const GasParams gas{5.0 / 3.0, 1.0};
  Grid g(1, 4, 0.0, 0.0, 1.0, 0.25, 2);
  g.boundaries = {BoundaryKind::Periodic, BoundaryKind::Periodic, BoundaryKind::Wall, BoundaryKind::Wall};
  // T = 2 + j/4 at rho = 1
  for (int j = 0; j < 4; ++j) g.at(0, j) = prim_to_cons({1.0, 0.0, 0.0, gas.gas_constant() * (2.0 + 0.25 * j)}, gas);
  apply_boundaries(g, gas);
  auto T = [&](int j) {
    const PrimitiveState V = cons_to_prim(g.at(0, j), gas);
    return V.p / (gas.gas_constant() * V.rho);
  };
  EXPECT_NEAR(T(-1), 1.75, 1e-14);
  EXPECT_NEAR(T(-2), 1.5, 1e-14);
  EXPECT_NEAR(T(4), 3.0, 1e-14);
  EXPECT_NEAR(T(5), 3.25, 1e-14);
}

TEST(Boundaries, Idempotent) {
  std::mt19937_64 rng(5);
  Grid g = testutil::random_grid_2d(rng, 6, 5, kAir);
  g.boundaries = {BoundaryKind::Neumann, BoundaryKind::Wall, BoundaryKind::Wall, BoundaryKind::Neumann};
  apply_boundaries(g, kAir);
  const std::vector<ConservativeState> once = g.cells();
  apply_boundaries(g, kAir);
  EXPECT_EQ(once, g.cells());
}

TEST(Boundaries, SteepWallGradientStaysAdmissible) {
  Grid g(4, 1, 0.0, 0.0, 0.25, 1.0, 2);
  g.boundaries = BoundarySpec::all(BoundaryKind::Wall);
  // T jumps by a factor 100 next to each wall
  g.at(0, 0) = prim_to_cons({1, 0.3, 0, 1}, kAir);
  g.at(1, 0) = prim_to_cons({0.01, 0, 0, 1}, kAir);
  g.at(2, 0) = prim_to_cons({0.01, 0, 0, 1}, kAir);
  g.at(3, 0) = prim_to_cons({1, -0.3, 0, 1}, kAir);
  apply_boundaries(g, kAir);
  for (int i : {-2, -1, 4, 5}) EXPECT_TRUE(g.at(i, 0).admissible()) << i;
  EXPECT_NEAR(cons_to_prim(g.at(-1, 0), kAir).u, -0.3, 1e-15);
}

TEST(Boundaries, UnpairedPeriodicRejected) {
  BoundarySpec s;
  s.x_hi = BoundaryKind::Neumann;
  EXPECT_THROW(s.validate(), std::invalid_argument);
}

TEST(Admissibility, ScanReportsOffenders) {
  Grid g(5, 1, 0.0, 0.0, 0.2, 1.0, 1);
  for (int i = 0; i < 5; ++i) g.at(i, 0) = prim_to_cons({1, 0, 0, 1}, kAir);
  EXPECT_TRUE(admissibility_scan(g).ok());
  g.at(2, 0).rhoE = -1.0;  // e = -1
  const AdmissibilityReport r = admissibility_scan(g);
  ASSERT_EQ(r.offenders.size(), 1u);
  EXPECT_EQ(r.offenders[0].first, 2);
  EXPECT_DOUBLE_EQ(r.min_rhoe, -1.0);
}

TEST(Grid, PotentialDifferencesAndGradients) {
  Grid g(4, 3, 0.0, 0.0, 0.5, 0.25, 2);
  Potential p;
  p.value = [](double x, double y) { return 2.0 * x + 3.0 * y; };
  g.set_potential(p);  // no analytic gradient -> differences
  EXPECT_NEAR(g.phi(1, 1) - g.phi(0, 1), 1.0, 1e-15);
  EXPECT_NEAR(g.dphi_x_face()[g.index(0, 1)], 2.0, 1e-14);
  EXPECT_NEAR(g.dphi_y_face()[g.index(0, 1)], 3.0, 1e-14);
  EXPECT_NEAR(g.dphi_y_center()[g.index(2, 2)], 3.0, 1e-14);
  EXPECT_FALSE(g.flat_potential());
}
