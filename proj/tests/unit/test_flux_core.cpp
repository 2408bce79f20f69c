#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fslp/flux_core.hpp"
#include "test_util.hpp"

using namespace fslp;

namespace {
const GasParams kAir{1.4, 1.0};
const PrimitiveState kSodL{1.0, 0.0, 0.0, 1.0}, kSodR{0.125, 0.0, 0.0, 0.1};
const double kSodA = 1.1 * std::sqrt(1.4);  // 1.30154...
}  // namespace

TEST(Impedance, Examples) {
  EXPECT_NEAR(acoustic_impedance(kSodL, kSodR, kAir, 1.1), 1.30154, 1e-5);
  EXPECT_NEAR(acoustic_impedance(kSodL, kSodL, kAir, 1.1), kSodA, 1e-15);
  EXPECT_DOUBLE_EQ(detail::impedance(1.0, 2.0, 1.0, 1.0, 1.5), 3.0);
}

TEST(Theta, Examples) {
  EXPECT_EQ(low_mach_theta(kSodL, kSodR, kAir), 0.0);
  const double c = std::sqrt(1.4);
  EXPECT_EQ(low_mach_theta({1.0, 3.0 * c, 0.0, 1.0}, kSodL, kAir), 1.0);
  // Gresho ring states at Ma = 1e-3: |u| = 1, c = 1/Ma-ish
  const double p0 = 1.0 / (1.4 * 1e-6);
  const PrimitiveState g{1.0, 1.0, 0.0, p0 + 0.5};
  const double th = low_mach_theta(g, g, kAir);
  EXPECT_GT(th, 0.5e-3);
  EXPECT_LT(th, 2e-3);
}

TEST(StarStates, SodPair) {
  const StarState s = star_states(kSodL, kSodR, 0.0, 0.0, kSodA, 1.0, kAir);
  EXPECT_NEAR(s.u_star, 0.9 / (2.0 * kSodA), 1e-15);
  EXPECT_NEAR(s.u_star, 0.34575, 1e-5);
  EXPECT_DOUBLE_EQ(s.pi_star_theta, 0.55);
  EXPECT_TRUE(s.subcharacteristic_ok());
}

TEST(StarStates, IdenticalStatesAreConsistent) {
  const PrimitiveState V{0.7, 0.3, -0.2, 2.0};
  const StarState s = star_states(V, V, 0.4, 0.4, 2.0, 0.3, kAir);
  EXPECT_DOUBLE_EQ(s.u_star, 0.3);
  EXPECT_DOUBLE_EQ(s.pi_star_theta, 2.0);
  EXPECT_DOUBLE_EQ(s.m_jump, 0.0);
}

TEST(StarStates, HydrostaticPairIsAtRest) {
  const PrimitiveState L{1.0, 0.0, 0.0, 1.0}, R{1.0, 0.0, 0.0, 0.9};
  const StarState s = star_states(L, R, 0.0, 0.1, 1.5, 1.0, kAir);
  EXPECT_NEAR(s.u_star, 0.0, 1e-16);
  EXPECT_NEAR(s.pi_star_L(), 1.0, 1e-15);
  EXPECT_NEAR(s.pi_star_R(), 0.9, 1e-15);
  const InterfaceFlux f = fslp_flux(prim_to_cons(L, kAir), prim_to_cons(R, kAir), s, 0.1);
  EXPECT_NEAR(f.mass, 0.0, 1e-16);
}

TEST(StarStates, SubcharacteristicViolationIsReported) {
  // impedance far below rho*c
  const StarState s = star_states({1.0, 5.0, 0.0, 1.0}, {1.0, -5.0, 0.0, 1.0}, 0.0, 0.0, 0.1, 1.0, kAir);
  EXPECT_FALSE(s.subcharacteristic_ok());
}

TEST(FslpFlux, UniformStateGivesEulerFlux) {
  const PrimitiveState V{1.3, 0.4, -0.7, 2.1};
  const ConservativeState U = prim_to_cons(V, kAir);
  const FaceSolution f = solve_fslp_face(U, U, 0.0, 0.0, 0.1, kAir, 1.1);
  const ConservativeState F = euler_flux(U, kAir, Direction::X);
  EXPECT_NEAR(f.flux.mass, F.rho, 1e-15);
  EXPECT_NEAR(f.flux.mom_n, F.mom_x, 1e-14);
  EXPECT_NEAR(f.flux.mom_t, F.mom_y, 1e-15);
  EXPECT_NEAR(f.flux.energy, F.rhoE, 1e-14);
  EXPECT_EQ(f.flux.src_half_mom, 0.0);
  EXPECT_EQ(f.flux.src_half_energy, 0.0);
}

TEST(FslpFlux, SodPairUpwindsLeft) {
  const StarState s = star_states(kSodL, kSodR, 0.0, 0.0, kSodA, 1.0, kAir);
  const InterfaceFlux f = fslp_flux(prim_to_cons(kSodL, kAir), prim_to_cons(kSodR, kAir), s, 0.01);
  EXPECT_NEAR(f.mass, s.u_star * 1.0, 1e-16);
  EXPECT_NEAR(f.mass, 0.34575, 1e-5);
}

TEST(FslpFlux, MirrorPairHasNoMassFlux) {
  const PrimitiveState L{0.8, 0.6, 0.0, 1.2}, R{0.8, -0.6, 0.0, 1.2};
  const FaceSolution f =
      solve_fslp_face(prim_to_cons(L, kAir), prim_to_cons(R, kAir), 0.0, 0.0, 0.1, kAir, 1.1, 1.0);
  EXPECT_EQ(f.star.u_star, 0.0);
  EXPECT_EQ(f.flux.mass, 0.0);
  EXPECT_DOUBLE_EQ(f.flux.mom_n, f.star.pi_star_theta);
}

TEST(FslpFlux, GravitySourceHalves) {
  const PrimitiveState L{1.0, 0.2, 0.0, 1.0}, R{2.0, 0.2, 0.0, 1.0};
  const FaceSolution f = solve_fslp_face(prim_to_cons(L, kAir), prim_to_cons(R, kAir), 0.0, 0.3, 0.1, kAir, 1.1);
  EXPECT_NEAR(f.flux.src_half_mom, 0.5 * 1.5 * 0.3 / 0.1, 1e-14);
  EXPECT_NEAR(f.flux.src_half_energy, f.star.u_star * f.flux.src_half_mom, 1e-15);
}

TEST(Hllc, UniformStateGivesEulerFlux) {
  for (double u : {-3.0, -0.3, 0.0, 0.5, 4.0}) {
    const ConservativeState U = prim_to_cons({0.9, u, 0.25, 1.7}, kAir);
    const InterfaceFlux f = hllc_flux(U, U, kAir);
    const ConservativeState F = euler_flux(U, kAir, Direction::X);
    EXPECT_NEAR(f.mass, F.rho, 1e-14);
    EXPECT_NEAR(f.mom_n, F.mom_x, 1e-13);
    EXPECT_NEAR(f.mom_t, F.mom_y, 1e-14);
    EXPECT_NEAR(f.energy, F.rhoE, 1e-13);
  }
}

TEST(Hllc, SupersonicLeftMovingTakesRightFlux) {
  const ConservativeState UL = prim_to_cons({1.0, -5.0, 0.0, 1.0}, kAir);
  const ConservativeState UR = prim_to_cons({0.5, -6.0, 0.1, 0.8}, kAir);
  const InterfaceFlux f = hllc_flux(UL, UR, kAir);
  const ConservativeState F = euler_flux(UR, kAir, Direction::X);
  EXPECT_DOUBLE_EQ(f.mass, F.rho);
  EXPECT_DOUBLE_EQ(f.mom_n, F.mom_x);
  EXPECT_DOUBLE_EQ(f.energy, F.rhoE);
}

// The theta-modified states reproduce the flux: Pi*theta equals the pressure
// seen behind the left wave with the modified velocity.
TEST(FluxProperty, ThetaStarStatesConsistency) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> th(0.0, 1.0), dphi(-0.5, 0.5);
  for (int k = 0; k < 10000; ++k) {
    const PrimitiveState L = testutil::random_prim(rng, false), R = testutil::random_prim(rng, false);
    const double a = 1.1 * std::max(L.rho * sound_speed(1.4, L.rho, L.p), R.rho * sound_speed(1.4, R.rho, R.p));
    const double theta = th(rng);
    const StarState s = star_states(L, R, 0.0, dphi(rng), a, theta, kAir);
    const ThetaStarStates t = theta_star_states(s, L, R);
    const double scale = std::abs(L.p) + std::abs(R.p) + a * (std::abs(L.u) + std::abs(R.u)) + std::abs(s.m_jump);
    EXPECT_NEAR(s.pi_star_theta, L.p - a * (t.u_L - L.u) - 0.5 * s.m_jump, 1e-13 * scale);
    EXPECT_NEAR(s.pi_star_theta, R.p + a * (t.u_R - R.u) + 0.5 * s.m_jump, 1e-13 * scale);
    EXPECT_NEAR(0.5 * (t.u_L + t.u_R), s.u_star, 1e-14 * (1 + std::abs(s.u_star)));
  }
}

TEST(FluxProperty, ConsistencyForRandomStates) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 10000; ++k) {
    const ConservativeState U = prim_to_cons(testutil::random_prim(rng), kAir);
    const FaceSolution f = solve_fslp_face(U, U, 0.0, 0.0, 1.0, kAir, 1.1);
    const ConservativeState F = euler_flux(U, kAir, Direction::X);
    const double s = std::abs(F.rho) + std::abs(F.mom_x) + std::abs(F.rhoE) + std::abs(U.rhoE);
    EXPECT_NEAR(f.flux.mass, F.rho, 1e-14 * s);
    EXPECT_NEAR(f.flux.mom_n, F.mom_x, 1e-14 * s);
    EXPECT_NEAR(f.flux.mom_t, F.mom_y, 1e-14 * s);
    EXPECT_NEAR(f.flux.energy, F.rhoE, 1e-14 * s);
  }
}

TEST(FluxProperty, WellBalancedPairsHaveZeroMassFlux) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> d(0.1, 2.0), dp(-0.2, 0.2);
  for (int k = 0; k < 10000; ++k) {
    const double rL = d(rng), rR = d(rng), pL = 1.0 + d(rng), dphi = dp(rng);
    const double pR = pL - 0.5 * (rL + rR) * dphi;
    const PrimitiveState L{rL, 0.0, 0.0, pL}, R{rR, 0.0, 0.0, pR};
    const FaceSolution f = solve_fslp_face(prim_to_cons(L, kAir), prim_to_cons(R, kAir), 1.0, 1.0 + dphi, 0.1,
                                           kAir, 1.1);
    EXPECT_NEAR(f.star.u_star, 0.0, 1e-15);
    EXPECT_NEAR(f.flux.mass, 0.0, 1e-15);
  }
}

TEST(FluxProperty, PiStarThetaIsGalileanInvariant) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> w(-10.0, 10.0), th(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const PrimitiveState L = testutil::random_prim(rng, false), R = testutil::random_prim(rng, false);
    const double shift = w(rng), theta = th(rng), a = 3.0;
    const double p0 = detail::pi_star(L.u, R.u, L.p, R.p, a, theta);
    const double p1 = detail::pi_star(L.u + shift, R.u + shift, L.p, R.p, a, theta);
    EXPECT_NEAR(p0, p1, 1e-13 * (std::abs(p0) + a * (std::abs(L.u) + std::abs(R.u) + std::abs(shift))));
  }
}
