#include <gtest/gtest.h>

#include <cmath>

#include "fslp/cases.hpp"
#include "test_util.hpp"

using namespace fslp;

TEST(Registry, NamesAndErrors) {
  for (const auto& n : case_names()) EXPECT_EQ(make_case(n).name, n);
  EXPECT_EQ(make_case("two_rarefaction").name, "einfeldt");
  EXPECT_THROW(make_case("nope"), std::invalid_argument);
  EXPECT_THROW(make_case("sod", {{"mach", 0.1}}), std::invalid_argument);
  EXPECT_THROW(make_case("gresho", {{"mach", 0.0}}), std::invalid_argument);
  EXPECT_EQ(make_case("gresho", {{"mach", 0.1}}).param("mach"), 0.1);
  EXPECT_THROW(make_case("gresho").param("beta"), std::invalid_argument);
}

TEST(InitialConditions, AllAdmissible) {
  for (const auto& n : case_names()) {
    const CaseSpec s = make_case(n);
    for (int nx : {16, 40}) {
      const Grid g = init_case(s, {nx, 0});
      EXPECT_TRUE(admissibility_scan(g).ok()) << n << " " << nx;
      if (s.one_d())
        EXPECT_TRUE(g.is_1d()) << n;
      else
        EXPECT_NEAR(g.dx(), g.dy(), 1e-14) << n;
    }
  }
}

TEST(InitialConditions, SodQuarterPoint) {
  const CaseSpec s = make_case("sod");
  const Grid g = init_case(s, {100, 0});
  EXPECT_DOUBLE_EQ(g.x_center(24), 0.245);
  const PrimitiveState V = cons_to_prim(g.at(24, 0), s.gas);
  EXPECT_EQ(V, (PrimitiveState{1, 0, 0, 1}));
  EXPECT_EQ(cons_to_prim(g.at(75, 0), s.gas), (PrimitiveState{0.125, 0, 0, 0.1}));
  EXPECT_EQ(s.initial(0.25, 0.0), (PrimitiveState{1, 0, 0, 1}));
}

TEST(InitialConditions, EinfeldtStates) {
  const CaseSpec s = make_case("einfeldt");
  EXPECT_EQ(s.initial(0.2, 0.0), (PrimitiveState{1, -2, 0, 0.4}));
  EXPECT_EQ(s.initial(0.8, 0.0), (PrimitiveState{1, 2, 0, 0.4}));
}

TEST(InitialConditions, GreshoCentre) {
  const CaseSpec s = make_case("gresho", {{"mach", 0.1}});
  const PrimitiveState V = s.initial(0.5, 0.5);
  EXPECT_NEAR(V.p, 1.0 / (1.4 * 0.01), 1e-12);
  EXPECT_NEAR(V.p, 71.428571428571, 1e-10);
  EXPECT_EQ(V.u, 0.0);
  EXPECT_EQ(V.v, 0.0);
  // peak swirl speed 1 at r = 0.2
  const PrimitiveState W = s.initial(0.7, 0.5);
  EXPECT_NEAR(W.v, 1.0, 1e-14);
  EXPECT_NEAR(W.u, 0.0, 1e-14);
}

TEST(InitialConditions, VortexFarField) {
  const CaseSpec s = make_case("isentropic_vortex");
  const PrimitiveState V = s.initial(40.0, 10.0);
  EXPECT_NEAR(V.rho, 1.0, 1e-15);
  EXPECT_NEAR(V.u, 1.0, 1e-15);
  EXPECT_NEAR(V.v, 1.0, 1e-15);
  EXPECT_NEAR(V.p, 1.0, 1e-15);
  const PrimitiveState C = s.initial(10.0, 10.0);
  EXPECT_LT(C.rho, 1.0);
  EXPECT_NEAR(C.p, std::pow(C.rho, 1.4), 1e-15);
}

TEST(InitialConditions, RayleighTaylorIsHydrostaticBackground) {
  const CaseSpec s = make_case("rayleigh_taylor");
  const double g = s.param("g");
  EXPECT_EQ(s.initial(0.1, -0.3).rho, 1.0);
  EXPECT_EQ(s.initial(0.1, 0.3).rho, 2.0);
  // dp/dy = -rho g on each side of the interface
  for (double y : {-0.5, 0.4}) {
    const double h = 1e-3;
    const double dp = (s.initial(0.0, y + h).p - s.initial(0.0, y - h).p) / (2.0 * h);
    EXPECT_NEAR(dp, -s.initial(0.0, y).rho * g, 1e-10);
  }
}

TEST(Hydrostatic, BottomCellTakesSurfaceValues) {
  CaseSpec s = make_case("hydrostatic");
  s.x_max = 0.04;
  s.y_max = 0.04;
  const Grid g = build_hydrostatic_profile(s, {2, 2});
  const double R = 2.0 / 3.0;
  for (int i = 0; i < 2; ++i) {
    const PrimitiveState V = cons_to_prim(g.at(i, 0), s.gas);
    EXPECT_EQ(V.rho, 1.0);
    EXPECT_NEAR(V.p, R * (3.78565 - 1.2 * 0.01), 1e-15);
  }
  EXPECT_THROW(build_hydrostatic_profile(s, {1, 1}), std::invalid_argument);
}

TEST(Hydrostatic, TwoCellColumnByHand) {
  CaseSpec s = make_case("hydrostatic");
  s.x_max = 0.04;
  s.y_max = 0.04;
  const Grid g = build_hydrostatic_profile(s, {2, 2});
  ASSERT_EQ(g.ny(), 2);
  const double R = 2.0 / 3.0, d = 0.02;
  const double T1 = 3.78565 - 1.2 * 0.01, T2 = 3.78565 - 1.2 * 0.03;
  const double p1 = R * T1, rho1 = 1.0;
  // p2 - p1 = -(rho1 + p2/(R T2)) d / 2, linear in p2
  const double p2 = (p1 - 0.5 * rho1 * d) / (1.0 + 0.5 * d / (R * T2));
  const PrimitiveState V = cons_to_prim(g.at(0, 1), s.gas);
  EXPECT_NEAR(V.p, p2, 1e-15);
  EXPECT_NEAR(V.rho, p2 / (R * T2), 1e-15);
}

TEST(Hydrostatic, DiscreteRelationHoldsEverywhere) {
  const CaseSpec s = make_case("hydrostatic");
  const Grid g = init_case(s, {100, 50});
  double worst = 0.0;
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j + 1 < 50; ++j) {
      const PrimitiveState a = cons_to_prim(g.at(i, j), s.gas), b = cons_to_prim(g.at(i, j + 1), s.gas);
      const double res = b.p - a.p + 0.5 * (a.rho + b.rho) * (g.phi(i, j + 1) - g.phi(i, j));
      worst = std::max(worst, std::abs(res));
      EXPECT_EQ(a.u, 0.0);
    }
  EXPECT_LE(worst, 1e-14);
}

TEST(Hydrostatic, RejectsNonPositiveTemperature) {
  EXPECT_THROW(init_case(make_case("hydrostatic", {{"dTdy", -10.0}}), {20, 10}), AdmissibilityError);
  EXPECT_THROW(init_case(make_case("hydrostatic", {{"T0", -1.0}}), {20, 10}), std::invalid_argument);
}

TEST(GravityVortex, ContinuousProfiles) {
  for (double rb : {0.2, 0.4, 0.5}) {
    const double e = 1e-9;
    EXPECT_NEAR(gravity_vortex::potential(rb - e), gravity_vortex::potential(rb + e), 1e-7) << rb;
    EXPECT_NEAR(gravity_vortex::velocity(rb - e), gravity_vortex::velocity(rb + e), 1e-7) << rb;
    for (double m : {1e-1, 1e-2, 1e-3})
      EXPECT_LE(testutil::rel_diff(gravity_vortex::pressure(rb - e, m), gravity_vortex::pressure(rb + e, m)), 1e-7);
  }
}

TEST(GravityVortex, RadialMomentumBalance) {
  // dp/dr = rho u^2/r - rho dphi/dr, checked by central differences
  for (double m : {1e-1, 1e-2, 1e-3}) {
    for (double r : {0.05, 0.13, 0.27, 0.33, 0.45, 0.6}) {
      const double h = 1e-4 * r;
      const double dp = (gravity_vortex::pressure(r + h, m) - gravity_vortex::pressure(r - h, m)) / (2.0 * h);
      const double rho = std::exp(-m * m * gravity_vortex::potential(r));
      const double u = gravity_vortex::velocity(r);
      const double rhs = rho * u * u / r - rho * gravity_vortex::potential_derivative(r);
      const double scale = std::abs(rho * u * u / r) + std::abs(rho * gravity_vortex::potential_derivative(r)) + 1e-3;
      EXPECT_LE(std::abs(dp - rhs) / scale, 1e-5) << "Ma=" << m << " r=" << r;
    }
  }
  // potential derivative is consistent with the potential
  for (double r : {0.1, 0.3, 0.45}) {
    const double h = 1e-6;
    EXPECT_NEAR((gravity_vortex::potential(r + h) - gravity_vortex::potential(r - h)) / (2 * h),
                gravity_vortex::potential_derivative(r), 1e-5);
  }
}

// The first-order residual stays O(1) on the band of cells at the velocity
// kinks, so stationarity is measured in L1.
TEST(GravityVortex, OneStepResidualShrinksUnderRefinement) {
  auto residual = [](double ma, int n) {
    const CaseSpec s = make_case("gravity_vortex", {{"mach", ma}});
    Grid g = init_case(s, {n, n});
    const Grid g0 = g;
    Solver solver(s.gas, SchemeConfig::make(Scheme::FSLP));
    const double dt = solver.advance(g, 1.0).dt;
    std::array<double, 2> r{};  // density, momentum
    g.for_each_interior([&](int i, int j) {
      const ConservativeState d = g.at(i, j) - g0.at(i, j);
      r[0] += std::abs(d.rho);
      r[1] += std::hypot(d.mom_x, d.mom_y);
    });
    for (double& x : r) x *= g.dx() * g.dy() / dt;
    return r;
  };
  for (double ma : {1e-1, 1e-2}) {
    const auto r20 = residual(ma, 20), r40 = residual(ma, 40), r80 = residual(ma, 80);
    for (int k = 0; k < 2; ++k) {
      EXPECT_GT(r20[k] / r40[k], 1.7) << ma;
      EXPECT_GT(r40[k] / r80[k], 1.7) << ma;
    }
  }
  // the momentum residual does not grow as the Mach number drops
  EXPECT_NEAR(residual(1e-3, 40)[1], residual(1e-2, 40)[1], 0.05 * residual(1e-2, 40)[1]);
}

TEST(Diagnostics, FitSlopeAndNorms) {
  EXPECT_NEAR(fit_slope({10, 20, 40}, {1.0, 0.25, 0.0625}), -2.0, 1e-14);
  EXPECT_THROW(fit_slope({10}, {1.0}), std::invalid_argument);
  const CaseSpec s = make_case("uniform");
  const Grid g = init_case(s, {8, 8});
  std::vector<double> ref(64, 1.0);
  ref[3] = 1.5;
  const ErrorNorms n = density_error(g, ref);
  EXPECT_NEAR(n.linf, std::abs(g.at(3, 0).rho - 1.5), 1e-15);
  EXPECT_THROW(density_error(g, std::vector<double>(3)), std::invalid_argument);
}

TEST(Diagnostics, KineticEnergyOfGresho) {
  const CaseSpec s = make_case("gresho", {{"mach", 0.1}});
  const Grid g = init_case(s, {64, 64});
  // continuum value by radial quadrature
  double e = 0.0;
  const int n = 4000;
  for (int k = 0; k < n; ++k) {
    const double r = (k + 0.5) * 0.5 / n;
    const double u = s.initial(0.5 + r, 0.5).v;
    e += 0.5 * u * u * 2.0 * M_PI * r * (0.5 / n);
  }
  EXPECT_NEAR(kinetic_energy(g, s.gas), e, 0.01 * e);
}

TEST(RunCase, UniformConvergenceIsExact) {
  const CaseSpec s = make_case("uniform");
  const ConvergenceResult c = convergence_study(s, SchemeConfig::make(Scheme::FSLP), {8, 16}, 0.05);
  EXPECT_EQ(c.order_l1, 0.0);
  for (double e : c.l1) EXPECT_LE(e, 1e-14);
  EXPECT_THROW(convergence_study(s, SchemeConfig::make(Scheme::FSLP), {8}), std::invalid_argument);
}

TEST(RunCase, SodReportAndSnapshots) {
  const CaseSpec s = make_case("sod");
  RunOptions o;
  o.snapshot_times = {0.1, 0.05};
  long bad = 0;
  o.on_step = [&](const Grid& g, const StepReport&, double) { bad += !admissibility_scan(g).ok(); };
  const RunResult r = run_case(s, SchemeConfig::make(Scheme::FSLP), {100, 0}, o);
  EXPECT_EQ(bad, 0);
  EXPECT_DOUBLE_EQ(r.report.final_time, 0.2);
  ASSERT_EQ(r.snapshots.size(), 2u);
  EXPECT_DOUBLE_EQ(r.snapshots[0].time, 0.05);
  EXPECT_DOUBLE_EQ(r.snapshots[1].time, 0.1);
  EXPECT_GT(r.report.l1_density, 0.0);
  EXPECT_LT(r.report.l1_density, 0.05);
  EXPECT_GE(r.report.linf_density, r.report.l1_density);
  EXPECT_GT(r.report.min_density, 0.0);
  EXPECT_GT(r.report.step_count, 0);
}

TEST(RunCase, EinfeldtStaysPositive) {
  const CaseSpec s = make_case("einfeldt");
  for (const auto& c : {SchemeConfig::make(Scheme::FSLP, 1), SchemeConfig::make(Scheme::FSLP, 2),
                        SchemeConfig::make(Scheme::OSLP, 1)}) {
    double min_rho = 1e300, min_e = 1e300;
    RunOptions o;
    o.on_step = [&](const Grid& g, const StepReport&, double) {
      const AdmissibilityReport a = admissibility_scan(g);
      min_rho = std::min(min_rho, a.min_rho);
      min_e = std::min(min_e, a.min_rhoe);
    };
    run_case(s, c, {100, 0}, o);
    EXPECT_GT(min_rho, 0.0);
    EXPECT_GT(min_e, 0.0);
  }
}

TEST(RunCase, SolverErrorsCarryContext) {
  const CaseSpec s = make_case("sod");
  SchemeConfig c = SchemeConfig::make(Scheme::FSLP);
  c.c_cfl = 40.0;
  try {
    run_case(s, c, {100, 0});
    FAIL() << "expected a solver error";
  } catch (const SolverError& e) {
    const std::string m = e.what();
    EXPECT_NE(m.find("sod"), std::string::npos);
    EXPECT_NE(m.find("step 1"), std::string::npos);
  }
}
