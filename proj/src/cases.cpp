#include "fslp/cases.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fslp/riemann_exact.hpp"

namespace fslp {

namespace {

constexpr double kPi = std::numbers::pi;

CaseSpec shock_tube(const std::string& name, const std::string& desc, PrimitiveState L, PrimitiveState R,
                    double t_end) {
  CaseSpec c;
  c.name = name;
  c.description = desc;
  c.default_nx = 100;
  c.boundaries = BoundarySpec::all(BoundaryKind::Neumann);
  c.end_time = t_end;
  c.reference = ReferenceKind::ExactRiemann;
  c.riemann_left = L;
  c.riemann_right = R;
  c.initial = [L, R](double x, double) { return x < 0.5 ? L : R; };
  return c;
}

CaseSpec isentropic_vortex() {
  CaseSpec c;
  c.name = "isentropic_vortex";
  c.description = "isentropic vortex advected diagonally through a periodic box for one period";
  c.x_max = c.y_max = 20.0;
  c.default_nx = c.default_ny = 64;
  c.end_time = 20.0;
  c.params = {{"beta", 5.0}};
  return c;
}

CaseSpec gresho() {
  CaseSpec c;
  c.name = "gresho";
  c.description = "Gresho vortex parameterized by its Mach number";
  c.default_nx = c.default_ny = 128;
  c.end_time = 1e-2;
  c.params = {{"mach", 1e-3}};
  return c;
}

CaseSpec riemann2d() {
  CaseSpec c;
  c.name = "riemann2d";
  c.description = "four-quadrant 2D Riemann problem (configuration 3), corner at (0.8, 0.8)";
  c.default_nx = c.default_ny = 128;
  c.end_time = 0.8;
  c.boundaries = BoundarySpec::all(BoundaryKind::Neumann);
  c.reference = ReferenceKind::None;
  c.initial = [](double x, double y) {
    if (x < 0.8 && y < 0.8) return PrimitiveState{0.138, 1.206, 1.206, 0.029};
    if (x >= 0.8 && y < 0.8) return PrimitiveState{0.5323, 0.0, 1.206, 0.3};
    if (x < 0.8 && y >= 0.8) return PrimitiveState{0.5323, 1.206, 0.0, 0.3};
    return PrimitiveState{1.5, 0.0, 0.0, 1.5};
  };
  return c;
}

CaseSpec hydrostatic() {
  CaseSpec c;
  c.name = "hydrostatic";
  c.description = "isothermal-gradient atmosphere at rest in a discrete hydrostatic equilibrium";
  c.x_max = 2.0;
  c.default_nx = 100;
  c.default_ny = 50;
  c.gas = {5.0 / 3.0, 1.0};
  c.end_time = 100.0;
  c.boundaries = {BoundaryKind::Periodic, BoundaryKind::Periodic, BoundaryKind::Wall, BoundaryKind::Wall};
  c.params = {{"g", 1.0}, {"T0", 3.78565}, {"dTdy", -1.2}, {"rho0", 1.0}};
  c.hydrostatic = true;
  return c;
}

CaseSpec rayleigh_taylor() {
  CaseSpec c;
  c.name = "rayleigh_taylor";
  c.description = "single-mode Rayleigh-Taylor instability, heavy fluid on top";
  c.x_min = -0.25;
  c.x_max = 0.25;
  c.y_min = -0.75;
  c.y_max = 0.75;
  c.default_nx = 50;
  c.default_ny = 150;
  c.gas = {5.0 / 3.0, 1.0};
  c.end_time = 12.4;
  c.boundaries = {BoundaryKind::Periodic, BoundaryKind::Periodic, BoundaryKind::Wall, BoundaryKind::Wall};
  c.params = {{"g", 0.1}, {"C", 0.01}, {"p0", 2.5}};
  c.reference = ReferenceKind::None;
  return c;
}

CaseSpec gravity_vortex_case() {
  CaseSpec c;
  c.name = "gravity_vortex";
  c.description = "stationary vortex balanced by a radial potential and a hydrostatic background";
  c.default_nx = c.default_ny = 40;
  c.gas = {5.0 / 3.0, 1.0};
  c.end_time = 1.0;
  c.params = {{"mach", 1e-2}};
  return c;
}

CaseSpec uniform() {
  CaseSpec c;
  c.name = "uniform";
  c.description = "uniform moving state in a periodic box (exact solution at all times)";
  c.default_nx = c.default_ny = 32;
  c.end_time = 0.1;
  c.initial = [](double, double) { return PrimitiveState{1.0, 0.5, 0.25, 1.0}; };
  return c;
}

CaseSpec advection_bump() {
  CaseSpec c;
  c.name = "advection_bump";
  c.description = "smooth density bump advected once around a periodic 1D domain at constant u and p";
  c.default_nx = 100;
  c.end_time = 1.0;
  c.initial = [](double x, double) { return PrimitiveState{1.0 + 0.2 * std::sin(2.0 * kPi * x), 1.0, 0.0, 1.0}; };
  return c;
}

double gresho_utheta(double r) {
  if (r < 0.2) return 5.0 * r;
  if (r < 0.4) return 2.0 - 5.0 * r;
  return 0.0;
}

double gresho_p(double r, double p0) {
  if (r < 0.2) return p0 + 12.5 * r * r;
  if (r < 0.4) return p0 + 12.5 * r * r + 4.0 - 20.0 * r + 4.0 * std::log(5.0 * r);
  return p0 - 2.0 + 4.0 * std::log(2.0);
}

void finish(CaseSpec& c) {
  if (c.name == "isentropic_vortex") {
    const double beta = c.param("beta"), g = c.gas.gamma;
    c.initial = [beta, g](double x, double y) {
      const double dx = x - 10.0, dy = y - 10.0, r2 = dx * dx + dy * dy;
      const double rho = std::pow(1.0 - (g - 1.0) * beta * beta / (8.0 * g * kPi * kPi) * std::exp(1.0 - r2),
                                  1.0 / (g - 1.0));
      const double k = beta / (2.0 * kPi) * std::exp(0.5 * (1.0 - r2));
      return PrimitiveState{rho, 1.0 - k * dy, 1.0 + k * dx, std::pow(rho, g)};
    };
  } else if (c.name == "gresho") {
    const double ma = c.param("mach");
    if (!(ma > 0.0)) throw std::invalid_argument("gresho: mach must be positive");
    const double p0 = 1.0 / (c.gas.gamma * ma * ma);
    c.initial = [p0](double x, double y) {
      const double dx = x - 0.5, dy = y - 0.5, r = std::hypot(dx, dy);
      const double ut = gresho_utheta(r);
      const double u = r > 0.0 ? -ut * dy / r : 0.0, v = r > 0.0 ? ut * dx / r : 0.0;
      return PrimitiveState{1.0, u, v, gresho_p(r, p0)};
    };
  } else if (c.name == "hydrostatic") {
    const double g = c.param("g");
    c.potential.value = [g](double, double y) { return g * y; };
    c.potential.gradient = [g](double, double) { return std::array<double, 2>{0.0, g}; };
  } else if (c.name == "rayleigh_taylor") {
    const double g = c.param("g"), C = c.param("C"), p0 = c.param("p0");
    c.potential.value = [g](double, double y) { return g * y; };
    c.potential.gradient = [g](double, double) { return std::array<double, 2>{0.0, g}; };
    c.initial = [g, C, p0](double x, double y) {
      const double rho = y < 0.0 ? 1.0 : 2.0;
      const double v = 0.25 * C * (1.0 + std::cos(4.0 * kPi * x)) * (1.0 + std::cos(3.0 * kPi * y));
      return PrimitiveState{rho, 0.0, v, p0 - rho * g * y};
    };
  } else if (c.name == "gravity_vortex") {
    const double ma = c.param("mach");
    if (!(ma > 0.0 && ma < 1.0)) throw std::invalid_argument("gravity_vortex: mach must lie in (0, 1)");
    c.potential.value = [](double x, double y) { return gravity_vortex::potential(std::hypot(x - 0.5, y - 0.5)); };
    c.potential.gradient = [](double x, double y) {
      const double dx = x - 0.5, dy = y - 0.5, r = std::hypot(dx, dy);
      if (r == 0.0) return std::array<double, 2>{0.0, 0.0};
      const double d = gravity_vortex::potential_derivative(r) / r;
      return std::array<double, 2>{d * dx, d * dy};
    };
    c.initial = [ma](double x, double y) {
      const double dx = x - 0.5, dy = y - 0.5, r = std::hypot(dx, dy);
      const double rho = std::exp(-ma * ma * gravity_vortex::potential(r));
      const double ut = gravity_vortex::velocity(r);
      const double u = r > 0.0 ? -ut * dy / r : 0.0, v = r > 0.0 ? ut * dx / r : 0.0;
      return PrimitiveState{rho, u, v, gravity_vortex::pressure(r, ma)};
    };
  }
}

}  // namespace

double CaseSpec::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw std::invalid_argument("case '" + name + "' has no parameter '" + key + "'");
  return it->second;
}

std::vector<std::string> case_names() {
  return {"sod",     "einfeldt",        "isentropic_vortex", "gresho",  "riemann2d",
          "hydrostatic", "rayleigh_taylor", "gravity_vortex",    "uniform", "advection_bump"};
}

CaseSpec make_case(const std::string& name, const std::map<std::string, double>& overrides) {
  CaseSpec c;
  if (name == "sod")
    c = shock_tube("sod", "Sod shock tube", {1.0, 0.0, 0.0, 1.0}, {0.125, 0.0, 0.0, 0.1}, 0.2);
  else if (name == "einfeldt" || name == "two_rarefaction")
    c = shock_tube("einfeldt", "symmetric double rarefaction (near-vacuum)", {1.0, -2.0, 0.0, 0.4},
                   {1.0, 2.0, 0.0, 0.4}, 0.1);
  else if (name == "isentropic_vortex")
    c = isentropic_vortex();
  else if (name == "gresho")
    c = gresho();
  else if (name == "riemann2d")
    c = riemann2d();
  else if (name == "hydrostatic")
    c = hydrostatic();
  else if (name == "rayleigh_taylor")
    c = rayleigh_taylor();
  else if (name == "gravity_vortex")
    c = gravity_vortex_case();
  else if (name == "uniform")
    c = uniform();
  else if (name == "advection_bump")
    c = advection_bump();
  else
    throw std::invalid_argument("unknown case '" + name + "'");
  for (const auto& [k, v] : overrides) {
    if (!c.params.count(k)) throw std::invalid_argument("case '" + c.name + "' has no parameter '" + k + "'");
    c.params[k] = v;
  }
  finish(c);
  return c;
}

namespace {

Grid empty_grid(const CaseSpec& spec, Resolution res, int n_ghost) {
  if (res.nx <= 0) res.nx = spec.default_nx;
  const double lx = spec.x_max - spec.x_min, ly = spec.y_max - spec.y_min;
  int ny = res.ny;
  if (spec.one_d())
    ny = 1;
  else if (ny <= 0)
    ny = std::max(1, static_cast<int>(std::lround(res.nx * ly / lx)));
  if (res.nx < 2 || (!spec.one_d() && ny < 2)) throw std::invalid_argument("resolution too small for " + spec.name);
  const double dx = lx / res.nx;
  const double dy = spec.one_d() ? 1.0 : ly / ny;
  Grid g(res.nx, ny, spec.x_min, spec.one_d() ? 0.0 : spec.y_min, dx, dy, n_ghost);
  g.boundaries = spec.boundaries;
  if (spec.one_d()) g.boundaries.y_lo = g.boundaries.y_hi = BoundaryKind::Periodic;
  g.set_potential(spec.potential);
  return g;
}

}  // namespace

Grid init_case(const CaseSpec& spec, Resolution res, int n_ghost) {
  if (spec.hydrostatic) return build_hydrostatic_profile(spec, res, n_ghost);
  Grid g = empty_grid(spec, res, n_ghost);
  for (int j = 0; j < g.ny(); ++j)
    for (int i = 0; i < g.nx(); ++i) {
      const PrimitiveState V = spec.initial(g.x_center(i), g.y_center(j));
      if (!V.admissible()) throw AdmissibilityError("initial condition of " + spec.name + " is inadmissible", i, j);
      g.at(i, j) = prim_to_cons(V, spec.gas);
    }
  apply_boundaries(g, spec.gas);
  return g;
}

Grid build_hydrostatic_profile(const CaseSpec& spec, Resolution res, int n_ghost) {
  Grid g = empty_grid(spec, res, n_ghost);
  const double R = spec.gas.gas_constant();
  const double T0 = spec.param("T0"), dTdy = spec.param("dTdy"), rho0 = spec.param("rho0");
  if (!(T0 > 0.0) || !(rho0 > 0.0)) throw std::invalid_argument("hydrostatic: surface values must be positive");
  for (int i = 0; i < g.nx(); ++i) {
    auto T = [&](int j) { return T0 + dTdy * (g.y_center(j) - g.y0()); };
    double rho = rho0, p = R * rho0 * T(0);
    g.at(i, 0) = to_cons_fast({rho, 0.0, 0.0, p}, spec.gas.gamma);
    for (int j = 0; j + 1 < g.ny(); ++j) {
      // p_{j+1} - p_j = -((rho_j + rho_{j+1})/2)(phi_{j+1} - phi_j), rho = p/(R T)
      const double d = g.phi(i, j + 1) - g.phi(i, j);
      const double Tn = T(j + 1);
      if (!(Tn > 0.0)) throw AdmissibilityError("hydrostatic: temperature profile turns non-positive", i, j + 1);
      const double pn = (p - 0.5 * rho * d) / (1.0 + d / (2.0 * R * Tn));
      if (!(pn > 0.0)) throw AdmissibilityError("hydrostatic: recurrence produced a non-positive pressure", i, j + 1);
      p = pn;
      rho = pn / (R * Tn);
      g.at(i, j + 1) = to_cons_fast({rho, 0.0, 0.0, p}, spec.gas.gamma);
    }
  }
  apply_boundaries(g, spec.gas);
  return g;
}

namespace gravity_vortex {

namespace {
constexpr double kRc = 0.5;
constexpr double kUr = 0.4 * kPi;  // velocity scale divides u_theta (and u_theta^2 in p2)
}  // namespace

double potential(double r) {
  const double q = kRc / (kRc - 0.4);
  if (r <= 0.2) return 12.5 * r * r;
  if (r <= 0.4) return 0.5 - std::log(0.2) + std::log(r);
  if (r <= kRc) return std::log(2.0) - 0.5 * q + 2.5 * q * r - 1.25 / (kRc - 0.4) * r * r;
  return std::log(2.0) - 0.5 * q + 1.25 * kRc * q;
}

double potential_derivative(double r) {
  if (r <= 0.2) return 25.0 * r;
  if (r <= 0.4) return 1.0 / r;
  if (r <= kRc) return 2.5 * (kRc - r) / (kRc - 0.4);
  return 0.0;
}

double velocity(double r) {
  if (r <= 0.2) return 5.0 * r / kUr;
  if (r <= 0.4) return (2.0 - 5.0 * r) / kUr;
  return 0.0;
}

// p = rho/Ma^2 + p2 with dp2/dr = rho u_theta^2 / r integrated in closed form
double pressure(double r, double mach) {
  const double m = mach * mach;
  const double rho = std::exp(-m * potential(r));
  auto inner = [m](double s) { return -std::expm1(-12.5 * m * s * s) / m; };
  auto ring = [m](double s) {
    // C * int_{0.2}^{s} (4/t - 20 + 25 t) t^{-m} dt,  C = 0.2^m e^{-m/2}
    const double C = std::exp((-0.5 + std::log(0.2)) * m);
    const double a = -4.0 * std::pow(0.2, -m) * std::expm1(-m * std::log(s / 0.2)) / m;
    const double b = -20.0 * (std::pow(s, 1.0 - m) - std::pow(0.2, 1.0 - m)) / (1.0 - m);
    const double c = 25.0 * (std::pow(s, 2.0 - m) - std::pow(0.2, 2.0 - m)) / (2.0 - m);
    return C * (a + b + c);
  };
  double p2;
  if (r <= 0.2)
    p2 = inner(r);
  else if (r <= 0.4)
    p2 = inner(0.2) + ring(r);
  else
    p2 = inner(0.2) + ring(0.4);
  return rho / m + p2 / (kUr * kUr);
}

}  // namespace gravity_vortex

}  // namespace fslp
