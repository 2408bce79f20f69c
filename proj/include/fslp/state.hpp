#pragma once
/// Cell states and the change of variables between them.

#include "fslp/eos.hpp"

namespace fslp {

enum class Direction { X, Y };

struct ConservativeState {
  double rho = 0.0;
  double mom_x = 0.0;
  double mom_y = 0.0;
  double rhoE = 0.0;

  ConservativeState& operator+=(const ConservativeState& o) {
    rho += o.rho; mom_x += o.mom_x; mom_y += o.mom_y; rhoE += o.rhoE;
    return *this;
  }
  ConservativeState& operator*=(double s) {
    rho *= s; mom_x *= s; mom_y *= s; rhoE *= s;
    return *this;
  }
  friend ConservativeState operator+(ConservativeState a, const ConservativeState& b) { return a += b; }
  friend ConservativeState operator-(const ConservativeState& a, const ConservativeState& b) {
    return {a.rho - b.rho, a.mom_x - b.mom_x, a.mom_y - b.mom_y, a.rhoE - b.rhoE};
  }
  friend ConservativeState operator*(double s, ConservativeState a) { return a *= s; }
  friend bool operator==(const ConservativeState&, const ConservativeState&) = default;

  double internal_energy_density() const { return rhoE - 0.5 * (mom_x * mom_x + mom_y * mom_y) / rho; }
  bool admissible() const { return rho > 0.0 && internal_energy_density() > 0.0; }
};

struct PrimitiveState {
  double rho = 0.0;
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;

  bool admissible() const { return rho > 0.0 && p > 0.0; }
  // velocity component normal to a face of the given direction
  double normal(Direction d) const { return d == Direction::X ? u : v; }
  double tangential(Direction d) const { return d == Direction::X ? v : u; }
  friend bool operator==(const PrimitiveState&, const PrimitiveState&) = default;
};

PrimitiveState cons_to_prim(const ConservativeState& U, const GasParams& gas);
ConservativeState prim_to_cons(const PrimitiveState& V, const GasParams& gas);

// Unchecked variants for kernels that validate admissibility separately.
inline PrimitiveState to_prim_fast(const ConservativeState& U, double gamma) {
  const double inv = 1.0 / U.rho;
  const double u = U.mom_x * inv, v = U.mom_y * inv;
  return {U.rho, u, v, (gamma - 1.0) * (U.rhoE - 0.5 * U.rho * (u * u + v * v))};
}
inline ConservativeState to_cons_fast(const PrimitiveState& V, double gamma) {
  return {V.rho, V.rho * V.u, V.rho * V.v, V.p / (gamma - 1.0) + 0.5 * V.rho * (V.u * V.u + V.v * V.v)};
}

/// Physical Euler flux F(U) (X) or G(U) (Y).
ConservativeState euler_flux(const ConservativeState& U, const GasParams& gas, Direction d);

/// Rotate so that mom_x carries the momentum normal to a face of direction d.
inline PrimitiveState to_face_frame(const PrimitiveState& V, Direction d) {
  return d == Direction::X ? V : PrimitiveState{V.rho, V.v, V.u, V.p};
}
inline ConservativeState to_face_frame(const ConservativeState& U, Direction d) {
  return d == Direction::X ? U : ConservativeState{U.rho, U.mom_y, U.mom_x, U.rhoE};
}

}  // namespace fslp
