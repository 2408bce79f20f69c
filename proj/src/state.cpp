#include "fslp/state.hpp"

namespace fslp {

PrimitiveState cons_to_prim(const ConservativeState& U, const GasParams& gas) {
  if (!(U.rho > 0.0)) throw AdmissibilityError("cons_to_prim: non-positive density");
  const PrimitiveState V = to_prim_fast(U, gas.gamma);
  if (!(V.p > 0.0)) throw AdmissibilityError("cons_to_prim: non-positive internal energy");
  return V;
}

ConservativeState prim_to_cons(const PrimitiveState& V, const GasParams& gas) {
  if (!V.admissible()) throw AdmissibilityError("prim_to_cons: non-positive density or pressure");
  return to_cons_fast(V, gas.gamma);
}

ConservativeState euler_flux(const ConservativeState& U, const GasParams& gas, Direction d) {
  const PrimitiveState V = cons_to_prim(U, gas);
  const double un = V.normal(d);
  ConservativeState F{U.rho * un, U.mom_x * un, U.mom_y * un, (U.rhoE + V.p) * un};
  if (d == Direction::X)
    F.mom_x += V.p;
  else
    F.mom_y += V.p;
  return F;
}

}  // namespace fslp
