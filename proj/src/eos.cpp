#include "fslp/eos.hpp"

#include <cmath>

namespace fslp {

void GasParams::validate() const {
  if (!(gamma > 1.0)) throw std::invalid_argument("gamma must exceed 1");
  if (!(cv > 0.0)) throw std::invalid_argument("cv must be positive");
}

double pressure(double gamma, double rho, double e) {
  if (!(rho > 0.0) || !(e > 0.0)) throw AdmissibilityError("pressure: non-positive rho or e");
  return (gamma - 1.0) * rho * e;
}

double sound_speed(double gamma, double rho, double p) {
  if (!(rho > 0.0) || !(p > 0.0)) throw AdmissibilityError("sound_speed: non-positive rho or p");
  return std::sqrt(gamma * p / rho);
}

double specific_entropy(const GasParams& gas, double rho, double e) {
  const double p = pressure(gas.gamma, rho, e);
  return gas.cv * (std::log(p) - gas.gamma * std::log(rho));
}

double temperature(double cv, double e) { return e / cv; }

}  // namespace fslp
