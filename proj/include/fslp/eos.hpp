#pragma once
/// Perfect-gas closure: p = (gamma-1) rho e, e = cv T.

#include <stdexcept>
#include <string>

namespace fslp {

struct GasParams {
  double gamma = 1.4;
  double cv = 1.0;

  // throws std::invalid_argument unless gamma > 1 and cv > 0
  void validate() const;
  // p = R rho T with R = (gamma-1) cv
  double gas_constant() const { return (gamma - 1.0) * cv; }
};

/// Raised whenever a state leaves the admissible set (rho > 0, e > 0).
class AdmissibilityError : public std::runtime_error {
 public:
  explicit AdmissibilityError(const std::string& what) : std::runtime_error(what) {}
  AdmissibilityError(const std::string& what, int i, int j)
      : std::runtime_error(what + " at cell (" + std::to_string(i) + ", " + std::to_string(j) + ")"),
        i_(i), j_(j) {}
  int cell_i() const { return i_; }
  int cell_j() const { return j_; }

 private:
  int i_ = -1;
  int j_ = -1;
};

double pressure(double gamma, double rho, double e);
double sound_speed(double gamma, double rho, double p);
// s = cv ln(p rho^-gamma); the additive constant is fixed to zero
double specific_entropy(const GasParams& gas, double rho, double e);
double temperature(double cv, double e);

}  // namespace fslp
