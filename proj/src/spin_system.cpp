#include "ccool/spin_system.hpp"

#include "ccool/error.hpp"

#include <cmath>
#include <string>

namespace ccool {

void SpinSystem::validate() const {
  for (int q = 0; q < 3; ++q) {
    if (!(std::isfinite(deltaE[q]) && deltaE[q] > 0.0))
      throw PhysicsError("delta_e[" + std::to_string(q + 1) + "] must be finite and > 0");
  }
  if (!(std::isfinite(beta0) && beta0 >= 0.0)) throw PhysicsError("beta0 must be finite and >= 0");
  if (!(std::isfinite(lambda) && lambda > 0.0)) throw PhysicsError("lambda must be finite and > 0");
}

double SpinSystem::epsilon(int qubit) const { return std::exp(splitting(qubit) * beta0); }

double SpinSystem::equilibriumBias(int qubit) const {
  // tanh form stays accurate when eps overflows
  return std::tanh(0.5 * splitting(qubit) * beta0);
}

ContactTime ContactTime::natural(double t) {
  if (std::isnan(t) || t < 0.0) throw PhysicsError("contact time tau must be >= 0");
  return ContactTime(t);
}

ContactTime ContactTime::inT1(double tInT1, const SpinSystem& system) {
  if (std::isnan(tInT1) || tInT1 < 0.0) throw PhysicsError("contact time tau must be >= 0");
  return ContactTime(tInT1 * system.t1());
}

}  // namespace ccool
