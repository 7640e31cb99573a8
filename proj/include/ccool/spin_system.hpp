#pragma once

#include <array>
#include <limits>

namespace ccool {

// Physical parameters of the three non-interacting spins and their bath.
// Energies are in natural units; time is measured in 1/energy units.
struct SpinSystem {
  std::array<double, 3> deltaE{1.0, 1.0, 1.0};  // level splittings, qubits 1..3
  double beta0 = 1.0;                            // bath inverse temperature
  double lambda = 0.01;                          // bath coupling strength

  // Throws PhysicsError naming the violated constraint.
  void validate() const;

  double splitting(int qubit) const { return deltaE.at(qubit - 1); }
  // Boltzmann factor exp(deltaE * beta0) = p0/p1 at equilibrium.
  double epsilon(int qubit) const;
  // Equilibrium population bias p0 - p1 = (eps - 1)/(eps + 1).
  double equilibriumBias(int qubit) const;
  // Population-bias relaxation time 1/(2 lambda).
  double t1() const { return 0.5 / lambda; }
};

// Bath contact time: a finite duration in natural units, or complete thermalization.
class ContactTime {
 public:
  static ContactTime natural(double t);
  static ContactTime inT1(double tInT1, const SpinSystem& system);
  static ContactTime infinite() { return ContactTime(std::numeric_limits<double>::infinity()); }

  bool isInfinite() const noexcept { return t_ == std::numeric_limits<double>::infinity(); }
  // +inf for an infinite contact.
  double natural() const noexcept { return t_; }
  double inT1(const SpinSystem& system) const noexcept { return t_ / system.t1(); }

 private:
  explicit ContactTime(double t) : t_(t) {}
  double t_;
};

}  // namespace ccool
