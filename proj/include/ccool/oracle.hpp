#pragma once

// Brute-force model of the algorithm on the 8 diagonal populations. It shares
// only the gate permutation tables with the Liouville-space engine and uses
// closed-form scalar relaxation, so the two paths check each other.

#include "ccool/cycle_engine.hpp"
#include "ccool/gates.hpp"
#include "ccool/spin_system.hpp"

#include <array>
#include <optional>
#include <vector>

namespace ccool::oracle {

// Probabilities of |q1 q2 q3>, q1 most significant.
class PopulationVector {
 public:
  PopulationVector() = default;
  // Throws InvalidArgument unless entries are >= -1e-15 and sum to 1 within 1e-14.
  explicit PopulationVector(const std::array<double, 8>& p);

  double operator[](int s) const { return p_[s]; }
  const std::array<double, 8>& values() const noexcept { return p_; }

  // Marginal probability that `qubit` (1-based) is in |0>.
  double groundProbability(int qubit) const;

 private:
  friend PopulationVector applyGatePermutation(const PopulationVector&, const GateSpec&);
  friend PopulationVector relaxPopulations(const PopulationVector&, const ContactTime&, const SpinSystem&);
  std::array<double, 8> p_{};
};

PopulationVector thermalPopulations(const SpinSystem& system);
PopulationVector uniformPopulations();
PopulationVector pointPopulation(int s);

// p'(pi(s)) = p(s).
PopulationVector applyGatePermutation(const PopulationVector& p, const GateSpec& g);

// Qubits 2 and 3 relax independently, b -> e^{-2 lambda tau}(b - b_eq) + b_eq,
// through a 2x2 column-stochastic matrix each; qubit 1 is untouched.
PopulationVector relaxPopulations(const PopulationVector& p, const ContactTime& tau, const SpinSystem& system);

// The 2x2 column-stochastic matrix used by relaxPopulations for one spin,
// m[to][from] over {|0>, |1>}.
std::array<std::array<double, 2>, 2> relaxationMatrix(const ContactTime& tau, double deltaE, const SpinSystem& system);

struct OracleCycle {
  int n = 0;
  std::array<double, 3> beta{};   // after the full cycle
  std::array<double, 3> p0{};     // ground probabilities after the full cycle
  std::array<double, 3> betaMid{};  // after the gates, before the bath
  double Q = 0.0;
  double W = 0.0;
  std::optional<double> eta;
};

std::vector<OracleCycle> runOracle(const CycleConfig& cfg);

}  // namespace ccool::oracle
