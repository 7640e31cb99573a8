#pragma once

#include "ccool/gates.hpp"
#include "ccool/pauli_liouville.hpp"
#include "ccool/spin_system.hpp"

#include <optional>
#include <vector>

namespace ccool {

enum class Variant {
  Cyclic,  // SWAP13, CNOT12, CSWAP then bath
  Boykin,  // CNOT12, CSWAP then bath
};

struct CycleConfig {
  SpinSystem system;
  ContactTime tau = ContactTime::infinite();
  int nCycles = 300;
  Variant variant = Variant::Cyclic;
  CswapPolarity polarity = CswapPolarity::Excited;
  bool includeHamiltonian = false;

  // Throws PhysicsError.
  void validate() const;
  GateSpec gate() const;
};

// Product of single-spin equilibrium states at beta0.
LiouvilleVector thermalState(const SpinSystem& system);

// Cycle n (1-based) takes preGate(n) through the gates to postGate(n), then the
// bath takes it to postBath(n) = preGate(n + 1).
struct Trajectory {
  std::vector<LiouvilleVector> states;     // states[n], n = 0..nCycles, after n full cycles
  std::vector<LiouvilleVector> midStates;  // midStates[n - 1] = U states[n - 1]

  int cycles() const { return static_cast<int>(midStates.size()); }
  const LiouvilleVector& preGate(int n) const { return states.at(n - 1); }
  const LiouvilleVector& postGate(int n) const { return midStates.at(n - 1); }
  const LiouvilleVector& postBath(int n) const { return states.at(n); }
};

// B = T23(tau) U.
SuperOp cycleSuperop(const CycleConfig& cfg);

// Repeated application of the gate and bath maps; rho0 defaults to thermalState.
Trajectory iterate(const CycleConfig& cfg, const std::optional<LiouvilleVector>& rho0 = std::nullopt);

struct FixedPoint {
  std::optional<LiouvilleVector> state;  // empty when the fixed space is degenerate
  int fixedDimension = 0;                // dimension of ker(B - I)
  double residual = 0.0;                 // ||B v - v||_2, for a unique solution

  bool degenerate() const { return fixedDimension > 1; }
};

// Unit-trace solution of (B - I) v = 0. When ker(B - I) has dimension > 1 the
// result carries the dimension and no state.
FixedPoint fixedPoint(const SuperOp& b);

// (dE2 + dE3)/dE1 * beta0, the complete-thermalization limit of beta_1.
double asymptoticBeta(const SpinSystem& system);

struct SpectralReport {
  std::vector<Complex> eigenvalues;       // diagonal-sector spectrum, decreasing modulus
  Eigen::VectorXcd leadingEigenvector;    // 8 components over diagonalSectorIndices()
  double subdominantModulus = 0.0;
  double convergenceScale = 0.0;          // -1/ln|lambda_2|, in cycles
  double eigenvectorCondition = 0.0;
  bool nonDiagonalizable = false;         // eigenvectorCondition > 1e8
};

SpectralReport spectralReport(const SuperOp& b);

}  // namespace ccool
