#pragma once

#include "ccool/pauli_liouville.hpp"
#include "ccool/spin_system.hpp"

#include <Eigen/Dense>

#include <vector>

namespace ccool {

// Lindblad rates of one spin in contact with the bath.
struct ThermalRates {
  double wDown;  // |1> -> |0>, lambda / (1 + 1/eps)
  double wUp;    // |0> -> |1>, lambda / (1 + eps)
  double eps;
};

ThermalRates rates(double deltaE, const SpinSystem& system);

// Generator of the bath master equation for the listed qubits (1-based) on the
// 3-qubit register; identity elsewhere. The coherent part -i[H, rho] with
// H_mu = -(deltaE_mu/2) sigma_z(mu) is added for the listed qubits when
// includeHamiltonian is set. An empty list yields the zero generator.
SuperOp lindbladGenerator(const SpinSystem& system, const std::vector<int>& qubits, bool includeHamiltonian = false);

// 4x4 generator for a single spin with splitting deltaE.
SuperOp singleQubitGenerator(double deltaE, const SpinSystem& system, bool includeHamiltonian = false);

// Action of the single-spin channel on the (sigma_0, sigma_z) coefficients:
//   [c0']   [ 1                        0 ] [c0]
//   [cz'] = [ (1 - e^{-2 lambda tau}) b   e^{-2 lambda tau} ] [cz]
// with b = (eps - 1)/(eps + 1) the equilibrium bias.
Eigen::Matrix2d diagonalSectorMap(const ContactTime& tau, double deltaE, const SpinSystem& system);

// Closed-form exp(L tau) for one spin. Coherences decay as e^{-lambda tau}
// and precess at frequency deltaE when includeHamiltonian is set.
SuperOp singleQubitChannel(const ContactTime& tau, double deltaE, const SpinSystem& system, bool includeHamiltonian = false);

// 1 (x) T_2(tau) (x) T_3(tau): qubits 2 and 3 thermalize, qubit 1 is untouched.
SuperOp bathChannel23(const ContactTime& tau, const SpinSystem& system, bool includeHamiltonian = false);

// exp(generator * t) by scaling and squaring.
SuperOp channelFromGenerator(const SuperOp& generator, double t);

}  // namespace ccool
