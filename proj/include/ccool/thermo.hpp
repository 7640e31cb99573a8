#pragma once

#include "ccool/cycle_engine.hpp"

#include <array>
#include <optional>
#include <vector>

namespace ccool {

// Marginal of one spin: populations and the <0|rho|1> coherence.
struct SingleQubitState {
  double p0 = 0.0;
  double p1 = 0.0;
  Complex coherence{};
};

SingleQubitState reducedState(const LiouvilleVector& rho, int qubit);

// ln(p0/p1)/deltaE; +inf when p1 = 0, -inf when p0 = 0, 0 at equal populations.
double spinBeta(double p0, double p1, double deltaE);
// Throws InvalidArgument when |coherence| >= 1e-9; a spin temperature needs a diagonal marginal.
double spinBeta(const SingleQubitState& s, double deltaE);

// Tr{H rho} for the listed spins (1-based), H_mu = -(deltaE_mu/2) sigma_z(mu).
double energy(const LiouvilleVector& rho, const SpinSystem& system, const std::vector<int>& qubits);

// Heat drawn into qubit 1 over a gate stroke: Tr{H1 after} - Tr{H1 before}.
double heatQ(const LiouvilleVector& before, const LiouvilleVector& after, const SpinSystem& system);
// Energy change of qubits 2 and 3 over the same stroke.
double energyChange23(const LiouvilleVector& before, const LiouvilleVector& after, const SpinSystem& system);
// Total energy change Tr{H after} - Tr{H before}.
double workW(const LiouvilleVector& before, const LiouvilleVector& after, const SpinSystem& system);

// -Q/W; empty when |W| <= 1e-14.
std::optional<double> efficiency(double q, double w);

// Refrigerator bound T_cold/(T_hot - T_cold) = beta0/(betaLoad - beta0), with
// the bath at beta0 and the load (qubit 1 before the stroke) at betaLoad.
// +inf when the two temperatures coincide to 1e-12 relative; empty when either beta is not
// positive and finite.
std::optional<double> carnotCop(double beta0, double betaLoad);

struct CycleReport {
  int n = 0;
  std::array<double, 3> beta{};  // after the full cycle
  double Q = 0.0;
  double W = 0.0;
  double deltaE23 = 0.0;
  double heatBath = 0.0;  // total energy change over the bath stroke
  std::optional<double> eta;
  std::optional<double> carnotCop;
};

std::vector<CycleReport> cycleReports(const Trajectory& t, const SpinSystem& system);

struct EtaSurface {
  std::vector<double> deltaE2;
  std::vector<double> deltaE3;
  std::vector<std::optional<double>> eta1;  // row-major, deltaE2 outer

  const std::optional<double>& at(std::size_t i2, std::size_t i3) const { return eta1.at(i2 * deltaE3.size() + i3); }
};

// First-cycle efficiency over a (deltaE2, deltaE3) grid with deltaE1 and the
// bath taken from `base`; the contact is forced to complete thermalization.
EtaSurface etaSurface(const CycleConfig& base, const std::vector<double>& deltaE2, const std::vector<double>& deltaE3);

}  // namespace ccool
