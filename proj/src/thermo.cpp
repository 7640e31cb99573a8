#include "ccool/thermo.hpp"

#include "ccool/error.hpp"

#include <cmath>
#include <limits>

namespace ccool {
namespace {

constexpr double kCoherenceTol = 1e-9;
constexpr double kZeroWork = 1e-14;

int singleIndex(int qubit, Pauli p) {
  const int shift = 2 * (3 - qubit);
  return static_cast<int>(p) << shift;
}

Vector64 hamiltonianCoeffs(const SpinSystem& system, const std::vector<int>& qubits) {
  Vector64 h = Vector64::Zero();
  for (int q : qubits) {
    if (q < 1 || q > 3) throw InvalidArgument("qubit index must be 1, 2 or 3");
    // -(dE/2) sigma_z (x) 1 (x) 1 = -(dE/2) 2 sqrt2 sigma_hat_z00
    h(singleIndex(q, Pauli::Z)) -= std::sqrt(2.0) * system.splitting(q);
  }
  return h;
}

}  // namespace

SingleQubitState reducedState(const LiouvilleVector& rho, int qubit) {
  if (qubit < 1 || qubit > 3) throw InvalidArgument("qubit index must be 1, 2 or 3");
  // tracing out two normalized identities contributes (sqrt2)^2; the
  // remaining sigma_hat carries 1/sqrt2, leaving rho_q = sqrt2 sum_i c_i sigma_i
  const double r2 = std::sqrt(2.0);
  const double c0 = rho[0].real();
  const double cz = rho[singleIndex(qubit, Pauli::Z)].real();
  const Complex cx = rho[singleIndex(qubit, Pauli::X)];
  const Complex cy = rho[singleIndex(qubit, Pauli::Y)];
  SingleQubitState s;
  s.p0 = r2 * (c0 + cz);
  s.p1 = r2 * (c0 - cz);
  s.coherence = r2 * (cx - Complex(0.0, 1.0) * cy);
  return s;
}

double spinBeta(double p0, double p1, double deltaE) {
  if (p0 == p1) return 0.0;
  if (p1 <= 0.0) return std::numeric_limits<double>::infinity();
  if (p0 <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(p0 / p1) / deltaE;
}

double spinBeta(const SingleQubitState& s, double deltaE) {
  if (std::abs(s.coherence) >= kCoherenceTol)
    throw InvalidArgument("spin temperature requested for a marginal with coherence " + std::to_string(std::abs(s.coherence)));
  return spinBeta(s.p0, s.p1, deltaE);
}

double energy(const LiouvilleVector& rho, const SpinSystem& system, const std::vector<int>& qubits) {
  return hamiltonianCoeffs(system, qubits).dot(rho.coeffs()).real();
}

double heatQ(const LiouvilleVector& before, const LiouvilleVector& after, const SpinSystem& system) {
  return energy(after, system, {1}) - energy(before, system, {1});
}

double energyChange23(const LiouvilleVector& before, const LiouvilleVector& after, const SpinSystem& system) {
  return energy(after, system, {2, 3}) - energy(before, system, {2, 3});
}

double workW(const LiouvilleVector& before, const LiouvilleVector& after, const SpinSystem& system) {
  return energy(after, system, {1, 2, 3}) - energy(before, system, {1, 2, 3});
}

std::optional<double> efficiency(double q, double w) {
  if (std::abs(w) <= kZeroWork) return std::nullopt;
  return -q / w;
}

std::optional<double> carnotCop(double beta0, double betaLoad) {
  if (!(std::isfinite(beta0) && beta0 > 0.0 && std::isfinite(betaLoad) && betaLoad > 0.0)) return std::nullopt;
  if (std::abs(betaLoad - beta0) <= 1e-12 * beta0) return std::numeric_limits<double>::infinity();
  return beta0 / (betaLoad - beta0);
}

std::vector<CycleReport> cycleReports(const Trajectory& t, const SpinSystem& system) {
  std::vector<CycleReport> out;
  out.reserve(t.cycles());
  for (int n = 1; n <= t.cycles(); ++n) {
    const LiouvilleVector& before = t.preGate(n);
    const LiouvilleVector& mid = t.postGate(n);
    const LiouvilleVector& after = t.postBath(n);
    CycleReport r;
    r.n = n;
    for (int q = 1; q <= 3; ++q) r.beta[q - 1] = spinBeta(reducedState(after, q), system.splitting(q));
    r.Q = heatQ(before, mid, system);
    r.W = workW(before, mid, system);
    r.deltaE23 = energyChange23(before, mid, system);
    r.heatBath = workW(mid, after, system);
    r.eta = efficiency(r.Q, r.W);
    r.carnotCop = carnotCop(system.beta0, spinBeta(reducedState(before, 1), system.splitting(1)));
    out.push_back(r);
  }
  return out;
}

EtaSurface etaSurface(const CycleConfig& base, const std::vector<double>& deltaE2, const std::vector<double>& deltaE3) {
  EtaSurface s;
  s.deltaE2 = deltaE2;
  s.deltaE3 = deltaE3;
  s.eta1.reserve(deltaE2.size() * deltaE3.size());
  CycleConfig cfg = base;
  cfg.tau = ContactTime::infinite();
  cfg.nCycles = 1;
  for (double e2 : deltaE2) {
    for (double e3 : deltaE3) {
      cfg.system.deltaE[1] = e2;
      cfg.system.deltaE[2] = e3;
      const Trajectory t = iterate(cfg);
      const double q = heatQ(t.preGate(1), t.postGate(1), cfg.system);
      const double w = workW(t.preGate(1), t.postGate(1), cfg.system);
      s.eta1.push_back(efficiency(q, w));
    }
  }
  return s;
}

}  // namespace ccool
