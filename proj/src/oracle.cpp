#include "ccool/oracle.hpp"

#include "ccool/error.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace ccool::oracle {
namespace {

int qubitBit(int s, int qubit) { return (s >> (3 - qubit)) & 1; }

double betaFromPopulations(double p0, double p1, double deltaE) {
  if (p0 == p1) return 0.0;
  if (p1 <= 0.0) return std::numeric_limits<double>::infinity();
  if (p0 <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(p0 / p1) / deltaE;
}

// Level energies -dE/2 for |0>, +dE/2 for |1>.
double meanEnergy(const PopulationVector& p, const SpinSystem& system, int firstQubit, int lastQubit) {
  double e = 0.0;
  for (int s = 0; s < 8; ++s) {
    for (int q = firstQubit; q <= lastQubit; ++q) {
      const double level = qubitBit(s, q) ? 0.5 * system.deltaE[q - 1] : -0.5 * system.deltaE[q - 1];
      e += p[s] * level;
    }
  }
  return e;
}

}  // namespace

PopulationVector::PopulationVector(const std::array<double, 8>& p) : p_(p) {
  double sum = 0.0;
  for (double x : p_) {
    if (!(x >= -1e-15)) throw InvalidArgument("population entry is negative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-14) throw InvalidArgument("populations do not sum to 1");
}

double PopulationVector::groundProbability(int qubit) const {
  double p = 0.0;
  for (int s = 0; s < 8; ++s)
    if (qubitBit(s, qubit) == 0) p += p_[s];
  return p;
}

PopulationVector thermalPopulations(const SpinSystem& system) {
  std::array<double, 8> p{};
  for (int s = 0; s < 8; ++s) {
    double w = 1.0;
    for (int q = 1; q <= 3; ++q) {
      const double eps = std::exp(system.deltaE[q - 1] * system.beta0);
      const double ground = std::isinf(eps) ? 1.0 : eps / (1.0 + eps);
      w *= qubitBit(s, q) ? 1.0 - ground : ground;
    }
    p[s] = w;
  }
  return PopulationVector(p);
}

PopulationVector uniformPopulations() {
  std::array<double, 8> p{};
  p.fill(0.125);
  return PopulationVector(p);
}

PopulationVector pointPopulation(int s) {
  std::array<double, 8> p{};
  p.at(s) = 1.0;
  return PopulationVector(p);
}

PopulationVector applyGatePermutation(const PopulationVector& p, const GateSpec& g) {
  const BasisPermutation pi = gatePermutation(g);
  PopulationVector out;
  for (int s = 0; s < 8; ++s) out.p_[pi(s)] = p.p_[s];
  return out;
}

std::array<std::array<double, 2>, 2> relaxationMatrix(const ContactTime& tau, double deltaE, const SpinSystem& system) {
  const double f = tau.isInfinite() ? 0.0 : std::exp(-2.0 * system.lambda * tau.natural());
  const double eps = std::exp(deltaE * system.beta0);
  const double bEq = std::isinf(eps) ? 1.0 : (eps - 1.0) / (eps + 1.0);
  // column `from`: the bias of a pure state (+1 for |0>, -1 for |1>) relaxes
  // to f*b + (1-f)*bEq; p0 = (1 + b)/2
  std::array<std::array<double, 2>, 2> m{};
  for (int from = 0; from < 2; ++from) {
    const double b = (from == 0 ? 1.0 : -1.0) * f + (1.0 - f) * bEq;
    m[0][from] = 0.5 * (1.0 + b);
    m[1][from] = 0.5 * (1.0 - b);
  }
  return m;
}

PopulationVector relaxPopulations(const PopulationVector& p, const ContactTime& tau, const SpinSystem& system) {
  PopulationVector cur = p;
  for (int q : {2, 3}) {
    const auto m = relaxationMatrix(tau, system.deltaE[q - 1], system);
    const int mask = 1 << (3 - q);
    PopulationVector next;
    for (int s = 0; s < 8; ++s) {
      const int from = (s & mask) ? 1 : 0;
      const int base = s & ~mask;
      next.p_[base] += m[0][from] * cur.p_[s];
      next.p_[base | mask] += m[1][from] * cur.p_[s];
    }
    cur = next;
  }
  return cur;
}

std::vector<OracleCycle> runOracle(const CycleConfig& cfg) {
  cfg.validate();
  const GateSpec gate = cfg.gate();
  const SpinSystem& sys = cfg.system;
  std::vector<OracleCycle> out;
  out.reserve(cfg.nCycles);

  PopulationVector p = thermalPopulations(sys);
  for (int n = 1; n <= cfg.nCycles; ++n) {
    const PopulationVector mid = applyGatePermutation(p, gate);
    const PopulationVector after = relaxPopulations(mid, cfg.tau, sys);
    OracleCycle c;
    c.n = n;
    for (int q = 1; q <= 3; ++q) {
      const double g = after.groundProbability(q);
      c.p0[q - 1] = g;
      c.beta[q - 1] = betaFromPopulations(g, 1.0 - g, sys.deltaE[q - 1]);
      const double gm = mid.groundProbability(q);
      c.betaMid[q - 1] = betaFromPopulations(gm, 1.0 - gm, sys.deltaE[q - 1]);
    }
    c.Q = meanEnergy(mid, sys, 1, 1) - meanEnergy(p, sys, 1, 1);
    c.W = meanEnergy(mid, sys, 1, 3) - meanEnergy(p, sys, 1, 3);
    if (std::abs(c.W) > 1e-14) c.eta = -c.Q / c.W;
    out.push_back(c);
    p = after;
  }
  return out;
}

}  // namespace ccool::oracle
