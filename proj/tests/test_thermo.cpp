#include "ccool/thermo.hpp"

#include "ccool/error.hpp"
#include "ccool/gates.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

using namespace ccool;
using namespace ccool::testing;

namespace {

// Bit-level ALGORITHM: swap q1,q3; q2 ^= q1; swap q1,q3 if q2 = 1.
int refAlgorithm(int s) {
  int a = (s >> 2) & 1, b = (s >> 1) & 1, c = s & 1;
  std::swap(a, c);
  b ^= a;
  if (b == 1) std::swap(a, c);
  return a * 4 + b * 2 + c;
}

std::array<double, 8> thermalPops(const std::array<double, 3>& de, double beta) {
  std::array<double, 8> p{};
  for (int s = 0; s < 8; ++s) {
    p[s] = 1.0;
    for (int q = 0; q < 3; ++q) {
      const int bit = (s >> (2 - q)) & 1;
      const double e = std::exp(de[q] * beta);
      p[s] *= bit == 0 ? e / (1 + e) : 1 / (1 + e);
    }
  }
  return p;
}

// Energy of qubit q (0-based) with levels -dE/2 (ground) and +dE/2.
double refEnergy(const std::array<double, 8>& p, const std::array<double, 3>& de, int q) {
  double e = 0;
  for (int s = 0; s < 8; ++s) e += p[s] * (((s >> (2 - q)) & 1) ? de[q] / 2 : -de[q] / 2);
  return e;
}

struct RefStroke {
  double q, w, d23;
};

RefStroke refFirstStroke(const std::array<double, 3>& de, double beta) {
  const auto before = thermalPops(de, beta);
  std::array<double, 8> after{};
  for (int s = 0; s < 8; ++s) after[refAlgorithm(s)] += before[s];
  RefStroke r{};
  r.q = refEnergy(after, de, 0) - refEnergy(before, de, 0);
  r.d23 = refEnergy(after, de, 1) + refEnergy(after, de, 2) - refEnergy(before, de, 1) - refEnergy(before, de, 2);
  r.w = r.q + r.d23;
  return r;
}

CycleConfig firstCycle(std::array<double, 3> de = {1, 1, 1}) {
  CycleConfig c;
  c.system.deltaE = de;
  c.nCycles = 1;
  return c;
}

}  // namespace

TEST(ReducedState, ThermalMarginals) {
  SpinSystem s;
  s.deltaE = {1.0, 2.0, 0.5};
  const LiouvilleVector v = thermalState(s);
  for (int q = 1; q <= 3; ++q) {
    const SingleQubitState r = reducedState(v, q);
    const double e = std::exp(s.splitting(q));
    EXPECT_NEAR(r.p0, e / (1 + e), 1e-15);
    EXPECT_NEAR(r.p0 + r.p1, 1.0, 1e-15);
    EXPECT_EQ(std::abs(r.coherence), 0.0);
    EXPECT_NEAR(spinBeta(r, s.splitting(q)), 1.0, 1e-14);
  }
}

TEST(ReducedState, CoherenceMatchesPartialTrace) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 10; ++k) {
    const DensityMatrix rho = randomState(rng);
    const LiouvilleVector v = vectorize(rho);
    for (int q = 1; q <= 3; ++q) {
      Eigen::Matrix2cd red = Eigen::Matrix2cd::Zero();
      for (int s = 0; s < 8; ++s)
        for (int t = 0; t < 8; ++t) {
          const int mask = ~(1 << (3 - q)) & 7;
          if ((s & mask) != (t & mask)) continue;
          red((s >> (3 - q)) & 1, (t >> (3 - q)) & 1) += rho(s, t);
        }
      const SingleQubitState r = reducedState(v, q);
      EXPECT_NEAR(r.p0, red(0, 0).real(), 1e-14);
      EXPECT_NEAR(r.p1, red(1, 1).real(), 1e-14);
      EXPECT_NEAR(std::abs(r.coherence - red(0, 1)), 0.0, 1e-14);
    }
  }
}

TEST(SpinBeta, Examples) {
  EXPECT_NEAR(spinBeta(0.8219, 0.1781, 1.0), std::log(0.8219 / 0.1781), 1e-15);
  EXPECT_NEAR(spinBeta(0.8219, 0.1781, 1.0), 1.5293, 1e-4);
  EXPECT_EQ(spinBeta(0.5, 0.5, 1.0), 0.0);
  EXPECT_EQ(spinBeta(1.0, 0.0, 1.0), INFINITY);
  EXPECT_EQ(spinBeta(0.0, 1.0, 1.0), -INFINITY);
  EXPECT_LT(spinBeta(0.3, 0.7, 2.0), 0.0);
  EXPECT_NEAR(spinBeta(0.7, 0.3, 2.0), std::log(7.0 / 3.0) / 2, 1e-15);
}

TEST(SpinBeta, RejectsCoherentMarginal) {
  SingleQubitState s{0.6, 0.4, Complex(0.01, 0)};
  EXPECT_THROW(spinBeta(s, 1.0), InvalidArgument);
  s.coherence = Complex(0, 5e-10);
  EXPECT_NO_THROW(spinBeta(s, 1.0));
}

TEST(Energy, ThermalValues) {
  SpinSystem s;
  const LiouvilleVector v = thermalState(s);
  EXPECT_NEAR(energy(v, s, {1}), -0.5 * std::tanh(0.5), 1e-15);
  EXPECT_NEAR(energy(v, s, {1, 2, 3}), -1.5 * std::tanh(0.5), 1e-15);
  EXPECT_EQ(energy(v, s, {}), 0.0);
}

TEST(Heat, FirstStrokeValues) {
  const CycleConfig c = firstCycle();
  const Trajectory t = iterate(c);
  const double q = heatQ(t.preGate(1), t.postGate(1), c.system);
  const double d23 = energyChange23(t.preGate(1), t.postGate(1), c.system);
  const double w = workW(t.preGate(1), t.postGate(1), c.system);
  const RefStroke ref = refFirstStroke({1, 1, 1}, 1.0);
  EXPECT_NEAR(q, ref.q, 1e-14);
  EXPECT_NEAR(d23, ref.d23, 1e-14);
  EXPECT_NEAR(w, ref.w, 1e-14);
  EXPECT_NEAR(q, -0.0909, 1e-4);
  EXPECT_NEAR(d23, 0.2151, 1e-4);
  EXPECT_NEAR(w, 0.1242, 1e-4);
  ASSERT_TRUE(efficiency(q, w).has_value());
  EXPECT_NEAR(*efficiency(q, w), 0.731, 1e-3);
}

TEST(Heat, EnergyBookkeeping) {
  std::mt19937_64 rng(9);
  CycleConfig c = firstCycle({0.7, 1.3, 2.1});
  c.nCycles = 20;
  c.tau = ContactTime::natural(13.0);
  c.includeHamiltonian = true;
  const Trajectory t = iterate(c, vectorize(randomState(rng)));
  for (int n = 1; n <= 20; ++n) {
    const double q = heatQ(t.preGate(n), t.postGate(n), c.system);
    const double d23 = energyChange23(t.preGate(n), t.postGate(n), c.system);
    const double w = workW(t.preGate(n), t.postGate(n), c.system);
    const double bath = workW(t.postGate(n), t.postBath(n), c.system);
    EXPECT_NEAR(w, q + d23, 1e-12);
    const double total = energy(t.postBath(n), c.system, {1, 2, 3}) - energy(t.preGate(n), c.system, {1, 2, 3});
    EXPECT_NEAR(total, w + bath, 1e-12);
    // the bath does not touch qubit 1
    EXPECT_NEAR(energy(t.postBath(n), c.system, {1}), energy(t.postGate(n), c.system, {1}), 1e-14);
  }
}

TEST(CycleReports, RejectCoherentMarginals) {
  std::mt19937_64 rng(9);
  CycleConfig c = firstCycle();
  const Trajectory t = iterate(c, vectorize(randomState(rng)));
  EXPECT_THROW(cycleReports(t, c.system), InvalidArgument);
}

TEST(Efficiency, UndefinedForZeroWork) {
  EXPECT_FALSE(efficiency(-0.1, 0.0).has_value());
  EXPECT_FALSE(efficiency(0.0, 1e-15).has_value());
  EXPECT_DOUBLE_EQ(*efficiency(-0.1, 0.2), 0.5);
}

TEST(Efficiency, SwapAloneDoesNothingOnSymmetricState) {
  const SpinSystem s;
  const LiouvilleVector v = thermalState(s);
  const LiouvilleVector out = gateSuperop({GateKind::Swap13}) * v;
  EXPECT_NEAR(heatQ(v, out, s), 0.0, 1e-15);
  EXPECT_NEAR(workW(v, out, s), 0.0, 1e-15);
  EXPECT_FALSE(efficiency(heatQ(v, out, s), workW(v, out, s)).has_value());
}

TEST(CarnotCop, Values) {
  EXPECT_DOUBLE_EQ(*carnotCop(1.0, 2.0), 1.0);
  EXPECT_DOUBLE_EQ(*carnotCop(1.0, 1.5), 2.0);
  EXPECT_EQ(*carnotCop(1.0, 1.0), INFINITY);
  EXPECT_EQ(*carnotCop(1.0, 1.0 - 2e-16), INFINITY);
  EXPECT_FALSE(carnotCop(0.0, 1.0).has_value());
  EXPECT_FALSE(carnotCop(1.0, INFINITY).has_value());
}

TEST(CarnotCop, BoundsTheEfficiency) {
  for (double tau : {0.02, 0.64, 4.0}) {
    CycleConfig c;
    c.nCycles = 300;
    c.tau = ContactTime::inT1(tau, c.system);
    for (const CycleReport& r : cycleReports(iterate(c), c.system)) {
      if (r.Q < 0 && r.W > 0 && r.eta && r.carnotCop) EXPECT_LE(*r.eta, *r.carnotCop + 1e-9) << "n=" << r.n;
    }
  }
}

TEST(CycleReports, FirstRowAtDefaults) {
  CycleConfig c;
  c.nCycles = 3;
  const auto rows = cycleReports(iterate(c), c.system);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].n, 1);
  EXPECT_NEAR(rows[0].beta[0], 1.5293850802659, 1e-10);
  EXPECT_NEAR(rows[0].beta[1], 1.0, 1e-12);
  EXPECT_NEAR(rows[0].eta.value(), 0.7310585786, 1e-9);
  EXPECT_NEAR(rows[0].heatBath, -rows[0].deltaE23, 1e-12);
}

TEST(EtaSurfaceTest, MatchesReferenceAtEveryPoint) {
  const std::vector<double> e2{0.2, 0.5, 1.0, 2.0}, e3{0.2, 0.5, 1.0, 2.0, 3.0};
  const EtaSurface s = etaSurface(firstCycle(), e2, e3);
  ASSERT_EQ(s.eta1.size(), e2.size() * e3.size());
  for (std::size_t i = 0; i < e2.size(); ++i)
    for (std::size_t j = 0; j < e3.size(); ++j) {
      const RefStroke r = refFirstStroke({1.0, e2[i], e3[j]}, 1.0);
      ASSERT_TRUE(s.at(i, j).has_value());
      EXPECT_NEAR(*s.at(i, j), -r.q / r.w, 1e-12);
    }
  EXPECT_NEAR(*s.at(2, 2), 0.7310585786, 1e-9);
}

TEST(EtaSurfaceTest, AsymmetricWithEqualHeat) {
  const EtaSurface s = etaSurface(firstCycle(), {0.5, 2.0}, {0.5, 2.0});
  EXPECT_NEAR(*s.at(0, 1), 0.887, 1e-3);
  EXPECT_NEAR(*s.at(1, 0), 0.221, 1e-3);
  const RefStroke a = refFirstStroke({1, 0.5, 2}, 1), b = refFirstStroke({1, 2, 0.5}, 1);
  EXPECT_NEAR(a.q, b.q, 1e-15);
  EXPECT_NEAR(a.q, -0.11455, 1e-5);
}

TEST(EtaSurfaceTest, NegativeRegion) {
  const EtaSurface s = etaSurface(firstCycle(), {0.2}, {0.2});
  EXPECT_NEAR(*s.at(0, 0), -1.07, 0.01);
}

TEST(EtaSurfaceTest, IgnoresConfiguredContact) {
  CycleConfig c = firstCycle();
  c.tau = ContactTime::natural(0.1);
  c.nCycles = 17;
  EXPECT_EQ(*etaSurface(c, {1.0}, {1.0}).at(0, 0), *etaSurface(firstCycle(), {1.0}, {1.0}).at(0, 0));
}
