#include "ccool/gates.hpp"

#include "ccool/error.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <array>

using namespace ccool;
using namespace ccool::testing;

namespace {

// Independent bit-level reference for the three gates.
struct Bits {
  int a, b, c;
};
Bits split(int s) { return {(s >> 2) & 1, (s >> 1) & 1, s & 1}; }
int join(Bits x) { return x.a * 4 + x.b * 2 + x.c; }

int refSwap13(int s) {
  Bits x = split(s);
  std::swap(x.a, x.c);
  return join(x);
}
int refCnot12(int s) {
  Bits x = split(s);
  x.b ^= x.a;
  return join(x);
}
int refCswap(int s, int trigger) {
  Bits x = split(s);
  if (x.b == trigger) std::swap(x.a, x.c);
  return join(x);
}

std::array<double, 8> thermalPops(double eps) {
  const double p0 = eps / (1 + eps), p1 = 1 / (1 + eps);
  std::array<double, 8> p{};
  for (int s = 0; s < 8; ++s) {
    const Bits x = split(s);
    p[s] = (x.a ? p1 : p0) * (x.b ? p1 : p0) * (x.c ? p1 : p0);
  }
  return p;
}

}  // namespace

TEST(Gates, IndividualGatesMatchBitReference) {
  const auto swap = gatePermutation({GateKind::Swap13});
  const auto cnot = gatePermutation({GateKind::Cnot12});
  const auto cswap = gatePermutation({GateKind::Cswap});
  const auto cswapGround = gatePermutation({GateKind::Cswap, CswapPolarity::Ground});
  for (int s = 0; s < 8; ++s) {
    EXPECT_EQ(swap(s), refSwap13(s));
    EXPECT_EQ(cnot(s), refCnot12(s));
    EXPECT_EQ(cswap(s), refCswap(s, 1));
    EXPECT_EQ(cswapGround(s), refCswap(s, 0));
  }
}

TEST(Gates, Swap13ExchangesOuterQubits) {
  const auto swap = gatePermutation({GateKind::Swap13});
  EXPECT_EQ(swap(0b001), 0b100);
  EXPECT_EQ(swap(0b100), 0b001);
  EXPECT_EQ(swap(0b011), 0b110);
  EXPECT_EQ(swap(0b110), 0b011);
  for (int s : {0b000, 0b010, 0b101, 0b111}) EXPECT_EQ(swap(s), s);
}

TEST(Gates, CompositesAreCompositions) {
  for (auto pol : {CswapPolarity::Excited, CswapPolarity::Ground}) {
    const auto alg = gatePermutation({GateKind::Algorithm, pol});
    const auto boy = gatePermutation({GateKind::Boykin, pol});
    const int trig = pol == CswapPolarity::Excited ? 1 : 0;
    for (int s = 0; s < 8; ++s) {
      EXPECT_EQ(alg(s), refCswap(refCnot12(refSwap13(s)), trig));
      EXPECT_EQ(boy(s), refCswap(refCnot12(s), trig));
    }
  }
}

TEST(Gates, UnitariesArePermutationMatrices) {
  for (auto k : {GateKind::Swap13, GateKind::Cnot12, GateKind::Cswap, GateKind::Algorithm, GateKind::Boykin}) {
    const Matrix8 u = gateUnitary({k});
    for (int r = 0; r < 8; ++r) {
      EXPECT_EQ(u.row(r).real().sum(), 1.0);
      EXPECT_EQ(u.col(r).real().sum(), 1.0);
      for (int c = 0; c < 8; ++c) EXPECT_TRUE(u(r, c) == Complex(0) || u(r, c) == Complex(1));
    }
    EXPECT_EQ(maxAbs(u.adjoint() * u - Matrix8::Identity()), 0.0) << toString(k);
  }
}

TEST(Gates, BasisPermutationRejectsNonBijection) {
  EXPECT_THROW(BasisPermutation({0, 0, 2, 3, 4, 5, 6, 7}), InvalidArgument);
  EXPECT_THROW(BasisPermutation({0, 1, 2, 3, 4, 5, 6, 8}), InvalidArgument);
  const auto alg = gatePermutation({GateKind::Algorithm});
  EXPECT_EQ(alg.then(alg.inverse()), BasisPermutation());
}

TEST(Gates, Swap13SuperopIsInvolution) {
  const SuperOp s = gateSuperop({GateKind::Swap13});
  EXPECT_LT(maxAbs((s * s).matrix() - Eigen::MatrixXcd::Identity(64, 64)), 1e-14);
}

TEST(Gates, SuperopsAreRealUnitalAndCptp) {
  for (auto k : {GateKind::Swap13, GateKind::Cnot12, GateKind::Cswap, GateKind::Algorithm, GateKind::Boykin}) {
    const SuperOp s = gateSuperop({k});
    EXPECT_LT(s.matrix().imag().cwiseAbs().maxCoeff(), 1e-14);
    const LiouvilleVector mixed = vectorize(DensityMatrix::maximallyMixed());
    EXPECT_LT(((s * mixed).coeffs() - mixed.coeffs()).norm(), 1e-14);
    EXPECT_TRUE(s.isTracePreserving());
    EXPECT_TRUE(s.isCompletelyPositive());
  }
}

TEST(Gates, AlgorithmPreservesDiagonalSector) {
  const SuperOp s = gateSuperop({GateKind::Algorithm});
  for (int idx : diagonalSectorIndices()) {
    LiouvilleVector e;
    e[idx] = 1.0;
    EXPECT_LT((s * e).offDiagonalSectorNorm(), 1e-14) << idx;
  }
}

TEST(Gates, AlgorithmCoolsQubitOneOnThermalState) {
  const double eps = std::exp(1.0);
  const double p0 = eps / (1 + eps), p1 = 1 / (1 + eps);
  // enumerate the 8 paths through the reference gates
  const auto pops = thermalPops(eps);
  double ground = 0;
  for (int s = 0; s < 8; ++s)
    if (refCswap(refCnot12(refSwap13(s)), 1) < 4) ground += pops[s];
  EXPECT_NEAR(ground, p0 * p0 + 2 * p0 * p0 * p1, 1e-15);
  EXPECT_NEAR(ground, 0.8219, 1e-4);

  Matrix8 rho = Matrix8::Zero();
  for (int s = 0; s < 8; ++s) rho(s, s) = pops[s];
  const Matrix8 out = devectorize(gateSuperop({GateKind::Algorithm}) * vectorize(DensityMatrix(rho))).matrix();
  double engineGround = 0;
  for (int s = 0; s < 4; ++s) engineGround += out(s, s).real();
  EXPECT_NEAR(engineGround, ground, 1e-14);
  const double betaRatio = std::log(engineGround / (1 - engineGround));
  EXPECT_NEAR(betaRatio, std::log(eps * eps * (1 + 2 * p1) / (1 + 2 * p0)) / std::log(eps), 1e-12);
  EXPECT_NEAR(betaRatio, 1.5293, 1e-4);
}

TEST(Gates, BoykinEqualsAlgorithmOnSymmetricThermalState) {
  const auto pops = thermalPops(std::exp(0.7));
  Matrix8 rho = Matrix8::Zero();
  for (int s = 0; s < 8; ++s) rho(s, s) = pops[s];
  const LiouvilleVector v = vectorize(DensityMatrix(rho));
  const LiouvilleVector a = gateSuperop({GateKind::Algorithm}) * v;
  const LiouvilleVector b = gateSuperop({GateKind::Boykin}) * v;
  EXPECT_LT((a.coeffs() - b.coeffs()).norm(), 1e-14);
}

TEST(Gates, GroundPolarityHeatsQubitOne) {
  const auto pops = thermalPops(std::exp(1.0));
  const auto alg = gatePermutation({GateKind::Algorithm, CswapPolarity::Ground});
  double ground = 0;
  for (int s = 0; s < 8; ++s)
    if (alg(s) < 4) ground += pops[s];
  EXPECT_LT(std::log(ground / (1 - ground)), 1.0);
}
