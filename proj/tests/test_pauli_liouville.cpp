#include "ccool/pauli_liouville.hpp"

#include "ccool/error.hpp"
#include "ccool/gates.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace ccool;
using namespace ccool::testing;

namespace {

// Thermal product state written out directly in the computational basis.
DensityMatrix thermalMatrix(double beta0, double dE) {
  const double eps = std::exp(beta0 * dE);
  const double p0 = eps / (1 + eps), p1 = 1 / (1 + eps);
  Matrix8 m = Matrix8::Zero();
  for (int s = 0; s < 8; ++s) {
    double w = 1;
    for (int q = 0; q < 3; ++q) w *= ((s >> (2 - q)) & 1) ? p1 : p0;
    m(s, s) = w;
  }
  return DensityMatrix(m);
}

}  // namespace

TEST(PauliLiouville, MaximallyMixedHasOnlyIdentityComponent) {
  const LiouvilleVector v = vectorize(DensityMatrix::maximallyMixed());
  EXPECT_NEAR(v[0].real(), kInvTwoRootTwo, 1e-15);
  for (int i = 1; i < kLiouvilleDim; ++i) EXPECT_NEAR(std::abs(v[i]), 0.0, 1e-15) << i;
}

TEST(PauliLiouville, GroundStateCoefficientPattern) {
  // |0><0| = (s0 + sz)/2 = (sigma_hat_0 + sigma_hat_z)/sqrt2 on each factor,
  // so every {0,z}^3 coefficient is +(1/sqrt2)^3 and the rest vanish.
  const LiouvilleVector v = vectorize(DensityMatrix::basisState(0));
  const auto& diag = diagonalSectorIndices();
  for (int idx = 0; idx < kLiouvilleDim; ++idx) {
    const bool inSector = std::find(diag.begin(), diag.end(), idx) != diag.end();
    EXPECT_NEAR(v[idx].real(), inSector ? kInvTwoRootTwo : 0.0, 1e-15) << idx;
    EXPECT_NEAR(v[idx].imag(), 0.0, 1e-15);
  }
}

TEST(PauliLiouville, ThermalStateZComponent) {
  const double e = std::exp(1.0);
  const double bias = (e - 1) / (e + 1);
  EXPECT_NEAR(bias, 0.46212, 1e-5);
  const LiouvilleVector v = vectorize(thermalMatrix(1.0, 1.0));
  EXPECT_NEAR(v.coeff(Pauli::Z, Pauli::I, Pauli::I).real(), kInvTwoRootTwo * bias, 1e-14);
  EXPECT_NEAR(v.coeff(Pauli::Z, Pauli::I, Pauli::I).real(), 0.16338, 1e-5);
  const Eigen::MatrixXcd zHat = pauliBasisElement(3, pauliIndex(Pauli::Z, Pauli::I, Pauli::I));
  EXPECT_NEAR(innerProduct(zHat, thermalMatrix(1.0, 1.0).matrix()).real(), 0.16338, 1e-5);
}

TEST(PauliLiouville, BasisIsOrthonormal) {
  for (int a = 0; a < kLiouvilleDim; ++a) {
    const Eigen::MatrixXcd ba = pauliBasisElement(3, a);
    for (int b = 0; b < kLiouvilleDim; ++b) {
      const Complex ip = innerProduct(ba, pauliBasisElement(3, b));
      EXPECT_NEAR(std::abs(ip - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-14) << a << "," << b;
    }
  }
}

TEST(PauliLiouville, IndexLayout) {
  EXPECT_EQ(pauliIndex(Pauli::X, Pauli::Y, Pauli::Z), 1 * 16 + 2 * 4 + 3);
  // sigma_hat_{x,0,0} = sigma_x (x) 1 (x) 1 / (2 sqrt2), qubit 1 most significant
  const Eigen::MatrixXcd b = pauliBasisElement(3, pauliIndex(Pauli::X, Pauli::I, Pauli::I));
  EXPECT_NEAR(b(4, 0).real(), kInvTwoRootTwo, 1e-15);
  EXPECT_NEAR(std::abs(b(1, 0)), 0.0, 1e-15);
}

TEST(PauliLiouville, InnerProductProperties) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix rho = randomState(rng);
    EXPECT_NEAR(std::abs(innerProduct(Matrix8::Identity(), rho.matrix()) - Complex(1.0)), 0.0, 1e-13);
    const Eigen::MatrixXcd a = randomComplex(rng, 8), b = randomComplex(rng, 8);
    EXPECT_NEAR(std::abs(innerProduct(a, b) - std::conj(innerProduct(b, a))), 0.0, 1e-12);
    const Complex alpha(0.3, -1.7);
    EXPECT_NEAR(std::abs(innerProduct(a, alpha * b) - alpha * innerProduct(a, b)), 0.0, 1e-11);
    // Parseval in the orthonormal basis
    EXPECT_NEAR(innerProduct(a, a).real(), vectorizeOperator(a).squaredNorm(), 1e-10);
  }
}

TEST(PauliLiouville, RoundTripRandomStates) {
  std::mt19937_64 rng(11);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const DensityMatrix rho = randomState(rng);
    const LiouvilleVector v = vectorize(rho);
    EXPECT_TRUE(v.isReal());
    EXPECT_NEAR(v[0].real(), kInvTwoRootTwo, 1e-12);
    worst = std::max(worst, maxAbs(devectorize(v).matrix() - rho.matrix()));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(PauliLiouville, DevectorizeIdentityComponent) {
  LiouvilleVector v;
  v[0] = kInvTwoRootTwo;
  EXPECT_LT(maxAbs(devectorize(v).matrix() - Matrix8::Identity() / 8.0), 1e-15);
}

TEST(PauliLiouville, DevectorizeRejectsNonHermitianAndWrongTrace) {
  LiouvilleVector v = vectorize(DensityMatrix::maximallyMixed());
  v[5] = Complex(0.0, 1e-6);
  EXPECT_THROW(devectorize(v), InvalidArgument);
  LiouvilleVector w = vectorize(DensityMatrix::maximallyMixed());
  w[0] *= 1.01;
  EXPECT_THROW(devectorize(w), InvalidArgument);
}

TEST(PauliLiouville, DensityMatrixInvariants) {
  Matrix8 m = Matrix8::Identity() / 8.0;
  m(0, 1) = 0.01;  // not Hermitian
  EXPECT_THROW(DensityMatrix{m}, InvalidArgument);
  Matrix8 t = Matrix8::Identity() / 4.0;
  EXPECT_THROW(DensityMatrix{t}, InvalidArgument);
  Matrix8 neg = Matrix8::Zero();
  neg(0, 0) = 1.1;
  neg(1, 1) = -0.1;
  EXPECT_THROW(DensityMatrix{neg}, InvalidArgument);
  EXPECT_NO_THROW(DensityMatrix{Matrix8::Identity() / 8.0});
}

TEST(PauliLiouville, ConjugationByIdentityIsIdentity) {
  const SuperOp s = conjugationSuperop(Eigen::MatrixXcd::Identity(8, 8));
  EXPECT_LT(maxAbs(s.matrix() - Eigen::MatrixXcd::Identity(64, 64)), 1e-14);
}

TEST(PauliLiouville, ConjugationBySwap13PermutesBasisStates) {
  const SuperOp s = conjugationSuperop(gateUnitary({GateKind::Swap13}));
  const DensityMatrix out = devectorize(s * vectorize(DensityMatrix::basisState(0b001)));
  EXPECT_LT(maxAbs(out.matrix() - DensityMatrix::basisState(0b100).matrix()), 1e-14);
}

TEST(PauliLiouville, ConjugationMatchesDirectProduct) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const Eigen::MatrixXcd u = randomUnitary(rng, 8);
    const DensityMatrix rho = randomState(rng);
    const SuperOp s = conjugationSuperop(u);
    const Matrix8 direct = u * rho.matrix() * u.adjoint();
    EXPECT_LT(maxAbs(devectorize(s * vectorize(rho)).matrix() - direct), 1e-12);
    // Hermiticity-preserving maps are real in the Pauli basis
    EXPECT_LT(s.matrix().imag().cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(PauliLiouville, ConjugationIsHomomorphism) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    const Eigen::MatrixXcd u = randomUnitary(rng, 8), v = randomUnitary(rng, 8);
    const SuperOp lhs = conjugationSuperop(u * v);
    const SuperOp rhs = conjugationSuperop(u) * conjugationSuperop(v);
    EXPECT_LT(maxAbs(lhs.matrix() - rhs.matrix()), 1e-12);
  }
}

TEST(PauliLiouville, ConjugationIsCptp) {
  std::mt19937_64 rng(9);
  const SuperOp s = conjugationSuperop(randomUnitary(rng, 8));
  EXPECT_TRUE(s.isTracePreserving(1e-12));
  EXPECT_TRUE(s.isCompletelyPositive(1e-10));
}

TEST(PauliLiouville, ConjugationRejectsNonUnitary) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
  m(0, 0) = 1.1;
  EXPECT_THROW(conjugationSuperop(m), InvalidArgument);
}

TEST(PauliLiouville, ChoiDetectsNonPositiveMap) {
  // transpose map on one qubit: trace preserving but not completely positive
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Identity(4, 4);
  t(2, 2) = -1.0;  // sigma_y -> -sigma_y
  const SuperOp transpose(t);
  EXPECT_TRUE(transpose.isTracePreserving());
  EXPECT_FALSE(transpose.isCompletelyPositive());
  EXPECT_NEAR(transpose.choiMinEigenvalue(), -1.0, 1e-12);
}

TEST(PauliLiouville, CsvDump) {
  std::ostringstream os;
  writeCsv(os, vectorize(DensityMatrix::maximallyMixed()));
  const std::string s = os.str();
  EXPECT_EQ(s.substr(0, s.find('\n')), "i,j,k,coeff");
  EXPECT_NE(s.find("0,0,0,0.35355339059327"), std::string::npos);
  EXPECT_NE(s.find("z,z,z,0\n"), std::string::npos);
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 65);
}
