#pragma once

// Liouville-space representation of 3-qubit operators in the orthonormal
// Pauli-product basis sigma_ijk = (s_i/sqrt2) (x) (s_j/sqrt2) (x) (s_k/sqrt2),
// i,j,k in {0,x,y,z}, flattened as i*16 + j*4 + k. Qubit 1 is the most
// significant bit of the computational index and |0> is the ground state,
// with sigma_z = diag(+1, -1).

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <iosfwd>
#include <string>

namespace ccool {

using Complex = std::complex<double>;
using Matrix8 = Eigen::Matrix<Complex, 8, 8>;
using Vector64 = Eigen::Matrix<Complex, 64, 1>;

inline constexpr int kQubits = 3;
inline constexpr int kHilbertDim = 8;
inline constexpr int kLiouvilleDim = 64;

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

// Flat Liouville index of (i, j, k).
constexpr int pauliIndex(Pauli i, Pauli j, Pauli k) {
  return static_cast<int>(i) * 16 + static_cast<int>(j) * 4 + static_cast<int>(k);
}

// Unnormalized 2x2 Pauli matrix.
Eigen::Matrix2cd pauliMatrix(Pauli p);

// Normalized basis element for an n-qubit register (n = 1..3); index in [0, 4^n).
Eigen::MatrixXcd pauliBasisElement(int nQubits, int index);

// Operator trace inner product tr(A^dagger B).
Complex innerProduct(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// 8x8 Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPositivityTol = 1e-10;

  // Validates the invariants; throws InvalidArgument on violation.
  explicit DensityMatrix(const Matrix8& m);

  // Skips validation; for values already known to be states (e.g. products of states).
  static DensityMatrix trusted(const Matrix8& m);

  static DensityMatrix maximallyMixed();
  // |s><s| for computational basis index s in [0, 8).
  static DensityMatrix basisState(int s);

  const Matrix8& matrix() const noexcept { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }
  double minEigenvalue() const;

 private:
  struct Unchecked {};
  DensityMatrix(const Matrix8& m, Unchecked) : m_(m) {}
  Matrix8 m_;
};

// 64 Pauli-basis coefficients of a 3-qubit operator.
class LiouvilleVector {
 public:
  LiouvilleVector() : c_(Vector64::Zero()) {}
  explicit LiouvilleVector(const Vector64& c) : c_(c) {}

  Complex operator[](int idx) const { return c_(idx); }
  Complex& operator[](int idx) { return c_(idx); }
  Complex coeff(Pauli i, Pauli j, Pauli k) const { return c_(pauliIndex(i, j, k)); }

  const Vector64& coeffs() const noexcept { return c_; }
  Vector64& coeffs() noexcept { return c_; }

  // True when every coefficient is real to tol.
  bool isReal(double tol = 1e-12) const;
  // Largest |coeff| outside the {0,z}^3 diagonal sector.
  double offDiagonalSectorNorm() const;

 private:
  Vector64 c_;
};

// Linear map on LiouvilleVector coefficients, 4^n x 4^n for an n-qubit register.
class SuperOp {
 public:
  SuperOp() = default;
  explicit SuperOp(Eigen::MatrixXcd m);

  static SuperOp identity(int nQubits = kQubits);

  int qubits() const noexcept { return qubits_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  SuperOp operator*(const SuperOp& rhs) const;
  LiouvilleVector operator*(const LiouvilleVector& v) const;

  // Kronecker product; *this acts on the leading (more significant) qubits.
  SuperOp tensor(const SuperOp& rhs) const;

  // Largest deviation of the identity-component output row from e_0.
  double traceDefect() const;
  // Smallest eigenvalue of the Choi matrix sum_kl |k><l| (x) Phi(|k><l|).
  double choiMinEigenvalue() const;
  Eigen::MatrixXcd choiMatrix() const;

  bool isTracePreserving(double tol = 1e-12) const { return traceDefect() <= tol; }
  bool isCompletelyPositive(double tol = 1e-10) const { return choiMinEigenvalue() >= -tol; }

  // Apply to an arbitrary operator of matching dimension.
  Eigen::MatrixXcd applyTo(const Eigen::MatrixXcd& op) const;

 private:
  Eigen::MatrixXcd m_;
  int qubits_ = 0;
};

// Coefficients of an arbitrary operator of dimension 2^n (n = 1..3).
Eigen::VectorXcd vectorizeOperator(const Eigen::MatrixXcd& op);
// Inverse of vectorizeOperator; no Hermiticity or trace checks.
Eigen::MatrixXcd devectorizeOperator(const Eigen::VectorXcd& coeffs);

LiouvilleVector vectorize(const DensityMatrix& rho);
// Rebuilds the state; throws InvalidArgument if coefficients carry an imaginary
// part above 1e-9 or the trace differs from 1 by more than 1e-9.
DensityMatrix devectorize(const LiouvilleVector& v);

// Superoperator of rho -> U rho U^dagger. Throws InvalidArgument when
// ||U^dagger U - I|| > 1e-9.
SuperOp conjugationSuperop(const Eigen::MatrixXcd& u);

// The 8 flat indices with i,j,k in {0,z}, ascending.
const std::array<int, 8>& diagonalSectorIndices();

// Label of Pauli index ("0", "x", "y", "z").
char pauliLabel(int p);

// CSV dump "i,j,k,coeff" (real part; 17 significant digits).
void writeCsv(std::ostream& os, const LiouvilleVector& v);

}  // namespace ccool
