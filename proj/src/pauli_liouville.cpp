#include "ccool/pauli_liouville.hpp"

#include "ccool/error.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

namespace ccool {
namespace {

constexpr double kDecodeTol = 1e-9;
constexpr double kUnitaryTol = 1e-9;

int qubitsForHilbertDim(Eigen::Index dim) {
  switch (dim) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default: throw InvalidArgument("operator dimension must be 2, 4 or 8, got " + std::to_string(dim));
  }
}

int qubitsForLiouvilleDim(Eigen::Index dim) {
  switch (dim) {
    case 4: return 1;
    case 16: return 2;
    case 64: return 3;
    default: throw InvalidArgument("superoperator dimension must be 4, 16 or 64, got " + std::to_string(dim));
  }
}

// Basis elements are cached per register size; index -> matrix.
const std::vector<Eigen::MatrixXcd>& basisTable(int nQubits) {
  static const auto tables = [] {
    std::array<std::vector<Eigen::MatrixXcd>, 4> t;
    for (int n = 1; n <= 3; ++n) {
      const int count = 1 << (2 * n);
      t[n].reserve(count);
      for (int idx = 0; idx < count; ++idx) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
        for (int q = 0; q < n; ++q) {
          const int p = (idx >> (2 * (n - 1 - q))) & 3;
          const Eigen::Matrix2cd s = pauliMatrix(static_cast<Pauli>(p)) / std::sqrt(2.0);
          m = Eigen::kroneckerProduct(m, s).eval();
        }
        t[n].push_back(std::move(m));
      }
    }
    return t;
  }();
  if (nQubits < 1 || nQubits > 3) throw InvalidArgument("register must have 1 to 3 qubits");
  return tables[nQubits];
}

}  // namespace

Eigen::Matrix2cd pauliMatrix(Pauli p) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Eigen::MatrixXcd pauliBasisElement(int nQubits, int index) {
  const auto& table = basisTable(nQubits);
  if (index < 0 || index >= static_cast<int>(table.size())) throw InvalidArgument("Pauli index out of range");
  return table[index];
}

Complex innerProduct(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("innerProduct: operators not conformable");
  // tr(A^dagger B) = sum_ij conj(A_ij) B_ij
  return (a.conjugate().cwiseProduct(b)).sum();
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(const Matrix8& m) : m_(m) {
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) throw InvalidArgument("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) throw InvalidArgument("density matrix trace is not 1");
  if (minEigenvalue() < -kPositivityTol) throw InvalidArgument("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::trusted(const Matrix8& m) { return DensityMatrix(m, Unchecked{}); }

DensityMatrix DensityMatrix::maximallyMixed() { return trusted(Matrix8::Identity() / 8.0); }

DensityMatrix DensityMatrix::basisState(int s) {
  if (s < 0 || s >= kHilbertDim) throw InvalidArgument("basis index out of range");
  Matrix8 m = Matrix8::Zero();
  m(s, s) = 1.0;
  return trusted(m);
}

double DensityMatrix::minEigenvalue() const {
  const Matrix8 h = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix8> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// ---------------------------------------------------------------------------
// LiouvilleVector

bool LiouvilleVector::isReal(double tol) const { return c_.imag().cwiseAbs().maxCoeff() <= tol; }

double LiouvilleVector::offDiagonalSectorNorm() const {
  double worst = 0.0;
  for (int idx = 0; idx < kLiouvilleDim; ++idx) {
    const int i = idx >> 4, j = (idx >> 2) & 3, k = idx & 3;
    const bool diagonal = (i == 0 || i == 3) && (j == 0 || j == 3) && (k == 0 || k == 3);
    if (!diagonal) worst = std::max(worst, std::abs(c_(idx)));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// SuperOp

SuperOp::SuperOp(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw InvalidArgument("superoperator must be square");
  qubits_ = qubitsForLiouvilleDim(m_.rows());
}

SuperOp SuperOp::identity(int nQubits) {
  const int d = 1 << (2 * nQubits);
  return SuperOp(Eigen::MatrixXcd::Identity(d, d));
}

SuperOp SuperOp::operator*(const SuperOp& rhs) const {
  if (dim() != rhs.dim()) throw InvalidArgument("superoperator product: dimension mismatch");
  return SuperOp(m_ * rhs.m_);
}

LiouvilleVector SuperOp::operator*(const LiouvilleVector& v) const {
  if (dim() != kLiouvilleDim) throw InvalidArgument("superoperator does not act on 3-qubit vectors");
  return LiouvilleVector(Vector64(m_ * v.coeffs()));
}

SuperOp SuperOp::tensor(const SuperOp& rhs) const {
  return SuperOp(Eigen::MatrixXcd(Eigen::kroneckerProduct(m_, rhs.m_)));
}

double SuperOp::traceDefect() const {
  Eigen::RowVectorXcd expected = Eigen::RowVectorXcd::Zero(dim());
  expected(0) = 1.0;
  return (m_.row(0) - expected).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd SuperOp::applyTo(const Eigen::MatrixXcd& op) const {
  if (qubitsForHilbertDim(op.rows()) != qubits_) throw InvalidArgument("operator/superoperator size mismatch");
  return devectorizeOperator(m_ * vectorizeOperator(op));
}

Eigen::MatrixXcd SuperOp::choiMatrix() const {
  const int d = 1 << qubits_;
  Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(d, d);
      e(k, l) = 1.0;
      choi.block(k * d, l * d, d, d) = applyTo(e);
    }
  }
  return choi;
}

double SuperOp::choiMinEigenvalue() const {
  const Eigen::MatrixXcd c = choiMatrix();
  const Eigen::MatrixXcd h = 0.5 * (c + c.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// ---------------------------------------------------------------------------
// vectorization

Eigen::VectorXcd vectorizeOperator(const Eigen::MatrixXcd& op) {
  if (op.rows() != op.cols()) throw InvalidArgument("operator must be square");
  const int n = qubitsForHilbertDim(op.rows());
  const auto& basis = basisTable(n);
  Eigen::VectorXcd c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t idx = 0; idx < basis.size(); ++idx) c(idx) = innerProduct(basis[idx], op);
  return c;
}

Eigen::MatrixXcd devectorizeOperator(const Eigen::VectorXcd& coeffs) {
  const int n = qubitsForLiouvilleDim(coeffs.size());
  const auto& basis = basisTable(n);
  const int d = 1 << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t idx = 0; idx < basis.size(); ++idx) m += coeffs(idx) * basis[idx];
  return m;
}

LiouvilleVector vectorize(const DensityMatrix& rho) {
  return LiouvilleVector(Vector64(vectorizeOperator(rho.matrix())));
}

DensityMatrix devectorize(const LiouvilleVector& v) {
  const double imag = v.coeffs().imag().cwiseAbs().maxCoeff();
  if (imag > kDecodeTol) throw InvalidArgument("Liouville vector is not Hermitian (imaginary part " + std::to_string(imag) + ")");
  Vector64 real = v.coeffs().real().cast<Complex>();
  Matrix8 m = devectorizeOperator(real);
  m = 0.5 * (m + m.adjoint()).eval();
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > kDecodeTol) throw InvalidArgument("Liouville vector does not have unit trace");
  return DensityMatrix::trusted(m);
}

SuperOp conjugationSuperop(const Eigen::MatrixXcd& u) {
  if (u.rows() != u.cols()) throw InvalidArgument("unitary must be square");
  const int n = qubitsForHilbertDim(u.rows());
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  const double defect = (u.adjoint() * u - id).norm();
  if (defect > kUnitaryTol) throw InvalidArgument("matrix is not unitary (defect " + std::to_string(defect) + ")");
  const auto& basis = basisTable(n);
  const Eigen::Index dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd s(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const Eigen::MatrixXcd image = u * basis[b] * u.adjoint();
    for (Eigen::Index a = 0; a < dim; ++a) s(a, b) = innerProduct(basis[a], image);
  }
  return SuperOp(std::move(s));
}

const std::array<int, 8>& diagonalSectorIndices() {
  static const std::array<int, 8> idx = [] {
    std::array<int, 8> out{};
    int n = 0;
    for (int i : {0, 3})
      for (int j : {0, 3})
        for (int k : {0, 3}) out[n++] = i * 16 + j * 4 + k;
    return out;
  }();
  return idx;
}

char pauliLabel(int p) {
  static constexpr char labels[] = {'0', 'x', 'y', 'z'};
  return labels[p & 3];
}

void writeCsv(std::ostream& os, const LiouvilleVector& v) {
  os << "i,j,k,coeff\n";
  char buf[64];
  for (int idx = 0; idx < kLiouvilleDim; ++idx) {
    std::snprintf(buf, sizeof buf, "%.17g", v[idx].real());
    os << pauliLabel(idx >> 4) << ',' << pauliLabel(idx >> 2) << ',' << pauliLabel(idx) << ',' << buf << '\n';
  }
}

}  // namespace ccool
