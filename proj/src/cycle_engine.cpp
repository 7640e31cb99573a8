#include "ccool/cycle_engine.hpp"

#include "ccool/error.hpp"
#include "ccool/thermal_channel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace ccool {
namespace {

constexpr double kNullTol = 1e-9;
constexpr double kConditionLimit = 1e8;

}  // namespace

void CycleConfig::validate() const {
  system.validate();
  if (nCycles < 1) throw PhysicsError("n_cycles must be >= 1");
}

GateSpec CycleConfig::gate() const {
  return GateSpec{variant == Variant::Cyclic ? GateKind::Algorithm : GateKind::Boykin, polarity};
}

LiouvilleVector thermalState(const SpinSystem& system) {
  LiouvilleVector v;
  const double norm = 1.0 / (2.0 * std::sqrt(2.0));
  for (int idx : diagonalSectorIndices()) {
    double c = norm;
    for (int q = 1; q <= 3; ++q) {
      if (((idx >> (2 * (3 - q))) & 3) == 3) c *= system.equilibriumBias(q);
    }
    v[idx] = c;
  }
  return v;
}

SuperOp cycleSuperop(const CycleConfig& cfg) {
  cfg.validate();
  return bathChannel23(cfg.tau, cfg.system, cfg.includeHamiltonian) * gateSuperop(cfg.gate());
}

Trajectory iterate(const CycleConfig& cfg, const std::optional<LiouvilleVector>& rho0) {
  cfg.validate();
  const SuperOp gates = gateSuperop(cfg.gate());
  const SuperOp bath = bathChannel23(cfg.tau, cfg.system, cfg.includeHamiltonian);

  Trajectory t;
  t.states.reserve(cfg.nCycles + 1);
  t.midStates.reserve(cfg.nCycles);
  t.states.push_back(rho0 ? *rho0 : thermalState(cfg.system));
  for (int n = 1; n <= cfg.nCycles; ++n) {
    t.midStates.push_back(gates * t.states.back());
    t.states.push_back(bath * t.midStates.back());
  }
  return t;
}

FixedPoint fixedPoint(const SuperOp& b) {
  const int dim = b.dim();
  const Eigen::MatrixXcd m = b.matrix() - Eigen::MatrixXcd::Identity(dim, dim);

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  const double scale = std::max(1.0, sv(0));
  FixedPoint fp;
  fp.fixedDimension = static_cast<int>((sv.array() < kNullTol * scale).count());
  if (fp.fixedDimension != 1) return fp;

  // The identity-component row of B - I vanishes for a trace-preserving B;
  // replace it by the normalization condition.
  Eigen::MatrixXcd a = m;
  a.row(0).setZero();
  a(0, 0) = 1.0;
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dim);
  rhs(0) = std::pow(2.0, -0.5 * b.qubits());
  const Eigen::VectorXcd v = a.fullPivLu().solve(rhs);

  fp.residual = (b.matrix() * v - v).norm();
  if (dim == kLiouvilleDim) fp.state = LiouvilleVector(Vector64(v));
  return fp;
}

double asymptoticBeta(const SpinSystem& system) {
  return (system.deltaE[1] + system.deltaE[2]) / system.deltaE[0] * system.beta0;
}

SpectralReport spectralReport(const SuperOp& b) {
  if (b.dim() != kLiouvilleDim) throw InvalidArgument("spectralReport expects a 3-qubit superoperator");
  const auto& sector = diagonalSectorIndices();
  Eigen::MatrixXcd sub(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) sub(r, c) = b(sector[r], sector[c]);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(sub);
  if (es.info() != Eigen::Success) throw Error("eigen decomposition of the cycle map failed");

  std::vector<int> order(8);
  for (int i = 0; i < 8; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return std::abs(es.eigenvalues()(x)) > std::abs(es.eigenvalues()(y));
  });

  SpectralReport rep;
  for (int i : order) rep.eigenvalues.push_back(es.eigenvalues()(i));
  rep.leadingEigenvector = es.eigenvectors().col(order[0]);
  rep.subdominantModulus = std::abs(rep.eigenvalues[1]);
  if (rep.subdominantModulus >= 1.0)
    rep.convergenceScale = std::numeric_limits<double>::infinity();
  else if (rep.subdominantModulus == 0.0)
    rep.convergenceScale = 0.0;
  else
    rep.convergenceScale = -1.0 / std::log(rep.subdominantModulus);

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(es.eigenvectors());
  const auto& sv = svd.singularValues();
  rep.eigenvectorCondition = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
  rep.nonDiagonalizable = rep.eigenvectorCondition > kConditionLimit;
  return rep;
}

}  // namespace ccool
