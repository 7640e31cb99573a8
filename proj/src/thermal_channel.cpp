#include "ccool/thermal_channel.hpp"

#include "ccool/error.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <utility>

namespace ccool {
namespace {

// Single-spin operator embedded at `qubit` (1-based, qubit 1 most significant).
Eigen::MatrixXcd embed(const Eigen::Matrix2cd& op, int qubit, int nQubits) {
  const Eigen::MatrixXcd left = Eigen::MatrixXcd::Identity(1 << (qubit - 1), 1 << (qubit - 1));
  const Eigen::MatrixXcd right = Eigen::MatrixXcd::Identity(1 << (nQubits - qubit), 1 << (nQubits - qubit));
  return Eigen::kroneckerProduct(Eigen::kroneckerProduct(left, op).eval(), right);
}

struct Site {
  int position;  // 1-based within the register
  double deltaE;
};

SuperOp buildGenerator(int nQubits, const std::vector<Site>& sites, const SpinSystem& system, bool includeHamiltonian) {
  Eigen::Matrix2cd lower;  // sigma_- = |0><1|
  lower << 0, 1, 0, 0;
  const Complex i(0.0, 1.0);
  const int dim = 1 << (2 * nQubits);

  struct Term {
    Eigen::MatrixXcd a, aDag, aDagA;
    double rate;
  };
  std::vector<Term> terms;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(1 << nQubits, 1 << nQubits);
  for (const auto& site : sites) {
    const ThermalRates r = rates(site.deltaE, system);
    const Eigen::MatrixXcd down = embed(lower, site.position, nQubits);
    const Eigen::MatrixXcd up = down.adjoint();
    terms.push_back({down, up, up * down, r.wDown});
    terms.push_back({up, down, down * up, r.wUp});
    if (includeHamiltonian) h += embed(-0.5 * site.deltaE * pauliMatrix(Pauli::Z), site.position, nQubits);
  }

  Eigen::MatrixXcd g(dim, dim);
  for (int b = 0; b < dim; ++b) {
    const Eigen::MatrixXcd rho = pauliBasisElement(nQubits, b);
    Eigen::MatrixXcd out = -i * (h * rho - rho * h);
    for (const auto& t : terms) out += t.rate * (2.0 * t.a * rho * t.aDag - rho * t.aDagA - t.aDagA * rho);
    g.col(b) = vectorizeOperator(out);
  }
  return SuperOp(std::move(g));
}

}  // namespace

ThermalRates rates(double deltaE, const SpinSystem& system) {
  const double x = deltaE * system.beta0;
  // logistic forms; identical to lambda/(1 + 1/eps) and lambda/(1 + eps)
  return ThermalRates{system.lambda / (1.0 + std::exp(-x)), system.lambda / (1.0 + std::exp(x)), std::exp(x)};
}

SuperOp lindbladGenerator(const SpinSystem& system, const std::vector<int>& qubits, bool includeHamiltonian) {
  std::vector<Site> sites;
  for (int q : qubits) {
    if (q < 1 || q > kQubits) throw InvalidArgument("qubit index must be 1, 2 or 3");
    sites.push_back({q, system.splitting(q)});
  }
  return buildGenerator(kQubits, sites, system, includeHamiltonian);
}

SuperOp singleQubitGenerator(double deltaE, const SpinSystem& system, bool includeHamiltonian) {
  return buildGenerator(1, {{1, deltaE}}, system, includeHamiltonian);
}

Eigen::Matrix2d diagonalSectorMap(const ContactTime& tau, double deltaE, const SpinSystem& system) {
  const double f = tau.isInfinite() ? 0.0 : std::exp(-2.0 * system.lambda * tau.natural());
  const double bias = std::tanh(0.5 * deltaE * system.beta0);
  Eigen::Matrix2d m;
  m << 1.0, 0.0, (1.0 - f) * bias, f;
  return m;
}

SuperOp singleQubitChannel(const ContactTime& tau, double deltaE, const SpinSystem& system, bool includeHamiltonian) {
  const Eigen::Matrix2d diag = diagonalSectorMap(tau, deltaE, system);
  double decay = 0.0, c = 1.0, s = 0.0;
  if (!tau.isInfinite()) {
    decay = std::exp(-system.lambda * tau.natural());
    if (includeHamiltonian) {
      c = std::cos(deltaE * tau.natural());
      s = std::sin(deltaE * tau.natural());
    }
  }
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = diag(0, 0);
  m(3, 0) = diag(1, 0);
  m(3, 3) = diag(1, 1);
  m(1, 1) = decay * c;
  m(1, 2) = decay * s;
  m(2, 1) = -decay * s;
  m(2, 2) = decay * c;
  return SuperOp(Eigen::MatrixXcd(m));
}

SuperOp bathChannel23(const ContactTime& tau, const SpinSystem& system, bool includeHamiltonian) {
  return SuperOp::identity(1)
      .tensor(singleQubitChannel(tau, system.splitting(2), system, includeHamiltonian))
      .tensor(singleQubitChannel(tau, system.splitting(3), system, includeHamiltonian));
}

SuperOp channelFromGenerator(const SuperOp& generator, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("channelFromGenerator needs a finite t >= 0");
  const Eigen::MatrixXcd scaled = generator.matrix() * t;
  return SuperOp(Eigen::MatrixXcd(scaled.exp()));
}

}  // namespace ccool
