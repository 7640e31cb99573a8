#include "ccool/workflows.hpp"

#include "ccool/error.hpp"
#include "ccool/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace ccool {
namespace {

// Evaluates f(i) for i in [0, count) on a few worker threads; out[i] = f(i).
template <typename T, typename F>
std::vector<T> parallelMap(std::size_t count, F f) {
  std::vector<T> out(count);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) out[i] = f(i);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

double finalBeta1(const CycleConfig& cfg) {
  const Trajectory t = iterate(cfg);
  return spinBeta(reducedState(t.states.back(), 1), cfg.system.splitting(1));
}

}  // namespace

std::vector<CycleReport> runTrajectory(const CycleConfig& cfg) { return cycleReports(iterate(cfg), cfg.system); }

std::vector<SweepPoint> sweepTau(const CycleConfig& base, const std::vector<double>& tausT1) {
  base.validate();
  for (double t : tausT1) ContactTime::inT1(t, base.system);  // reject negatives before spawning work
  return parallelMap<SweepPoint>(tausT1.size(), [&](std::size_t i) {
    CycleConfig cfg = base;
    cfg.tau = std::isinf(tausT1[i]) ? ContactTime::infinite() : ContactTime::inT1(tausT1[i], base.system);
    return SweepPoint{tausT1[i], finalBeta1(cfg) / base.system.beta0};
  });
}

SweepReferences sweepReferences(const CycleConfig& base) {
  CycleConfig single = base;
  single.nCycles = 1;
  return SweepReferences{asymptoticBeta(base.system) / base.system.beta0, finalBeta1(single) / base.system.beta0};
}

EtaSurface etaSurfaceParallel(const CycleConfig& base, const std::vector<double>& deltaE2, const std::vector<double>& deltaE3) {
  const auto rows = parallelMap<EtaSurface>(deltaE2.size(), [&](std::size_t i) {
    return etaSurface(base, {deltaE2[i]}, deltaE3);
  });
  EtaSurface s;
  s.deltaE2 = deltaE2;
  s.deltaE3 = deltaE3;
  for (const auto& r : rows) s.eta1.insert(s.eta1.end(), r.eta1.begin(), r.eta1.end());
  return s;
}

ValidationReport validate(const CycleConfig& cfg, double tolerance) {
  const Trajectory t = iterate(cfg);
  const auto ref = oracle::runOracle(cfg);
  ValidationReport rep;
  rep.tolerance = tolerance;
  for (int n = 1; n <= cfg.nCycles; ++n) {
    const SingleQubitState s = reducedState(t.postBath(n), 1);
    const oracle::OracleCycle& o = ref[n - 1];
    ValidationRow row;
    row.n = n;
    row.betaEngine = spinBeta(s, cfg.system.splitting(1));
    row.betaOracle = o.beta[0];
    const double dBeta = row.betaEngine == row.betaOracle ? 0.0 : std::abs(row.betaEngine - row.betaOracle);
    row.absDiff = std::max(std::isnan(dBeta) ? std::numeric_limits<double>::infinity() : dBeta, std::abs(s.p0 - o.p0[0]));
    rep.maxDeviation = std::max(rep.maxDeviation, row.absDiff);
    rep.rows.push_back(row);
  }
  rep.passed = rep.maxDeviation < tolerance;
  return rep;
}

std::vector<double> linspace(double min, double max, int steps) {
  if (steps < 1) throw InvalidArgument("grid needs at least one step");
  std::vector<double> xs(steps);
  for (int i = 0; i < steps; ++i) xs[i] = steps == 1 ? min : min + (max - min) * i / (steps - 1);
  return xs;
}

}  // namespace ccool
