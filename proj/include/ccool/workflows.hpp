#pragma once

// Batch computations behind the command-line tools: trajectories, contact-time
// sweeps, efficiency surfaces and engine/oracle validation.

#include "ccool/cycle_engine.hpp"
#include "ccool/thermo.hpp"

#include <vector>

namespace ccool {

std::vector<CycleReport> runTrajectory(const CycleConfig& cfg);

struct SweepPoint {
  double tauT1 = 0.0;
  double beta1RatioFinal = 0.0;  // beta_1(nCycles)/beta0
};

// One full trajectory per contact time (in T1 units), evaluated in parallel;
// results follow the input order.
std::vector<SweepPoint> sweepTau(const CycleConfig& base, const std::vector<double>& tausT1);

struct SweepReferences {
  double asymptoticBound = 0.0;    // asymptoticBeta/beta0
  double singleApplication = 0.0;  // beta_1(1)/beta0
};

SweepReferences sweepReferences(const CycleConfig& base);

// Parallel over deltaE2 rows; same result as etaSurface().
EtaSurface etaSurfaceParallel(const CycleConfig& base, const std::vector<double>& deltaE2, const std::vector<double>& deltaE3);

struct ValidationRow {
  int n = 0;
  double betaEngine = 0.0;  // raw beta_1 after cycle n
  double betaOracle = 0.0;
  double absDiff = 0.0;     // max(|delta beta_1|, |delta p0_1|)
};

struct ValidationReport {
  std::vector<ValidationRow> rows;
  double maxDeviation = 0.0;
  double tolerance = 1e-9;
  bool passed = false;
};

ValidationReport validate(const CycleConfig& cfg, double tolerance = 1e-9);

// Evenly spaced points min..max inclusive; steps == 1 yields {min}.
std::vector<double> linspace(double min, double max, int steps);

}  // namespace ccool
