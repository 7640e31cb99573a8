#include "ccool/ccool.h"

#include "ccool/config.hpp"
#include "ccool/error.hpp"
#include "ccool/workflows.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <new>
#include <string>

struct ccool_config {
  ccool::RunConfig cfg;
};

struct ccool_run {
  ccool::SpinSystem system;
  std::vector<ccool::CycleReport> rows;
};

struct ccool_validation {
  ccool::ValidationReport report;
};

namespace {

thread_local std::string lastError;

ccool_status fail(ccool_status code, const std::string& msg) {
  lastError = msg;
  return code;
}

// Runs f, translating exceptions into status codes.
template <typename F>
ccool_status guarded(F&& f) {
  try {
    f();
    return CCOOL_OK;
  } catch (const ccool::ConfigError& e) {
    return fail(CCOOL_ERR_CONFIG, e.what());
  } catch (const ccool::PhysicsError& e) {
    return fail(CCOOL_ERR_PHYSICS, e.what());
  } catch (const ccool::InvalidArgument& e) {
    return fail(CCOOL_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CCOOL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CCOOL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CCOOL_ERR_INTERNAL, "unknown error");
  }
}

#define CCOOL_REQUIRE(ptr) \
  if ((ptr) == nullptr) return fail(CCOOL_ERR_ARGUMENT, #ptr " must not be null")

double ratio(double beta, double beta0) {
  return beta0 == 0.0 ? std::numeric_limits<double>::quiet_NaN() : beta / beta0;
}

}  // namespace

extern "C" {

const char* ccool_version(void) { return "1.0.0"; }

const char* ccool_last_error(void) { return lastError.c_str(); }

ccool_status ccool_config_new(ccool_config** out) {
  CCOOL_REQUIRE(out);
  return guarded([&] { *out = new ccool_config{}; });
}

ccool_status ccool_config_parse(const char* text, ccool_config** out) {
  CCOOL_REQUIRE(text);
  CCOOL_REQUIRE(out);
  return guarded([&] { *out = new ccool_config{ccool::parseRunConfig(text)}; });
}

ccool_status ccool_config_load(const char* path, ccool_config** out) {
  CCOOL_REQUIRE(path);
  CCOOL_REQUIRE(out);
  return guarded([&] { *out = new ccool_config{ccool::loadRunConfig(path)}; });
}

ccool_status ccool_config_clone(const ccool_config* cfg, ccool_config** out) {
  CCOOL_REQUIRE(cfg);
  CCOOL_REQUIRE(out);
  return guarded([&] { *out = new ccool_config{*cfg}; });
}

void ccool_config_free(ccool_config* cfg) { delete cfg; }

ccool_status ccool_config_set_delta_e(ccool_config* cfg, const double delta_e[3]) {
  CCOOL_REQUIRE(cfg);
  CCOOL_REQUIRE(delta_e);
  cfg->cfg.deltaE = {delta_e[0], delta_e[1], delta_e[2]};
  return CCOOL_OK;
}

ccool_status ccool_config_set_beta0(ccool_config* cfg, double beta0) {
  CCOOL_REQUIRE(cfg);
  cfg->cfg.beta0 = beta0;
  return CCOOL_OK;
}

ccool_status ccool_config_set_lambda(ccool_config* cfg, double lambda) {
  CCOOL_REQUIRE(cfg);
  cfg->cfg.lambda = lambda;
  return CCOOL_OK;
}

ccool_status ccool_config_set_tau(ccool_config* cfg, double tau, ccool_tau_units units) {
  CCOOL_REQUIRE(cfg);
  if (units != CCOOL_TAU_T1 && units != CCOOL_TAU_NATURAL) return fail(CCOOL_ERR_ARGUMENT, "unknown tau units");
  cfg->cfg.tau = tau;
  cfg->cfg.tauUnits = units == CCOOL_TAU_T1 ? ccool::TauUnits::T1 : ccool::TauUnits::Natural;
  return CCOOL_OK;
}

ccool_status ccool_config_set_n_cycles(ccool_config* cfg, long long n_cycles) {
  CCOOL_REQUIRE(cfg);
  cfg->cfg.nCycles = n_cycles;
  return CCOOL_OK;
}

ccool_status ccool_config_set_variant(ccool_config* cfg, ccool_variant variant) {
  CCOOL_REQUIRE(cfg);
  if (variant != CCOOL_VARIANT_CYCLIC && variant != CCOOL_VARIANT_BOYKIN) return fail(CCOOL_ERR_ARGUMENT, "unknown variant");
  cfg->cfg.variant = variant == CCOOL_VARIANT_CYCLIC ? ccool::Variant::Cyclic : ccool::Variant::Boykin;
  return CCOOL_OK;
}

ccool_status ccool_config_set_polarity(ccool_config* cfg, ccool_polarity polarity) {
  CCOOL_REQUIRE(cfg);
  if (polarity != CCOOL_POLARITY_EXCITED && polarity != CCOOL_POLARITY_GROUND)
    return fail(CCOOL_ERR_ARGUMENT, "unknown polarity");
  cfg->cfg.polarity = polarity == CCOOL_POLARITY_EXCITED ? ccool::CswapPolarity::Excited : ccool::CswapPolarity::Ground;
  return CCOOL_OK;
}

ccool_status ccool_config_set_include_hamiltonian(ccool_config* cfg, int flag) {
  CCOOL_REQUIRE(cfg);
  cfg->cfg.includeHamiltonian = flag != 0;
  return CCOOL_OK;
}

ccool_status ccool_config_get_beta0(const ccool_config* cfg, double* out) {
  CCOOL_REQUIRE(cfg);
  CCOOL_REQUIRE(out);
  *out = cfg->cfg.beta0;
  return CCOOL_OK;
}

ccool_status ccool_config_get_n_cycles(const ccool_config* cfg, long long* out) {
  CCOOL_REQUIRE(cfg);
  CCOOL_REQUIRE(out);
  *out = cfg->cfg.nCycles;
  return CCOOL_OK;
}

ccool_status ccool_config_check(const ccool_config* cfg) {
  CCOOL_REQUIRE(cfg);
  return guarded([&] { cfg->cfg.toCycleConfig(); });
}

ccool_status ccool_config_echo(const ccool_config* cfg, char* buf, size_t len, size_t* needed) {
  CCOOL_REQUIRE(cfg);
  const std::string s = cfg->cfg.echo();
  if (needed) *needed = s.size() + 1;
  if (buf && len > 0) {
    const size_t n = std::min(len - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
  return CCOOL_OK;
}

ccool_status ccool_run_trajectory(const ccool_config* cfg, ccool_run** out) {
  CCOOL_REQUIRE(cfg);
  CCOOL_REQUIRE(out);
  return guarded([&] {
    const ccool::CycleConfig c = cfg->cfg.toCycleConfig();
    *out = new ccool_run{c.system, ccool::runTrajectory(c)};
  });
}

size_t ccool_run_rows(const ccool_run* run) { return run ? run->rows.size() : 0; }

ccool_status ccool_run_get_row(const ccool_run* run, size_t index, ccool_cycle_row* out) {
  CCOOL_REQUIRE(run);
  CCOOL_REQUIRE(out);
  if (index >= run->rows.size()) return fail(CCOOL_ERR_ARGUMENT, "row index out of range");
  const ccool::CycleReport& r = run->rows[index];
  out->n = r.n;
  for (int q = 0; q < 3; ++q) {
    out->beta[q] = r.beta[q];
    out->beta_ratio[q] = ratio(r.beta[q], run->system.beta0);
  }
  out->q = r.Q;
  out->w = r.W;
  out->delta_e23 = r.deltaE23;
  out->heat_bath = r.heatBath;
  out->eta_defined = r.eta.has_value();
  out->eta = r.eta.value_or(std::numeric_limits<double>::quiet_NaN());
  out->carnot_defined = r.carnotCop.has_value();
  out->carnot_cop = r.carnotCop.value_or(std::numeric_limits<double>::quiet_NaN());
  return CCOOL_OK;
}

void ccool_run_free(ccool_run* run) { delete run; }

ccool_status ccool_sweep_tau(const ccool_config* cfg, const double* taus_t1, size_t count, double* out) {
  CCOOL_REQUIRE(cfg);
  if (count > 0) {
    CCOOL_REQUIRE(taus_t1);
    CCOOL_REQUIRE(out);
  }
  return guarded([&] {
    const ccool::CycleConfig c = cfg->cfg.toCycleConfig();
    const auto pts = ccool::sweepTau(c, std::vector<double>(taus_t1, taus_t1 + count));
    for (size_t i = 0; i < count; ++i) out[i] = pts[i].beta1RatioFinal;
  });
}

ccool_status ccool_sweep_references(const ccool_config* cfg, double* asymptotic_bound, double* single_application) {
  CCOOL_REQUIRE(cfg);
  CCOOL_REQUIRE(asymptotic_bound);
  CCOOL_REQUIRE(single_application);
  return guarded([&] {
    const auto ref = ccool::sweepReferences(cfg->cfg.toCycleConfig());
    *asymptotic_bound = ref.asymptoticBound;
    *single_application = ref.singleApplication;
  });
}

ccool_status ccool_eta_surface(const ccool_config* cfg, const double* delta_e2, size_t n2, const double* delta_e3,
                               size_t n3, double* eta_out, int* defined_out) {
  CCOOL_REQUIRE(cfg);
  CCOOL_REQUIRE(delta_e2);
  CCOOL_REQUIRE(delta_e3);
  CCOOL_REQUIRE(eta_out);
  CCOOL_REQUIRE(defined_out);
  return guarded([&] {
    const ccool::CycleConfig c = cfg->cfg.toCycleConfig();
    for (size_t i = 0; i < n2; ++i)
      if (!(delta_e2[i] > 0.0)) throw ccool::PhysicsError("deltaE2 grid values must be > 0");
    for (size_t i = 0; i < n3; ++i)
      if (!(delta_e3[i] > 0.0)) throw ccool::PhysicsError("deltaE3 grid values must be > 0");
    const auto s = ccool::etaSurfaceParallel(c, std::vector<double>(delta_e2, delta_e2 + n2),
                                             std::vector<double>(delta_e3, delta_e3 + n3));
    for (size_t i = 0; i < s.eta1.size(); ++i) {
      defined_out[i] = s.eta1[i].has_value();
      eta_out[i] = s.eta1[i].value_or(std::numeric_limits<double>::quiet_NaN());
    }
  });
}

ccool_status ccool_asymptotic_beta(const ccool_config* cfg, double* out) {
  CCOOL_REQUIRE(cfg);
  CCOOL_REQUIRE(out);
  return guarded([&] { *out = ccool::asymptoticBeta(cfg->cfg.toCycleConfig().system); });
}

ccool_status ccool_fixed_point_beta(const ccool_config* cfg, double beta_out[3], int* fixed_dimension) {
  CCOOL_REQUIRE(cfg);
  CCOOL_REQUIRE(beta_out);
  ccool::FixedPoint fp;
  ccool::SpinSystem sys;
  const ccool_status st = guarded([&] {
    const ccool::CycleConfig c = cfg->cfg.toCycleConfig();
    sys = c.system;
    fp = ccool::fixedPoint(ccool::cycleSuperop(c));
  });
  if (st != CCOOL_OK) return st;
  if (fixed_dimension) *fixed_dimension = fp.fixedDimension;
  if (!fp.state) return fail(CCOOL_ERR_PHYSICS, "fixed space of the cycle map has dimension " + std::to_string(fp.fixedDimension));
  return guarded([&] {
    for (int q = 1; q <= 3; ++q) beta_out[q - 1] = ccool::spinBeta(ccool::reducedState(*fp.state, q), sys.splitting(q));
  });
}

ccool_status ccool_validate(const ccool_config* cfg, ccool_validation** out) {
  CCOOL_REQUIRE(cfg);
  CCOOL_REQUIRE(out);
  return guarded([&] { *out = new ccool_validation{ccool::validate(cfg->cfg.toCycleConfig())}; });
}

int ccool_validation_passed(const ccool_validation* v) { return v && v->report.passed ? 1 : 0; }

double ccool_validation_max_deviation(const ccool_validation* v) {
  return v ? v->report.maxDeviation : std::numeric_limits<double>::quiet_NaN();
}

size_t ccool_validation_rows(const ccool_validation* v) { return v ? v->report.rows.size() : 0; }

ccool_status ccool_validation_get_row(const ccool_validation* v, size_t index, ccool_validation_row* out) {
  CCOOL_REQUIRE(v);
  CCOOL_REQUIRE(out);
  if (index >= v->report.rows.size()) return fail(CCOOL_ERR_ARGUMENT, "row index out of range");
  const auto& r = v->report.rows[index];
  *out = ccool_validation_row{r.n, r.betaEngine, r.betaOracle, r.absDiff};
  return CCOOL_OK;
}

void ccool_validation_free(ccool_validation* v) { delete v; }

}  // extern "C"
