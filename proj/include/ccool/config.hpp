#pragma once

#include "ccool/cycle_engine.hpp"

#include <array>
#include <limits>
#include <string>
#include <string_view>

namespace ccool {

enum class TauUnits { T1, Natural };

// Contents of a run configuration file. Format: one `key = value` per line,
// `#` starts a comment. Keys:
//   delta_e = 1, 1, 1          (brackets optional)
//   beta0 = 1.0
//   lambda = 0.01
//   tau = 4 | inf
//   tau_units = T1 | natural
//   n_cycles = 300
//   variant = cyclic | boykin
//   cswap_polarity = excited | ground
//   include_hamiltonian = false
struct RunConfig {
  std::array<double, 3> deltaE{1.0, 1.0, 1.0};
  double beta0 = 1.0;
  double lambda = 0.01;
  double tau = std::numeric_limits<double>::infinity();  // inf = complete thermalization
  TauUnits tauUnits = TauUnits::T1;
  long long nCycles = 300;
  Variant variant = Variant::Cyclic;
  CswapPolarity polarity = CswapPolarity::Excited;
  bool includeHamiltonian = false;

  // Throws PhysicsError on constraint violations.
  CycleConfig toCycleConfig() const;
  // Canonical one-line `key=value;...` rendering, used as the CSV metadata line.
  std::string echo() const;
};

// Throws ConfigError with the offending line for syntax, type and unknown-key
// problems. Physical constraints are checked by toCycleConfig().
RunConfig parseRunConfig(std::string_view text);
RunConfig loadRunConfig(const std::string& path);

}  // namespace ccool
