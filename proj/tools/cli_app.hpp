#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccool_cli {

enum ExitCode { kOk = 0, kConfigError = 1, kPhysicsError = 2, kValidationFailure = 3 };

// Entry point shared by the executable and the tests. CSV goes to `out`
// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 17 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string formatNumber(double x);

// "a,b,c" or "min:max:steps"; "inf" allowed in lists when allowInf.
std::vector<double> parseValues(const std::string& spec, bool allowInf);

}  // namespace ccool_cli
