#include "ccool/config.hpp"

#include "ccool/error.hpp"

#include <cctype>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

namespace ccool {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string unquote(std::string_view s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) s = s.substr(1, s.size() - 2);
  return std::string(s);
}

double parseReal(std::string_view raw, std::string_view key, int line, bool allowInf = false) {
  const std::string v = lower(unquote(trim(raw)));
  if (allowInf && (v == "inf" || v == "infinity")) return std::numeric_limits<double>::infinity();
  if (v.empty()) throw ConfigError("empty value for '" + std::string(key) + "'", line);
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size() || errno == ERANGE || !std::isfinite(x))
    throw ConfigError("'" + std::string(key) + "' expects a finite number" + (allowInf ? " or inf" : "") + ", got '" + v + "'", line);
  return x;
}

long long parseInteger(std::string_view raw, std::string_view key, int line) {
  const std::string_view v = trim(raw);
  long long x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || ptr != v.data() + v.size() || v.empty())
    throw ConfigError("'" + std::string(key) + "' expects an integer, got '" + std::string(v) + "'", line);
  return x;
}

bool parseBool(std::string_view raw, std::string_view key, int line) {
  const std::string v = lower(unquote(trim(raw)));
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("'" + std::string(key) + "' expects true or false, got '" + v + "'", line);
}

template <typename E>
E parseChoice(std::string_view raw, std::string_view key, int line, std::initializer_list<std::pair<const char*, E>> choices) {
  const std::string v = lower(unquote(trim(raw)));
  std::string allowed;
  for (const auto& [name, value] : choices) {
    if (v == lower(name)) return value;
    allowed += allowed.empty() ? name : std::string(" | ") + name;
  }
  throw ConfigError("'" + std::string(key) + "' must be one of " + allowed + ", got '" + v + "'", line);
}

std::array<double, 3> parseTriple(std::string_view raw, std::string_view key, int line) {
  std::string_view v = trim(raw);
  if (!v.empty() && v.front() == '[') {
    if (v.back() != ']') throw ConfigError("unterminated '[' in '" + std::string(key) + "'", line);
    v = v.substr(1, v.size() - 2);
  }
  std::vector<double> xs;
  while (true) {
    const auto comma = v.find(',');
    xs.push_back(parseReal(v.substr(0, comma), key, line));
    if (comma == std::string_view::npos) break;
    v = v.substr(comma + 1);
  }
  if (xs.size() != 3) throw ConfigError("'" + std::string(key) + "' expects 3 values, got " + std::to_string(xs.size()), line);
  return {xs[0], xs[1], xs[2]};
}

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

RunConfig parseRunConfig(std::string_view text) {
  RunConfig cfg;
  std::set<std::string> seen;
  int lineNo = 0;
  while (!text.empty()) {
    ++lineNo;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", lineNo);
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("missing key before '='", lineNo);
    if (!seen.insert(key).second) throw ConfigError("duplicate key '" + key + "'", lineNo);

    if (key == "delta_e") {
      cfg.deltaE = parseTriple(value, key, lineNo);
    } else if (key == "beta0") {
      cfg.beta0 = parseReal(value, key, lineNo);
    } else if (key == "lambda") {
      cfg.lambda = parseReal(value, key, lineNo);
    } else if (key == "tau") {
      cfg.tau = parseReal(value, key, lineNo, true);
    } else if (key == "tau_units") {
      cfg.tauUnits = parseChoice<TauUnits>(value, key, lineNo, {{"T1", TauUnits::T1}, {"natural", TauUnits::Natural}});
    } else if (key == "n_cycles") {
      cfg.nCycles = parseInteger(value, key, lineNo);
    } else if (key == "variant") {
      cfg.variant = parseChoice<Variant>(value, key, lineNo, {{"cyclic", Variant::Cyclic}, {"boykin", Variant::Boykin}});
    } else if (key == "cswap_polarity") {
      cfg.polarity = parseChoice<CswapPolarity>(value, key, lineNo,
                                                {{"excited", CswapPolarity::Excited}, {"ground", CswapPolarity::Ground}});
    } else if (key == "include_hamiltonian") {
      cfg.includeHamiltonian = parseBool(value, key, lineNo);
    } else {
      throw ConfigError("unknown key '" + key + "'", lineNo);
    }
  }
  return cfg;
}

RunConfig loadRunConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parseRunConfig(ss.str());
}

CycleConfig RunConfig::toCycleConfig() const {
  CycleConfig c;
  c.system.deltaE = deltaE;
  c.system.beta0 = beta0;
  c.system.lambda = lambda;
  c.system.validate();
  if (nCycles < 1 || nCycles > std::numeric_limits<int>::max()) throw PhysicsError("n_cycles must be >= 1");
  c.nCycles = static_cast<int>(nCycles);
  if (std::isinf(tau) && tau > 0)
    c.tau = ContactTime::infinite();
  else
    c.tau = tauUnits == TauUnits::T1 ? ContactTime::inT1(tau, c.system) : ContactTime::natural(tau);
  c.variant = variant;
  c.polarity = polarity;
  c.includeHamiltonian = includeHamiltonian;
  return c;
}

std::string RunConfig::echo() const {
  std::string s;
  s += "delta_e=" + fmt(deltaE[0]) + "," + fmt(deltaE[1]) + "," + fmt(deltaE[2]);
  s += ";beta0=" + fmt(beta0);
  s += ";lambda=" + fmt(lambda);
  s += ";tau=" + fmt(tau);
  s += std::string(";tau_units=") + (tauUnits == TauUnits::T1 ? "T1" : "natural");
  s += ";n_cycles=" + std::to_string(nCycles);
  s += std::string(";variant=") + (variant == Variant::Cyclic ? "cyclic" : "boykin");
  s += std::string(";cswap_polarity=") + (polarity == CswapPolarity::Excited ? "excited" : "ground");
  s += std::string(";include_hamiltonian=") + (includeHamiltonian ? "true" : "false");
  return s;
}

}  // namespace ccool
