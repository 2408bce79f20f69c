#include "fslp/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "fslp/cases.hpp"
#include "fslp/io.hpp"

namespace fslp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

double to_double(const std::string& key, const std::string& v, int line) {
  double x = 0.0;
  const auto* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || p != end || !std::isfinite(x)) throw ConfigError("malformed number for '" + key + "': '" + v + "'", line);
  return x;
}

long to_int(const std::string& key, const std::string& v, int line) {
  long x = 0;
  const auto* end = v.data() + v.size();
  auto [p, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || p != end) throw ConfigError("malformed integer for '" + key + "': '" + v + "'", line);
  return x;
}

bool to_bool(const std::string& key, const std::string& v, int line) {
  const std::string l = lower(v);
  if (l == "true" || l == "on" || l == "yes" || l == "1") return true;
  if (l == "false" || l == "off" || l == "no" || l == "0") return false;
  throw ConfigError("malformed boolean for '" + key + "': '" + v + "'", line);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

void apply_setting(RunConfig& c, const std::string& key_in, const std::string& value_in, int line) {
  const std::string key = lower(trim(key_in)), v = trim(value_in);
  if (v.empty()) throw ConfigError("empty value for '" + key + "'", line);
  SchemeConfig& s = c.scheme;
  if (key == "case") {
    const auto names = case_names();
    if (std::find(names.begin(), names.end(), v) == names.end()) throw ConfigError("unknown case '" + v + "'", line);
    c.case_name = v;
  } else if (key == "scheme") {
    try {
      s.scheme = scheme_from_string(v);
    } catch (const std::exception& e) {
      throw ConfigError(e.what(), line);
    }
  } else if (key == "order") {
    const long o = to_int(key, v, line);
    if (o != 1 && o != 2) throw ConfigError("order must be 1 or 2", line);
    s.order = static_cast<int>(o);
  } else if (key == "nx" || key == "ny") {
    const long n = to_int(key, v, line);
    if (n <= 0) throw ConfigError(key + " must be positive", line);
    (key == "nx" ? c.nx : c.ny) = static_cast<int>(n);
  } else if (key == "t_end" || key == "end_time") {
    c.end_time = to_double(key, v, line);
    if (!(c.end_time > 0.0)) throw ConfigError("t_end must be positive", line);
  } else if (key == "c_cfl" || key == "cfl") {
    s.c_cfl = to_double(key, v, line);
    c.cfl_explicit = true;
  } else if (key == "k") {
    s.K = to_double(key, v, line);
  } else if (key == "theta_policy") {
    const std::string l = lower(v);
    if (l == "all_regime" || l == "allregime" || l == "auto")
      s.theta_policy = ThetaPolicy::AllRegime;
    else if (l == "fixed")
      s.theta_policy = ThetaPolicy::Fixed;
    else
      throw ConfigError("unknown theta_policy '" + v + "'", line);
  } else if (key == "theta") {
    s.theta_fixed = to_double(key, v, line);
    s.theta_policy = ThetaPolicy::Fixed;
  } else if (key == "limiter") {
    if (lower(v) != "minmod") throw ConfigError("unknown limiter '" + v + "'", line);
    s.limiter = Limiter::Minmod;
  } else if (key == "time_integrator") {
    const std::string l = lower(v);
    if (l == "hancock" || l == "muscl_hancock")
      s.time_integrator = TimeIntegrator::Hancock;
    else if (l == "ssp_rk2" || l == "rk2")
      s.time_integrator = TimeIntegrator::SspRk2;
    else
      throw ConfigError("unknown time_integrator '" + v + "'", line);
  } else if (key == "snapshots") {
    c.snapshot_times.clear();
    for (const auto& t : split_list(v)) c.snapshot_times.push_back(to_double(key, t, line));
  } else if (key == "output_dir") {
    c.output_dir = v;
  } else if (key == "formats" || key == "format") {
    c.formats = split_list(lower(v));
    for (const auto& f : c.formats) {
      try {
        format_from_string(f);
      } catch (const std::exception& e) {
        throw ConfigError(e.what(), line);
      }
    }
  } else if (key == "diagnostics") {
    s.diagnostics = to_bool(key, v, line);
  } else if (key == "seed") {
    const long x = to_int(key, v, line);
    if (x < 0) throw ConfigError("seed must be non-negative", line);
    c.seed = static_cast<std::uint64_t>(x);
  } else if (key == "mach" || key == "beta" || key == "g" || key == "C" || key == "c" || key == "p0" ||
             key == "t0" || key == "dtdy" || key == "rho0") {
    // case parameters; membership is checked once the case is known
    static const std::map<std::string, std::string> canon{{"c", "C"}, {"t0", "T0"}, {"dtdy", "dTdy"}};
    const auto it = canon.find(key);
    const std::string k = it == canon.end() ? key : it->second;
    c.case_params[k] = to_double(key, v, line);
    c.param_lines[k] = line;
  } else {
    throw ConfigError("unknown key '" + key_in + "'", line);
  }
}

void finalize(RunConfig& c) {
  if (c.case_name.empty()) throw ConfigError("missing required key 'case'");
  if (!c.cfl_explicit) c.scheme.c_cfl = SchemeConfig::default_cfl(c.scheme.scheme, c.scheme.order);
  try {
    c.scheme.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  const CaseSpec probe = make_case(c.case_name);
  for (const auto& [k, v] : c.case_params)
    if (!probe.params.count(k)) {
      const auto it = c.param_lines.find(k);
      throw ConfigError("case '" + c.case_name + "' has no parameter '" + k + "'", it == c.param_lines.end() ? 0 : it->second);
    }
  try {
    make_case(c.case_name, c.case_params);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("expected 'key = value'", line);
    apply_setting(c, body.substr(0, eq), body.substr(eq + 1), line);
  }
  finalize(c);
  return c;
}

}  // namespace fslp
