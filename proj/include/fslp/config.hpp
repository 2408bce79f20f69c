#pragma once
/// Run configuration: `key = value` text, one pair per line, `#` comments.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fslp/schemes.hpp"

namespace fslp {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct RunConfig {
  std::string case_name;
  SchemeConfig scheme;
  int nx = 0;  // 0 -> case default
  int ny = 0;
  double end_time = -1.0;  // < 0 -> case default
  std::vector<double> snapshot_times;
  std::string output_dir = ".";
  std::vector<std::string> formats{"csv"};
  std::uint64_t seed = 0;
  std::map<std::string, double> case_params;  // e.g. mach, beta
  bool cfl_explicit = false;
  std::map<std::string, int> param_lines;  // where each case parameter was set
};

/// Parses a whole config file.  Throws ConfigError carrying the line number.
RunConfig parse_config(const std::string& text);
/// Applies one `key=value` pair on top of an existing config (CLI overrides).
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value, int line = 0);
/// Fills defaults (CFL by scheme/order) and checks cross-field constraints.
void finalize(RunConfig& cfg);

}  // namespace fslp
