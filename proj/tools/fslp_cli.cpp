// fslp: batch driver for the Lagrange-projection solvers.
//
//   fslp run <config> [--override key=value]...
//   fslp perf <case> --schemes fslp,oslp --nx 100,200
//   fslp convergence <case> --resolutions 32,64,128 [--scheme fslp --order 2]
//   fslp list-cases
//
// Exit codes: 0 success, 1 solver error, 2 config error.  FSLP_THREADS sets
// the OpenMP worker count.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fslp/cases.hpp"
#include "fslp/config.hpp"
#include "fslp/io.hpp"
#include "fslp/perf.hpp"

using namespace fslp;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');)
    if (!t.empty()) out.push_back(t);
  return out;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& t : split(s)) {
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (*end || v <= 0) throw ConfigError("bad resolution '" + t + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string stem(const RunConfig& c, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "_t%.6g", t);
  return c.case_name + "_" + to_string(c.scheme.scheme) + std::to_string(c.scheme.order) + buf;
}

int cmd_run(const std::string& path, const std::vector<std::string>& overrides) {
  RunConfig c;
  try {
    c = parse_config(slurp(path));
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw ConfigError("override '" + o + "' is not key=value");
      apply_setting(c, o.substr(0, eq), o.substr(eq + 1));
    }
    finalize(c);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << path << ": " << e.what() << '\n';
    return 2;
  }
  const CaseSpec spec = make_case(c.case_name, c.case_params);
  RunOptions opts;
  opts.end_time = c.end_time;
  opts.snapshot_times = c.snapshot_times;
  RunResult r = run_case(spec, c.scheme, {c.nx, c.ny}, opts);

  std::filesystem::create_directories(c.output_dir);
  auto dump = [&](const Grid& g, double t) {
    for (const auto& f : c.formats) {
      const FieldFormat ff = format_from_string(f);
      const std::string p = (std::filesystem::path(c.output_dir) / (stem(c, t) + extension(ff))).string();
      write_fields(g, spec.gas, ff, p);
      std::cout << "wrote " << p << '\n';
    }
  };
  for (const auto& s : r.snapshots) dump(s.grid, s.time);
  dump(r.final_grid, r.report.final_time);

  const DiagnosticsReport& d = r.report;
  std::printf("case=%s scheme=%s order=%d nx=%d ny=%d\n", spec.name.c_str(), to_string(c.scheme.scheme).c_str(),
              c.scheme.order, r.final_grid.nx(), r.final_grid.ny());
  std::printf("t=%.6g steps=%ld wall=%.3fs mean_step=%.3es\n", d.final_time, d.step_count, d.wall_time,
              d.mean_step_time);
  if (spec.reference != ReferenceKind::None) std::printf("L1(rho)=%.6e Linf(rho)=%.6e\n", d.l1_density, d.linf_density);
  std::printf("ekin_ratio=%.6f max|u|=%.6e min_rho=%.6e min_rhoe=%.6e\n", d.ekin_ratio, d.max_abs_velocity,
              d.min_density, d.min_internal_energy);
  if (c.scheme.diagnostics) std::printf("entropy_residual_min=%.6e\n", d.entropy_residual_min);
  if (d.subcharacteristic_warnings) std::printf("subcharacteristic_warnings=%ld\n", d.subcharacteristic_warnings);
  return 0;
}

int cmd_perf(const std::string& name, const std::string& schemes, const std::string& nx, double t_end) {
  std::vector<Scheme> ss;
  std::vector<Resolution> res;
  CaseSpec spec;
  try {
    for (const auto& s : split(schemes)) ss.push_back(scheme_from_string(s));
    for (int n : int_list(nx)) res.push_back({n, 0});
    if (res.empty()) res.push_back({0, 0});
    spec = make_case(name);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  std::vector<PerfRecord> recs;
  try {
    recs = perf_compare(spec, res, ss, t_end);
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  std::printf("%-6s %6s %6s %8s %12s %10s %12s  (ratios to fslp: steps time memory)\n", "scheme", "nx", "ny",
              "steps", "mean_step_s", "total_s", "buffer_B");
  for (const auto& p : recs)
    std::printf("%-6s %6d %6d %8ld %12.4e %10.4f %12zu  (%.3f %.3f %.3f)\n", to_string(p.scheme).c_str(), p.nx, p.ny,
                p.step_count, p.mean_step_time, p.total_time, p.field_buffer_bytes, p.step_ratio, p.time_ratio,
                p.memory_ratio);
  return 0;
}

int cmd_convergence(const std::string& name, const std::string& resolutions, const std::string& scheme, int order,
                    double t_end) {
  CaseSpec spec;
  SchemeConfig cfg;
  std::vector<int> ns;
  try {
    spec = make_case(name);
    cfg = SchemeConfig::make(scheme_from_string(scheme), order);
    ns = int_list(resolutions);
    if (ns.size() < 2) throw ConfigError("need at least two resolutions");
    if (spec.reference == ReferenceKind::None) throw ConfigError("case '" + name + "' has no reference solution");
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  const ConvergenceResult c = convergence_study(spec, cfg, ns, t_end);
  std::printf("%8s %14s %14s\n", "N", "L1(rho)", "Linf(rho)");
  for (std::size_t k = 0; k < ns.size(); ++k) std::printf("%8d %14.6e %14.6e\n", ns[k], c.l1[k], c.linf[k]);
  std::printf("order L1=%.3f Linf=%.3f\n", c.order_l1, c.order_linf);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* th = std::getenv("FSLP_THREADS")) {
    const int n = std::atoi(th);
    if (n > 0) omp_set_num_threads(n);
  }
  CLI::App app{"Lagrange-projection Euler solver with gravity"};
  app.require_subcommand(1);

  std::string cfg_path;
  std::vector<std::string> overrides;
  auto* run = app.add_subcommand("run", "run a case from a config file");
  run->add_option("config", cfg_path, "config file (key = value)")->required();
  run->add_option("--override,-o", overrides, "key=value applied after the file");

  std::string perf_case, perf_schemes = "fslp,oslp", perf_nx;
  double perf_t = -1.0;
  auto* perf = app.add_subcommand("perf", "compare step counts, timings and buffer memory");
  perf->add_option("case", perf_case)->required();
  perf->add_option("--schemes", perf_schemes, "comma-separated schemes");
  perf->add_option("--nx", perf_nx, "comma-separated resolutions");
  perf->add_option("--t-end", perf_t, "end time override");

  std::string conv_case, conv_res = "32,64,128", conv_scheme = "fslp";
  int conv_order = 1;
  double conv_t = -1.0;
  auto* conv = app.add_subcommand("convergence", "error norms and fitted order over resolutions");
  conv->add_option("case", conv_case)->required();
  conv->add_option("--resolutions", conv_res, "comma-separated N");
  conv->add_option("--scheme", conv_scheme);
  conv->add_option("--order", conv_order);
  conv->add_option("--t-end", conv_t, "end time override");

  auto* list = app.add_subcommand("list-cases", "print the registered cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*run) return cmd_run(cfg_path, overrides);
    if (*perf) return cmd_perf(perf_case, perf_schemes, perf_nx, perf_t);
    if (*conv) return cmd_convergence(conv_case, conv_res, conv_scheme, conv_order, conv_t);
    if (*list) {
      for (const auto& n : case_names()) std::printf("%-18s %s\n", n.c_str(), make_case(n).description.c_str());
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
