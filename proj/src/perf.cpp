#include "fslp/perf.hpp"

#include <stdexcept>

namespace fslp {

std::size_t field_buffer_bytes(const Grid& grid, const GasParams& gas, const SchemeConfig& cfg) {
  const Solver s(gas, cfg);
  return static_cast<std::size_t>(s.field_buffers()) * grid.size() * sizeof(ConservativeState);
}

std::vector<PerfRecord> perf_compare(const CaseSpec& spec, const std::vector<Resolution>& resolutions,
                                     const std::vector<Scheme>& schemes, double end_time) {
  bool has_f = false, has_o = false;
  for (Scheme s : schemes) {
    has_f |= s == Scheme::FSLP;
    has_o |= s == Scheme::OSLP;
  }
  if (!has_f || !has_o) throw std::invalid_argument("perf_compare: both fslp and oslp are required");
  std::vector<PerfRecord> out;
  RunOptions o;
  o.end_time = end_time;
  for (const Resolution& r : resolutions) {
    const std::size_t first = out.size();
    for (Scheme s : schemes) {
      const SchemeConfig cfg = SchemeConfig::make(s, 1);
      const RunResult run = run_case(spec, cfg, r, o);
      PerfRecord p;
      p.scheme = s;
      p.nx = run.final_grid.nx();
      p.ny = run.final_grid.ny();
      p.step_count = run.report.step_count;
      p.total_time = run.report.wall_time;
      p.mean_step_time = run.report.mean_step_time;
      p.field_buffer_bytes = field_buffer_bytes(run.final_grid, spec.gas, cfg);
      out.push_back(p);
    }
    const PerfRecord* f = nullptr;
    for (std::size_t k = first; k < out.size(); ++k)
      if (out[k].scheme == Scheme::FSLP) f = &out[k];
    for (std::size_t k = first; k < out.size(); ++k) {
      out[k].step_ratio = static_cast<double>(out[k].step_count) / f->step_count;
      out[k].time_ratio = f->total_time > 0.0 ? out[k].total_time / f->total_time : 1.0;
      out[k].memory_ratio = static_cast<double>(out[k].field_buffer_bytes) / f->field_buffer_bytes;
    }
  }
  return out;
}

}  // namespace fslp
