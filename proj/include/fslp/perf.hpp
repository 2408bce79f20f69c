#pragma once
/// OSLP vs FSLP step-count / timing / memory comparison.

#include <string>
#include <vector>

#include "fslp/cases.hpp"

namespace fslp {

struct PerfRecord {
  Scheme scheme = Scheme::FSLP;
  int nx = 0, ny = 0;
  long step_count = 0;
  double mean_step_time = 0.0;
  double total_time = 0.0;
  std::size_t field_buffer_bytes = 0;  // resident time-level buffers, from their sizes
  // normalized to the FSLP record of the same resolution
  double step_ratio = 1.0, time_ratio = 1.0, memory_ratio = 1.0;
};

/// Bytes held by the time-level field buffers of a scheme on a grid.
std::size_t field_buffer_bytes(const Grid& grid, const GasParams& gas, const SchemeConfig& cfg);

std::vector<PerfRecord> perf_compare(const CaseSpec& spec, const std::vector<Resolution>& resolutions,
                                     const std::vector<Scheme>& schemes, double end_time = -1.0);

}  // namespace fslp
