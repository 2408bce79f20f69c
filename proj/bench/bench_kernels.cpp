// Optimized (OpenMP) kernels vs the serial per-cell reference.
#include <benchmark/benchmark.h>

#include "fslp/cases.hpp"

using namespace fslp;

namespace {

Grid gresho_grid(int n) { return init_case(make_case("gresho", {{"mach", 1e-2}}), {n, n}); }

void BM_Kernel(benchmark::State& st, Scheme s, int order) {
  const CaseSpec spec = make_case("gresho", {{"mach", 1e-2}});
  Grid g = gresho_grid(static_cast<int>(st.range(0)));
  Solver solver(spec.gas, SchemeConfig::make(s, order));
  const double dt = 0.25 * solver.compute_dt(g);
  for (auto _ : st) solver.step(g, dt);
  st.SetItemsProcessed(st.iterations() * g.nx() * g.ny());
}

void BM_Reference(benchmark::State& st, Scheme s, int order) {
  const CaseSpec spec = make_case("gresho", {{"mach", 1e-2}});
  Grid g = gresho_grid(static_cast<int>(st.range(0)));
  const SchemeConfig cfg = SchemeConfig::make(s, order);
  const double dt = 0.25 * reference::dt_fslp(g, spec.gas, cfg);
  for (auto _ : st) {
    if (order == 2)
      reference::step_muscl(g, spec.gas, cfg, dt);
    else if (s == Scheme::OSLP)
      reference::step_oslp(g, spec.gas, cfg, dt);
    else if (s == Scheme::HLLC)
      reference::step_hllc(g, spec.gas, cfg, dt);
    else
      reference::step_fslp(g, spec.gas, cfg, dt);
  }
  st.SetItemsProcessed(st.iterations() * g.nx() * g.ny());
}

}  // namespace

BENCHMARK_CAPTURE(BM_Kernel, fslp1, Scheme::FSLP, 1)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Reference, fslp1, Scheme::FSLP, 1)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Kernel, oslp1, Scheme::OSLP, 1)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Reference, oslp1, Scheme::OSLP, 1)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Kernel, hllc1, Scheme::HLLC, 1)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Reference, hllc1, Scheme::HLLC, 1)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Kernel, fslp2, Scheme::FSLP, 2)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Reference, fslp2, Scheme::FSLP, 2)->Arg(128)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
