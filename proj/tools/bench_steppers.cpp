// Compares the OpenMP time stepper against the serial reference on the
// standard simulation grid.
#include <benchmark/benchmark.h>

#include <cmath>

#include "sg/dynamics.hpp"

namespace {

sg::SimState prepared_state(double L) {
  sg::SimState s = sg::make_sim_state(L, 0.05, 0.04, 0.0);
  for (size_t i = 0; i < s.x.size(); ++i) {
    double k = 4.0 * std::atan(std::exp(s.x[i]));
    s.theta[i] = k;
    s.psi[i] = k;
  }
  return s;
}

void BM_step_parallel(benchmark::State &state) {
  sg::InhomogeneityProfile pr = sg::InhomogeneityProfile::piecewise(1.0, 1.0);
  sg::SimState s = prepared_state((double)state.range(0));
  for (auto _ : state) {
    sg::step(s, pr, 0.25);
    benchmark::DoNotOptimize(s.theta.data());
  }
  state.SetItemsProcessed(state.iterations() * (int64_t)s.x.size());
}

void BM_step_serial(benchmark::State &state) {
  sg::InhomogeneityProfile pr = sg::InhomogeneityProfile::piecewise(1.0, 1.0);
  sg::SimState s = prepared_state((double)state.range(0));
  for (auto _ : state) {
    sg::step_serial(s, pr, 0.25);
    benchmark::DoNotOptimize(s.theta.data());
  }
  state.SetItemsProcessed(state.iterations() * (int64_t)s.x.size());
}

} // namespace

BENCHMARK(BM_step_parallel)->Arg(50)->Arg(200)->Arg(800);
BENCHMARK(BM_step_serial)->Arg(50)->Arg(200)->Arg(800);

BENCHMARK_MAIN();
