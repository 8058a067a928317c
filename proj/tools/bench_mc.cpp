// Benchmark: the OpenMP shot loop against the serial reference on a fixed
// workload, checking that both produce identical counts.
#include <cstdio>

#include "mbqc/experiment.hpp"

#ifdef CLUSTERLAB_HAVE_OPENMP
#include <omp.h>
#endif

using namespace mbqc;

int main(int argc, char** argv) {
  uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20000;
  int L = argc > 2 ? std::atoi(argv[2]) : 10;

  constexpr AxisBoundary P = AxisBoundary::periodic;
  auto ctx = make_context("cubic", L, {P, P, P});
  NoiseParams np;
  np.p_m = 0.024;
  np.p_e = 0.02;
  auto model = make_model(ctx, NoiseModel::phenomenological, np, "");

  std::printf("workload: cubic L=%d, p_m=%.3f p_e=%.3f, %llu shots\n", L, np.p_m, np.p_e,
              static_cast<unsigned long long>(trials));

  auto serial = run_point_serial(ctx, model, trials, 7, 0);
  std::printf("%-12s %8.1f ms  failures %llu\n", "serial", serial.wall_ms,
              static_cast<unsigned long long>(serial.failures));

#ifdef CLUSTERLAB_HAVE_OPENMP
  int maxt = omp_get_max_threads();
#else
  int maxt = 1;
#endif
  for (int t = 1; t <= maxt; t *= 2) {
    auto par = run_point(ctx, model, trials, 7, 0, t);
    bool same = par.failures == serial.failures;
    std::printf("%-9s %2d %8.1f ms  failures %llu  speedup %.2fx  %s\n", "openmp x", t,
                par.wall_ms, static_cast<unsigned long long>(par.failures),
                serial.wall_ms / par.wall_ms, same ? "bit-exact" : "MISMATCH");
    if (!same) return 1;
  }
  return 0;
}
