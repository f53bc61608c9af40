// Benchmark of the lattice-sum kernel: OpenMP column-parallel path against
// the serial reference, plus a theta-grid scan at 1 and max threads.

#include <omp.h>

#include <cstdio>

#include "gamma2/arc_engine.hpp"

using namespace gamma2;

namespace {

double time_eval(const LatticeSumSpec& spec, const Real& theta, EvalMode mode, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const double t0 = omp_get_wtime();
    volatile double sink = evaluate_F(spec, theta, mode).value_im.to_double();
    (void)sink;
    const double dt = omp_get_wtime() - t0;
    if (dt < best) best = dt;
  }
  return best;
}

}  // namespace

int main() {
  const Real pi = Real::pi(128);
  const Real theta = pi * Real::of(Rat(3, 10), 128);

  std::printf("lattice kernel, theta = 0.3 pi, 128-bit\n");
  std::printf("%6s %8s %12s %12s %8s %14s\n", "k", "n_max", "serial[s]", "openmp[s]", "speedup",
              "|diff|");
  for (int k : {13, 26, 50}) {
    for (long n_max : {2500L, 10000L}) {
      LatticeSumSpec spec;
      spec.k = k;
      spec.n_max = n_max;
      const double ts = time_eval(spec, theta, EvalMode::serial_reference, 3);
      const double tp = time_eval(spec, theta, EvalMode::openmp, 3);
      const ArcEvaluation a = evaluate_F(spec, theta, EvalMode::serial_reference);
      const ArcEvaluation b = evaluate_F(spec, theta, EvalMode::openmp);
      const double diff = abs(a.value_im - b.value_im).to_double();
      std::printf("%6d %8ld %12.4f %12.4f %8.2f %14.3e\n", k, n_max, ts, tp, ts / tp, diff);
    }
  }

  std::printf("\ntheta-grid scan, k=26, n_max=10000, grid=41\n");
  LatticeSumSpec spec;
  spec.k = 26;
  spec.n_max = 10000;
  const Real lo = pi * Real::of(Rat(1, 20), 128);
  const Real hi = pi * Real::of(Rat(19, 20), 128);
  const int max_threads = omp_get_max_threads();
  omp_set_num_threads(1);
  double t0 = omp_get_wtime();
  ScanResult s1 = scan_arc(spec, lo, hi, 41);
  const double t_one = omp_get_wtime() - t0;
  omp_set_num_threads(max_threads);
  t0 = omp_get_wtime();
  ScanResult sn = scan_arc(spec, lo, hi, 41);
  const double t_many = omp_get_wtime() - t0;
  std::printf("1 thread: %.3f s, %d threads: %.3f s, speedup %.2f, sign changes %zu / %zu\n",
              t_one, max_threads, t_many, t_one / t_many, s1.intervals.size(),
              sn.intervals.size());
  return 0;
}
