// Compares the serial reference sparse kernel with the threaded one and
// reports per-step integrator cost by order on a rod mesh.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "padeint/models.hpp"
#include "padeint/sparse.hpp"
#include "padeint/stepper.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace padeint;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_spmv(const SparseRealMatrix& m, const std::string& label) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(m.cols()), y(m.rows()), y_ref(m.rows());
  for (double& v : x) v = dist(rng);

  // Pick a repeat count that gives a measurable interval.
  const int reps = std::max(1, static_cast<int>(2e7 / (m.nnz() + 1)));

  auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) m.multiply_serial(x.data(), y_ref.data());
  const double t_serial = seconds_since(t0) / reps;

  t0 = Clock::now();
  for (int r = 0; r < reps; ++r) m.multiply(x.data(), y.data());
  const double t_par = seconds_since(t0) / reps;

  double max_diff = 0.0;
  for (int i = 0; i < m.rows(); ++i) {
    max_diff = std::max(max_diff, std::abs(y[i] - y_ref[i]));
  }
  std::printf("%-12s n=%-7d nnz=%-9d serial %.3e s  threaded %.3e s  "
              "speedup %.2fx  max|diff| %.1e\n",
              label.c_str(), m.rows(), static_cast<int>(m.nnz()), t_serial,
              t_par, t_serial / t_par, max_diff);
}

void bench_steps(const RodModel& rod, double dt, int steps) {
  std::printf("\nper-step cost, %s (dt=%g, %d steps):\n",
              rod.system.name.c_str(), dt, steps);
  double base = 0.0;
  for (int M = 1; M <= 4; ++M) {
    StepperOptions opts;
    opts.order = M;
    PadeStepper it(rod.system, dt, opts);
    const auto t0 = Clock::now();
    for (int s = 0; s < steps; ++s) it.step();
    const double per = seconds_since(t0) / steps;
    if (M == 1) base = per;
    std::printf("  order %d: %.3e s/step  (%.2fx order 2)\n", 2 * M, per,
                per / base);
  }
}

}  // namespace

int main(int argc, char** argv) {
  int ny = 16;
  if (argc > 1) ny = std::atoi(argv[1]);
  if (ny < 2 || ny % 2 != 0) {
    std::fprintf(stderr, "usage: bench_kernels [ny]   (even ny >= 2)\n");
    return 2;
  }

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  const RodModel rod = build_rod(5 * ny, ny);
  std::printf("sparse matrix-vector products:\n");
  bench_spmv(rod.system.K, "rod K");
  bench_spmv(rod.system.M, "rod M");

  // A banded synthetic case large enough to cross the threading cutoff.
  {
    const int n = 20000;
    std::vector<TripletT<double>> trips;
    for (int i = 0; i < n; ++i) {
      for (int d = -3; d <= 3; ++d) {
        const int j = i + d;
        if (j < 0 || j >= n) continue;
        trips.push_back({i, j, 1.0 / (1 + std::abs(d))});
      }
    }
    bench_spmv(SparseRealMatrix::from_triplets(n, n, trips), "band7 20k");
  }

  const double h = rod.elem_size;
  bench_steps(rod, 0.5 * h / 10.0, 50);
  return 0;
}
