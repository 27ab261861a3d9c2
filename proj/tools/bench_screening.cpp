// Benchmark of the parallel screening kernel against the serial reference.

#include <chrono>
#include <cstdio>

#include "safeball/ball.hpp"
#include "safeball/io.hpp"
#include "safeball/pairs.hpp"
#include "safeball/problems.hpp"
#include "safeball/screening.hpp"

using namespace safeball;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& fn, int reps) {
  auto t0 = Clock::now();
  for (int r = 0; r < reps; ++r) fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count() /
         reps;
}

}  // namespace

int main() {
  std::printf("%8s %8s %12s %12s %8s\n", "m", "n", "serial_ms", "omp_ms",
              "speedup");
  for (Eigen::Index n : {1000, 10000, 50000, 200000}) {
    const Eigen::Index m = 200;
    InstanceData data =
        generate_synthetic(SyntheticSpec{m, n, 0.05, 0.1, 7, true});
    Problem p = make_lasso({data.A, data.y, 0.5 * 1.0, std::nullopt});
    p = with_lambda(p, 0.5 * lambda_max(p));
    PrimalDualPair pair = dual_scaling(p, Eigen::VectorXd::Zero(n));
    Ball b = ryu_ball(p, pair.x, pair.u);

    ScreenMask serial, parallel;
    const int reps = n >= 50000 ? 5 : 20;
    double ts = time_ms([&] { serial = screen_l1_serial(p, b); }, reps);
    double tp = time_ms([&] { parallel = screen_l1(p, b); }, reps);

    if (serial.flags != parallel.flags) {
      std::fprintf(stderr, "mismatch between serial and parallel kernels\n");
      return 1;
    }
    std::printf("%8lld %8lld %12.3f %12.3f %8.2f\n",
                static_cast<long long>(m), static_cast<long long>(n), ts, tp,
                ts / tp);
  }
  return 0;
}
