// Timing comparison between the OpenMP kernels and the serial reference
// implementations, on the workloads the verification pipelines run.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "halfflip/builtins.hpp"
#include "halfflip/detect.hpp"
#include "halfflip/factors.hpp"
#include "halfflip/reference.hpp"

using namespace halfflip;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

template <class F>
double timed(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return seconds_since(start);
}

void report(const std::string& name, double serial, double parallel,
            bool equal) {
  std::printf("%-34s %9.3fs %9.3fs %6.2fx  %s\n", name.c_str(), serial,
              parallel, parallel > 0 ? serial / parallel : 0.0,
              equal ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t period_bound = 300;
  if (argc > 1) period_bound = std::strtoull(argv[1], nullptr, 10);

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run serially\n");
#endif
  std::printf("%-34s %10s %10s %7s\n", "workload", "reference", "kernel",
              "speedup");

  const FixedPointSpec& spec = base_fixed_point();

  {
    FactorSet a, b;
    const double ts = timed([&] { a = ref::factor_set_exact(spec, 1000); });
    const double tp = timed([&] { b = factor_set_exact(spec, 1000); });
    report("factor_set_exact L=1000", ts, tp, a.factors == b.factors);
  }

  {
    DetectOptions opt;
    opt.min_period = 1;
    opt.max_period = 40;
    std::optional<InfiniteHalfFlip> a, b;
    const double ts =
        timed([&] { a = ref::infinite_halfflip_check(spec, nullptr, opt); });
    const double tp =
        timed([&] { b = infinite_halfflip_check(spec, nullptr, opt); });
    report("m avoidance p<=40 (both engines)", ts, tp,
           a.has_value() == b.has_value());
  }

  {
    DetectOptions opt;
    opt.min_period = 1;
    opt.max_period = period_bound;
    std::optional<InfiniteHalfFlip> r;
    const double t =
        timed([&] { r = infinite_halfflip_check(spec, nullptr, opt); });
    std::printf("%-34s %20.3fs        %s\n",
                ("m avoidance p<=" + std::to_string(period_bound)).c_str(), t,
                r ? "present" : "absent");
  }

  {
    DetectOptions opt;
    opt.min_period = 2;
    opt.max_period = period_bound;
    std::optional<InfiniteHalfFlip> r;
    const double t = timed(
        [&] { r = infinite_halfflip_check(spec, &builtin_f3(), opt); });
    std::printf("%-34s %20.3fs        %s\n",
                ("f3 avoidance p<=" + std::to_string(period_bound)).c_str(),
                t, r ? "present" : "absent");
  }

  return 0;
}
