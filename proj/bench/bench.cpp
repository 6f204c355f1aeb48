// Serial reference against the OpenMP kernels. Usage: omega_bench [x_max]
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "omega/sieve.hpp"
#include "omega/summatory.hpp"

using namespace omega;

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main(int argc, char** argv) {
  const std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20'000'000;
  std::printf("threads %d, x_max %llu\n", omp_get_max_threads(), static_cast<unsigned long long>(n));

  std::size_t sink = 0;
  const double s_ser = seconds([&] { sink += sieve_range_serial(1, n + 1).omega[n / 2]; });
  const double s_par = seconds([&] { sink += sieve_range(1, n + 1).omega[n / 2]; });
  std::printf("sieve        serial %8.3f s   parallel %8.3f s   speedup %.2f\n", s_ser, s_par, s_ser / s_par);

  for (const SeriesKind k : {SeriesKind::W(2), SeriesKind::m()}) {
    const double e_ser = seconds([&] { sink += evaluate_serial(k, n, n).size(); });
    const double e_par = seconds([&] { sink += evaluate(k, n, n).size(); });
    std::printf("evaluate %-4s serial %8.3f s   parallel %8.3f s   speedup %.2f\n", k.name().c_str(), e_ser, e_par,
                e_ser / e_par);
  }
  const double x_ser = seconds([&] { sink += scan_extrema_serial(SeriesKind::W(3), 1, n, 1.58496).arg_max; });
  const double x_par = seconds([&] { sink += scan_extrema(SeriesKind::W(3), 1, n, 1.58496).arg_max; });
  std::printf("extrema W(3) serial %8.3f s   parallel %8.3f s   speedup %.2f\n", x_ser, x_par, x_ser / x_par);
  return sink == 0xdeadbeef;
}
