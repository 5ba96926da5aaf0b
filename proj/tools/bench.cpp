// Benchmark comparing the serial reference row-reduction kernel against the
// OpenMP one on the coinvariant instances that dominate the test budget.

#include <chrono>
#include <cstdio>
#include <string>

#include "stabrange/coinv.hpp"

#ifdef STABRANGE_OPENMP
#include <omp.h>
#endif

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch())
      .count();
}

struct Case {
  const char* name;
  int n, vars, max_total;
};

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  const Case cases[] = {
      {"univariate n=4 (deg <= 6)", 4, 1, 6},
      {"diagonal n=3, two variable sets (deg <= 4)", 3, 2, 4},
      {"univariate n=5 (deg <= 10)", 5, 1, 10},
  };
  int limit = quick ? 2 : 3;
#ifdef STABRANGE_OPENMP
  std::printf("threads available: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif
  std::printf("%-45s %12s %12s\n", "case", "serial [s]", "parallel [s]");
  for (int i = 0; i < limit; ++i) {
    const Case& c = cases[i];
    double t0 = now_seconds();
    auto serial = stabrange::coinv_graded_dims_serial(c.n, c.vars, c.max_total,
                                                      /*override_caps=*/true);
    double t1 = now_seconds();
    auto parallel = stabrange::coinv_graded_dims(
        c.n, c.vars, c.max_total, /*override_caps=*/true,
        stabrange::ExecutionMode::parallel);
    double t2 = now_seconds();
    bool same = serial == parallel;
    std::printf("%-45s %12.3f %12.3f %s\n", c.name, t1 - t0, t2 - t1,
                same ? "" : "MISMATCH");
    if (!same) return 1;
  }
  return 0;
}
