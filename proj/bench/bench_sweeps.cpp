// Benchmark: OpenMP-parallel sweep kernels against their single-threaded
// reference implementations. Prints a CSV row per kernel/size with both
// timings, the speedup, and a result check.
//
// Usage: pn_bench [max_filter_n] [max_enum_n]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pn/enumeration.hpp"
#include "pn/membership.hpp"

using namespace pn;

namespace {

template <typename F>
double time_seconds(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    const unsigned max_filter_n = argc > 1 ? static_cast<unsigned>(std::atoi(argv[1])) : 24;
    const unsigned max_enum_n = argc > 2 ? static_cast<unsigned>(std::atoi(argv[2])) : 28;

#ifdef _OPENMP
    std::fprintf(stderr, "threads: %d\n", omp_get_max_threads());
#else
    std::fprintf(stderr, "threads: 1 (built without OpenMP)\n");
#endif

    std::printf("kernel,n,serial_s,parallel_s,speedup,results_match\n");

    for (unsigned n = max_filter_n >= 4 ? max_filter_n - 4 : max_filter_n;
         n <= max_filter_n; n += 2) {
        FilterStats par{}, ser{};
        const double tp = time_seconds([&] { par = survivor_ratio(n, true); });
        const double ts = time_seconds([&] { ser = survivor_ratio_serial(n, true); });
        std::printf("filter_sweep,%u,%.3f,%.3f,%.2f,%s\n", n, ts, tp, ts / tp,
                    par.survivors == ser.survivors ? "yes" : "NO");
    }

    for (unsigned n = max_enum_n >= 4 ? max_enum_n - 4 : max_enum_n;
         n <= max_enum_n; n += 2) {
        CritSeries par, ser;
        const double tp = time_seconds([&] { par = crit_series(n, n); });
        const double ts = time_seconds([&] { ser = crit_series_serial(n, n); });
        std::printf("crit_series,%u,%.3f,%.3f,%.2f,%s\n", n, ts, tp, ts / tp,
                    par.pnw == ser.pnw && par.crit == ser.crit ? "yes" : "NO");
    }
    return 0;
}
