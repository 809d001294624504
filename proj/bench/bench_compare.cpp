// Wall-clock comparison of the OpenMP kernels against the serial reference
// implementation, plus the cost of the naive oracle on a small case.
//
//   leafatlas_bench [k n [jobs]]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "leafatlas/atlas.hpp"
#include "leafatlas/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace leafatlas;

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double best_of(int repeats, F&& body) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = clock_type::now();
        body();
        const auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    Int k = 55, n = 144;
    int jobs = 4;
#ifdef _OPENMP
    jobs = omp_get_max_threads();
#endif
    if (argc >= 3) {
        k = std::atoll(argv[1]);
        n = std::atoll(argv[2]);
    }
    if (argc >= 4) jobs = std::atoi(argv[3]);

    std::printf("leafatlas benchmark: k=%lld n=%lld jobs=%d\n", static_cast<long long>(k),
                static_cast<long long>(n), jobs);

    std::size_t types = 0, records = 0;
    const double enum_serial = best_of(5, [&] { types = enumerate_hn_types_serial(k, n).size(); });
    const double enum_parallel = best_of(5, [&] { enumerate_hn_types(k, n, jobs); });
    std::printf("  enumerate      serial %8.4fs   omp %8.4fs   speedup %5.2fx   (%zu types)\n",
                enum_serial, enum_parallel, enum_serial / enum_parallel, types);

    const double atlas_serial = best_of(2, [&] { records = build_atlas_serial(k, n, true).records.size(); });
    const double atlas_parallel = best_of(2, [&] { build_atlas(k, n, true, jobs); });
    std::printf("  build_atlas    serial %8.4fs   omp %8.4fs   speedup %5.2fx   (%zu records)\n",
                atlas_serial, atlas_parallel, atlas_serial / atlas_parallel, records);

    // differential-oracle cost on a small case, for scale
    const Int ok = 8, on = 9;
    std::size_t admissible = 0;
    const double naive = best_of(1, [&] { admissible = oracle::naive_enumerate(ok, on).size(); });
    double refined = best_of(1, [&] {
        std::size_t total = 0;
        for (const auto& nu : enumerate_hn_types_serial(ok, on)) total += refine_to_indec(nu).size();
        admissible = total;
    });
    std::printf("  oracle (%lld,%lld)  naive  %8.4fs   path-based %8.4fs   (%zu admissible types)\n",
                static_cast<long long>(ok), static_cast<long long>(on), naive, refined, admissible);
    return 0;
}
