// Serial vs OpenMP comparison for the sampling and enumeration kernels.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sierpile/gasket.hpp"
#include "sierpile/oracle.hpp"

using namespace sierpile;
using Clock = std::chrono::steady_clock;

static double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main() {
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
#else
    int max_threads = 1;
#endif
    std::printf("kernel benchmark (max threads: %d)\n", max_threads);

    {
        SgGraph g(3);
        ContractedGraph cg(g, SinkSpec{{2, 1}});
        const long long N = 200000;
        auto t0 = Clock::now();
        auto serial = wilson_monte_carlo(cg, N, 1, 1);
        double ts = secs_since(t0);
        t0 = Clock::now();
        auto par = wilson_monte_carlo(cg, N, 1, max_threads);
        double tp = secs_since(t0);
        bool same = serial.des_tallies == par.des_tallies && serial.edge_hits == par.edge_hits;
        std::printf("wilson MC, SG_3, %lld samples: serial %.2fs, %d threads %.2fs "
                    "(x%.2f), identical results: %s\n",
                    N, ts, max_threads, tp, ts / tp, same ? "yes" : "NO");
    }
    {
        auto t0 = Clock::now();
        auto serial = enumerate_forests(1, 1);
        double ts = secs_since(t0);
        t0 = Clock::now();
        auto par = enumerate_forests(1, max_threads);
        double tp = secs_since(t0);
        bool same = serial.counts == par.counts;
        std::printf("subset scan, SG_1 (2^9): serial %.4fs, %d threads %.4fs, "
                    "identical: %s\n",
                    ts, max_threads, tp, same ? "yes" : "NO");
    }
    {
        // the 2^27 classification is the heavy variant of the same kernel
        auto t0 = Clock::now();
        auto par = enumerate_forests(2, max_threads);
        double tp = secs_since(t0);
        std::printf("subset scan, SG_2 (2^27), %d threads: %.1fs, tau_2 = %s\n",
                    max_threads, tp, par.counts.at(ForestClass::T).get_str().c_str());
    }
    return 0;
}
