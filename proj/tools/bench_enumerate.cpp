// Benchmark of the stringy-sum enumeration kernels: serial reference vs
// the OpenMP version, one row per genus. Both must produce the identical
// exact sum; a mismatch aborts the run.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

#include "tms/gamma_group.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace tms;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
    auto start = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int genus_min = 4;
    int genus_max = 9;
    if (argc == 3) {
        genus_min = std::atoi(argv[1]);
        genus_max = std::atoi(argv[2]);
    } else if (argc != 1) {
        std::cerr << "usage: bench_enumerate [genus_min genus_max]\n";
        return 2;
    }
    if (genus_min < 2 || genus_min > genus_max || 2 * genus_max > 30) {
        std::cerr << "genus range must satisfy 2 <= min <= max <= 15\n";
        return 2;
    }

#ifdef _OPENMP
    std::cout << "# threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "# built without OpenMP: parallel kernel falls back to serial\n";
#endif
    std::cout << std::left << std::setw(7) << "genus" << std::setw(12) << "elements"
              << std::setw(13) << "serial_ms" << std::setw(13) << "parallel_ms"
              << "speedup\n";

    for (int g = genus_min; g <= genus_max; ++g) {
        const int two_g = 2 * g;
        ElementTerm term = stringy_element_term(g, Side::dolbeault);
        OpaqueSum serial_sum, parallel_sum;
        double serial_ms = time_ms([&] { serial_sum = enumerate_sum_serial(two_g, term); });
        double parallel_ms = time_ms([&] { parallel_sum = enumerate_sum_parallel(two_g, term); });
        if (!(serial_sum == parallel_sum)) {
            std::cerr << "MISMATCH at genus " << g << ": kernels disagree\n";
            return 1;
        }
        std::cout << std::left << std::setw(7) << g << std::setw(12)
                  << (std::uint64_t{1} << two_g) << std::setw(13) << std::fixed
                  << std::setprecision(2) << serial_ms << std::setw(13) << parallel_ms
                  << std::setprecision(2) << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
                  << "\n";
    }
    return 0;
}
