// Wall-clock comparison of the OpenMP kernels against their serial
// reference implementations. The outputs are asserted equal before timing
// is reported.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "vw/closedform.hpp"
#include "vw/parallel.hpp"
#include "vw/qseries.hpp"
#include "vw/tautcalc.hpp"

using namespace vw;

namespace {

template <typename F>
double time_ms(F&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

// The reference column times the serial implementation kept for testing
// (for the grid it is the cell-by-cell route, which also does more work).
void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s reference %9.2f ms   parallel %9.2f ms   ratio %.2fx\n", name, serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
    std::printf("threads: %d (OpenMP %s)\n", parallel_threads(),
                parallel_enabled() ? "enabled" : "disabled");

    {
        const int order = 14;
        std::vector<Poly> serial_out, parallel_out;
        double s = time_ms([&] { serial_out = horizontal_series_serial(order); });
        double p = time_ms([&] { parallel_out = horizontal_series(order); });
        if (serial_out != parallel_out) {
            std::fprintf(stderr, "horizontal series mismatch\n");
            return 1;
        }
        report("horizontal series (N=14)", s, p);
    }

    {
        const long g = 6;
        const int order = 24;
        BivariateSeries a, b;
        double s = time_ms([&] { a = expand_double_series_serial(g, order); });
        double p = time_ms([&] { b = expand_double_series(g, order); });
        if (a.a != b.a) {
            std::fprintf(stderr, "double-series grid mismatch\n");
            return 1;
        }
        report("double series grid (N=24)", s, p);
    }

    {
        const int total = 26;
        long a = 0, b = 0;
        double s = time_ms([&] { a = nested_partition_count_serial(total); });
        double p = time_ms([&] { b = nested_partition_count(total); });
        if (a != b) {
            std::fprintf(stderr, "nested partition count mismatch\n");
            return 1;
        }
        report("nested partitions (m=26)", s, p);
    }

    return 0;
}
