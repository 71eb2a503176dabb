// Serial vs OpenMP timings for the data-parallel kernels, plus the online
// scanner's throughput. Usage: abelian_bench [n ...]
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "abelian/lcg.hpp"
#include "abelian/offline_runs.hpp"
#include "abelian/online_runs.hpp"
#include "abelian/period_spec.hpp"

using namespace abelian;

namespace {

template <class F>
double median_ms(F&& f, int reps = 5) {
    std::vector<double> samples;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        samples.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

bool same_table(const SquareCenterTable& x, const SquareCenterTable& y) { return x.dump() == y.dump(); }

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes;
    for (int k = 1; k < argc; ++k) sizes.push_back(std::strtoull(argv[k], nullptr, 10));
    if (sizes.empty()) sizes = {1000, 2000, 4000};

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-22s %8s %12s %12s %8s %s\n", "kernel", "n", "serial_ms", "parallel_ms", "speedup", "agree");

    for (std::size_t n : sizes) {
        const auto [alphabet, w] = intern(generate_word(2, n, 42));

        const double ts = median_ms([&] { build_square_table_serial(w); });
        const double tp = median_ms([&] { build_square_table(w); });
        const bool table_ok = same_table(build_square_table_serial(w), build_square_table(w));
        std::printf("%-22s %8zu %12.3f %12.3f %8.2f %s\n", "square_table", n, ts, tp, ts / tp, table_ok ? "yes" : "NO");

        const double rs = median_ms([&] { offline_all_runs_serial(w); }, 3);
        const double rp = median_ms([&] { offline_all_runs(w); }, 3);
        const bool runs_ok = offline_all_runs_serial(w) == offline_all_runs(w);
        std::printf("%-22s %8zu %12.3f %12.3f %8.2f %s\n", "offline_all_runs", n, rs, rp, rs / rp, runs_ok ? "yes" : "NO");

        const auto periods = distinct_window_vectors(w, alphabet.size(), 8);
        const double os = median_ms([&] {
            for (const auto& p : periods) runs(p, w);
        });
        const double op = median_ms([&] { runs_for_periods(periods, w); });
        std::vector<std::vector<RunOccurrence>> serial_runs;
        for (const auto& p : periods) serial_runs.push_back(runs(p, w));
        const bool online_ok = serial_runs == runs_for_periods(periods, w);
        std::printf("%-22s %8zu %12.3f %12.3f %8.2f %s\n", "online_all_norms<=8", n, os, op, os / op,
                    online_ok ? "yes" : "NO");
    }

    // single-scanner throughput on a long word
    const std::size_t long_n = 1u << 22;
    const auto [alphabet, w] = intern(generate_word(2, long_n, 7), "ab");
    const ParikhVector period{4, 4};
    std::size_t found = 0;
    const double t = median_ms([&] { found = runs(period, w).size(); }, 3);
    std::printf("online scan (4,4): n=%zu  %.1f ms  %.1f Msym/s  runs=%zu\n", long_n, t, long_n / t / 1e3, found);
    return 0;
}
