// Wall-clock comparison of the serial reference suite runner against the
// OpenMP batch runner, plus a cross-check that both produce identical reports.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "ybmaps/report.hpp"
#include "ybmaps/verify.hpp"

using namespace ybmaps;

namespace {

double run_ms(const std::string& map, const std::vector<Check>& checks, bool parallel,
              int trials) {
    SuiteOptions opts;
    opts.trials = trials;
    opts.seed = 7;
    opts.parallel = parallel;
    const auto t0 = std::chrono::steady_clock::now();
    run_suite(map, checks, opts);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool same_reports(const std::string& map, const std::vector<Check>& checks, int trials) {
    SuiteOptions ser{trials, 7, 2, false};
    SuiteOptions par{trials, 7, 2, true};
    const auto a = run_suite(map, checks, ser);
    const auto b = run_suite(map, checks, par);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (check_report_json(a[i]) != check_report_json(b[i])) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    const int trials = argc > 1 ? std::atoi(argv[1]) : 100;
    const std::vector<Check> checks{Check::Yb, Check::Refactor, Check::Invariants};
    const std::vector<std::string> maps{"adler-yamilov", "dnls6-orig", "dihedral6", "vector-z2"};

    std::printf("threads: %d, trials: %d\n", omp_get_max_threads(), trials);
    std::printf("%-14s %12s %12s %8s %s\n", "map", "serial ms", "openmp ms", "speedup", "equal");
    for (const std::string& m : maps) {
        const double ts = run_ms(m, checks, false, trials);
        const double tp = run_ms(m, checks, true, trials);
        const bool eq = same_reports(m, checks, trials);
        std::printf("%-14s %12.1f %12.1f %7.2fx %s\n", m.c_str(), ts, tp, ts / tp,
                    eq ? "yes" : "NO");
    }
    return 0;
}
