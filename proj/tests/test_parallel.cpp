#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybmaps/report.hpp"
#include "ybmaps/verify.hpp"

using namespace ybmaps;

namespace {

nlohmann::ordered_json suite_json(const std::string& map, const std::vector<Check>& checks,
                                  bool parallel) {
    SuiteOptions opts;
    opts.trials = 60;
    opts.seed = 7;
    opts.parallel = parallel;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckReport& r : run_suite(map, checks, opts)) arr.push_back(check_report_json(r));
    return arr;
}

}  // namespace

TEST_CASE("openmp batch equals the serial reference") {
    const std::vector<Check> checks{Check::Yb,       Check::Reversibility, Check::Involutivity,
                                    Check::Invariants, Check::Refactor,    Check::Poisson,
                                    Check::Rank};
    for (const char* map : {"adler-yamilov", "dnls4", "dihedral6", "vector-z2", "nls6"}) {
        CHECK(suite_json(map, checks, true) == suite_json(map, checks, false));
    }
}

TEST_CASE("repeated parallel runs are identical") {
    const std::vector<Check> checks{Check::Yb, Check::Invariants};
    const auto a = suite_json("dnls6-orig", checks, true);
    const auto b = suite_json("dnls6-orig", checks, true);
    CHECK(a == b);
}

TEST_CASE("full report is byte-identical across execution modes") {
    const std::string serial = full_report(15, 3, false).dump(2);
    const std::string parallel = full_report(15, 3, true).dump(2);
    CHECK(serial == parallel);
}
