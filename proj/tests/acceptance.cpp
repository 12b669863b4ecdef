// Standing acceptance gate: runs the ten suite checks and prints one
// pass/fail line per criterion.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "aclab/suite.hpp"

using namespace aclab;

namespace {

bool report(int index, const CheckResult& r) {
    std::printf("criterion %2d [%s] %s (%.0f ms)\n", index, r.pass ? "pass" : "FAIL",
                r.name.c_str(), r.elapsed_ms);
    std::fflush(stdout);
    return r.pass;
}

}  // namespace

TEST_CASE("ten standing checks") {
    CHECK(report(1, check_abelian_classification()));
    CHECK(report(2, check_gacc1_catalog()));
    CHECK(report(3, check_recalcitrance_bound()));
    CHECK(report(4, check_bs_certificates()));
    CHECK(report(5, check_prime_power_scan()));
    CHECK(report(6, check_wreath_weight_one()));
    CHECK(report(7, check_w_structure()));
    CHECK(report(8, check_move_equivalence()));
    CHECK(report(9, check_diameter_inequalities()));
    CHECK(report(10, check_cyclotomic()));
}

TEST_CASE("suite runner writes reports and a summary") {
    auto dir = std::filesystem::temp_directory_path() / "aclab-suite-test";
    std::filesystem::remove_all(dir);
    SuiteSummary s = run_acceptance_suite("", dir.string());
    CHECK(s.total == 10);
    CHECK(s.failed == 0);
    CHECK(s.skipped == 0);
    CHECK(std::filesystem::exists(dir / "summary.json"));
    CHECK(std::filesystem::exists(dir / "check_01.json"));
    CHECK(std::filesystem::exists(dir / "check_10.json"));

    // digests are stable across reruns
    SuiteSummary again = run_acceptance_suite("", "");
    CHECK(again.digest == s.digest);
    std::filesystem::remove_all(dir);
}

TEST_CASE("empty catalog passes vacuously") {
    auto path = std::filesystem::temp_directory_path() / "aclab-empty-catalog.json";
    std::ofstream(path) << "[]\n";
    SuiteSummary s = run_acceptance_suite(path.string(), "");
    CHECK(s.total == 0);
    CHECK(s.failed == 0);
    std::filesystem::remove(path);
}

TEST_CASE("non-soluble group under the bijection check is skipped with a reason") {
    auto path = std::filesystem::temp_directory_path() / "aclab-s5-catalog.json";
    std::ofstream(path) << R"json([{"check": "gacc1", "group": "builtin: symmetric(5)", "n": 2}])json"
                        << "\n";
    SuiteSummary s = run_acceptance_suite(path.string(), "");
    CHECK(s.total == 1);
    CHECK(s.skipped == 1);
    CHECK(s.failed == 0);
    REQUIRE(s.results.size() == 1);
    CHECK_FALSE(s.results[0].note.empty());
    std::filesystem::remove(path);
}
