#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aclab/int_matrix.hpp"

using namespace aclab;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

void check_snf(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    CHECK(s.u.is_unimodular());
    CHECK(s.v.is_unimodular());
    CHECK(s.u * m * s.v == s.d);
    for (int r = 0; r < s.d.rows(); ++r)
        for (int c = 0; c < s.d.cols(); ++c)
            if (r != c) CHECK(s.d.at(r, c) == 0);
    int k = std::min(s.d.rows(), s.d.cols());
    for (int i = 0; i < k; ++i) CHECK(s.d.at(i, i) >= 0);
    for (int i = 0; i + 1 < k; ++i) {
        if (s.d.at(i + 1, i + 1) == 0) continue;  // 0 at the end absorbs everything
        CHECK(s.d.at(i, i) != 0);
        CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
    }
    // trailing zeros only
    bool seen_zero = false;
    for (int i = 0; i < k; ++i) {
        if (s.d.at(i, i) == 0) seen_zero = true;
        else CHECK_FALSE(seen_zero);
    }
}

}  // namespace

TEST_CASE("diagonal gcd/lcm collapse") {
    IntMatrix m = from_rows({{2, 0}, {0, 3}});
    SmithDecomposition s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
    check_snf(m);
}

TEST_CASE("identity and zero fixed points") {
    IntMatrix id = IntMatrix::identity(3);
    SmithDecomposition s = smith_normal_form(id);
    CHECK(s.d == id);

    IntMatrix z = from_rows({{0}});
    CHECK(smith_normal_form(z).d.at(0, 0) == 0);
    check_snf(z);
}

TEST_CASE("rectangular shapes") {
    check_snf(from_rows({{4, 6, 8}}));
    check_snf(from_rows({{4}, {6}, {10}}));
    IntMatrix m = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    check_snf(m);
    auto inv = smith_invariants(m);
    REQUIRE(inv.size() >= 1);  // 1s dropped
    for (const BigInt& d : inv) CHECK(d != 1);
}

TEST_CASE("determinants") {
    CHECK(from_rows({{2, 0}, {0, 3}}).det() == 6);
    CHECK(from_rows({{0, 1}, {1, 0}}).det() == -1);
    CHECK(from_rows({{1, 2}, {2, 4}}).det() == 0);
    CHECK(from_rows({{3, 1, 4}, {1, 5, 9}, {2, 6, 5}}).det() == -90);
    CHECK(IntMatrix::identity(4).det() == 1);
}

TEST_CASE("unimodularity") {
    CHECK(from_rows({{1, 5}, {0, 1}}).is_unimodular());
    CHECK(from_rows({{0, 1}, {1, 0}}).is_unimodular());
    CHECK_FALSE(from_rows({{2, 0}, {0, 1}}).is_unimodular());
    CHECK_FALSE(from_rows({{1, 0, 0}, {0, 1, 0}}).is_unimodular());  // not square
}

TEST_CASE("decomposition holds on random matrices") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 8), entry(-50, 50);
    for (int trial = 0; trial < 150; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
        check_snf(m);
    }
}

TEST_CASE("invariants describe the cokernel of a known presentation") {
    // Z^2 / <(2,0),(0,4)> = Z/2 x Z/4
    auto inv = smith_invariants(from_rows({{2, 0}, {0, 4}}));
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 4);

    // a full-rank presentation mixing the generators keeps the same factors
    auto mixed = smith_invariants(from_rows({{2, 4}, {0, 4}}));
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0] == 2);
    CHECK(mixed[1] == 4);
}
