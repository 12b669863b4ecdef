#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "aclab/abelian.hpp"

using namespace aclab;

TEST_CASE("invariant factors of builtin abelian tables") {
    AbelianBasis b = invariant_factors(builtin_group("abelian", {2, 4}));
    REQUIRE(b.invariants.factors == std::vector<long long>{2, 4});
    REQUIRE(b.basis.size() == 2);

    GroupTable a = builtin_group("abelian", {2, 4});
    CHECK(a.element_order(b.basis[0]) == 2);
    CHECK(a.element_order(b.basis[1]) == 4);
}

TEST_CASE("non-presorted factor lists still normalize") {
    // Z/4 x Z/6 = Z/2 x Z/12
    AbelianBasis b = invariant_factors(builtin_group("abelian", {4, 6}));
    CHECK(b.invariants.factors == std::vector<long long>{2, 12});
    // Z/2 x Z/3 = Z/6
    AbelianBasis c = invariant_factors(builtin_group("abelian", {2, 3}));
    CHECK(c.invariants.factors == std::vector<long long>{6});
}

TEST_CASE("abelianized quaternions are a Klein four group") {
    Quotient q = abelianization(builtin_group("quaternion8", {}));
    AbelianBasis b = invariant_factors(q.table);
    CHECK(b.invariants.factors == std::vector<long long>{2, 2});
}

TEST_CASE("trivial group has an empty decomposition") {
    AbelianBasis b = invariant_factors(builtin_group("cyclic", {1}));
    CHECK(b.invariants.factors.empty());
    CHECK(b.basis.empty());
}

TEST_CASE("non-abelian input is rejected") {
    CHECK_THROWS_AS(invariant_factors(builtin_group("symmetric", {3})), NotAbelian);
}

TEST_CASE("coordinate map is a bijection") {
    for (const auto& params : std::vector<std::vector<int>>{{2, 4}, {3, 9}, {5, 5}, {2, 2, 2}}) {
        GroupTable a = builtin_group("abelian", params);
        AbelianBasis b = invariant_factors(a);
        std::map<std::vector<int>, int> seen;
        for (Element x = 0; x < a.order(); ++x) ++seen[b.coords[x]];
        CHECK(static_cast<int>(seen.size()) == a.order());
        for (const auto& [coord, count] : seen) {
            CHECK(count == 1);
            for (size_t i = 0; i < coord.size(); ++i) {
                CHECK(coord[i] >= 0);
                CHECK(coord[i] < b.invariants.factors[i]);
            }
        }
    }
}

TEST_CASE("extended totient") {
    CHECK(euler_phi_ext(5) == 4);
    CHECK(euler_phi_ext(0) == 2);
    CHECK(euler_phi_ext(1) == 1);
    CHECK(euler_phi_ext(12) == 4);
    CHECK(euler_phi_ext(2) == 1);
}

TEST_CASE("class counts") {
    CHECK(class_count(AbelianInvariants{{5}}, 1) == 2);
    CHECK(class_count(AbelianInvariants{{5}}, 2) == 1);
    CHECK(class_count(AbelianInvariants{{0}}, 1) == 1);
    CHECK(class_count(AbelianInvariants{{}}, 1) == 1);
    CHECK(class_count(AbelianInvariants{{7}}, 1) == 3);
    CHECK(class_count(AbelianInvariants{{5, 5}}, 2) == 2);
    CHECK_THROWS_AS(class_count(AbelianInvariants{{2, 4}}, 1), VectorTooShort);
    // single class whenever the leading factor has only trivial units
    for (long long d : {2LL, 3LL, 4LL, 6LL})
        CHECK(class_count(AbelianInvariants{{d}}, 1) == 1);
    CHECK(class_count(AbelianInvariants{{0}}, 2) == 1);
}

TEST_CASE("delta labels on one-generator groups") {
    GroupTable a5 = builtin_group("abelian", {5});
    NielsenClass c2 = nielsen_class(a5, {2});
    REQUIRE(c2.delta.has_value());
    CHECK(*c2.delta == 2);  // {2, 3} canonicalized to 2
    NielsenClass c1 = nielsen_class(a5, {1});
    REQUIRE(c1.delta.has_value());
    CHECK(*c1.delta == 1);  // {1, 4}
    CHECK(nielsen_equivalent(a5, {1}, {4}));
    CHECK_FALSE(nielsen_equivalent(a5, {1}, {2}));
}

TEST_CASE("delta labels in rank two") {
    GroupTable a = builtin_group("abelian", {5, 5});
    AbelianBasis b = invariant_factors(a);
    Element e1 = b.basis[0], e2 = b.basis[1];
    Element two_e1 = a.mul(e1, e1);

    NielsenClass unit = nielsen_class(a, b, {e1, e2});
    REQUIRE(unit.delta.has_value());
    CHECK(*unit.delta == 1);

    NielsenClass twice = nielsen_class(a, b, {two_e1, e2});
    REQUIRE(twice.delta.has_value());
    CHECK(*twice.delta == 2);

    CHECK_FALSE(nielsen_equivalent(a, {e1, e2}, {two_e1, e2}));
}

TEST_CASE("longer vectors fall into a single class") {
    GroupTable a5 = builtin_group("abelian", {5});
    NielsenClass c = nielsen_class(a5, {1, 0});
    CHECK_FALSE(c.delta.has_value());
    CHECK(nielsen_equivalent(a5, {1, 0}, {2, 3}));
}

TEST_CASE("preconditions on tuples") {
    GroupTable a4 = builtin_group("abelian", {4});
    CHECK_THROWS_AS(nielsen_class(a4, {2}), NotGenerating);
    CHECK_THROWS_AS(nielsen_class(a4, std::vector<Element>{}), VectorTooShort);
    CHECK_THROWS_AS(nielsen_equivalent(a4, {1}, {1, 0}), LengthMismatch);
}
