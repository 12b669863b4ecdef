#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aclab/abelian.hpp"
#include "aclab/wreath.hpp"

using namespace aclab;

TEST_CASE("iterated product orders match the closed form") {
    CHECK(wreath_cyclic(WreathSpec{{2, 3}}).table.order() == 24);   // 2^3 * 3
    CHECK(wreath_cyclic(WreathSpec{{2}}).table.order() == 2);
    CHECK(wreath_cyclic(WreathSpec{{3, 4}}).table.order() == 324);  // 3^4 * 4
    CHECK(wreath_cyclic(WreathSpec{{3, 2}}).table.order() == 18);
    CHECK(wreath_cyclic(WreathSpec{{2, 5}}).table.order() == 160);
}

TEST_CASE("stage constraints") {
    CHECK_THROWS_AS(wreath_cyclic(WreathSpec{{2, 4}}), NotCoprime);
    CHECK_THROWS_AS(wreath_cyclic(WreathSpec{{}}), UnknownSpec);
    CHECK_THROWS_AS(wreath_cyclic(WreathSpec{{1, 3}}), UnknownSpec);
    CHECK_THROWS_AS(wreath_cyclic(WreathSpec{{5, 6}}), OrderCapExceeded);  // 5^6 * 6
}

TEST_CASE("abelianization is one cyclic factor") {
    for (const auto& orders : std::vector<std::vector<int>>{{2, 3}, {3, 2}, {2, 5}}) {
        WreathGroup w = wreath_cyclic(WreathSpec{orders});
        Quotient ab = abelianization(w.table);
        AbelianBasis b = invariant_factors(ab.table);
        long long prod = 1;
        for (int t : orders) prod *= t;
        CHECK(b.invariants.factors == std::vector<long long>{prod});
        CHECK(w.ab_order == prod);
    }
}

TEST_CASE("distinguished element drives the verification") {
    WreathVerifyReport r = wreath_weight_one_verify(WreathSpec{{2, 3}});
    CHECK(r.pass);
    CHECK(r.group_order == 24);
    CHECK(r.distinguished_order == 6);
    CHECK(r.order_matches_ab);
    CHECK(r.self_centralizing);
    CHECK(r.coset_single_conjugacy);
    CHECK(r.weight_one);
    CHECK(r.conjugacy_class_size == 4);  // |G| / |G_ab| lifts, all conjugate
}

TEST_CASE("verification across coprime stage lists") {
    for (const auto& orders :
         std::vector<std::vector<int>>{{2}, {3, 2}, {2, 5}, {3, 4}, {2, 3}}) {
        WreathVerifyReport r = wreath_weight_one_verify(WreathSpec{orders});
        CHECK(r.pass);
        CHECK(r.conjugacy_class_size == r.group_order / r.ab_order);
    }
}

TEST_CASE("single stage is plain cyclic") {
    WreathGroup w = wreath_cyclic(WreathSpec{{5}});
    CHECK(w.table.is_abelian());
    CHECK(w.table.element_order(w.distinguished) == 5);
}
