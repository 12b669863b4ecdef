#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "aclab/graphs.hpp"

using namespace aclab;

namespace {

GroupTable s3() { return builtin_group("symmetric", {3}); }

Element find_order(const GroupTable& g, int ord) {
    for (Element x = 0; x < g.order(); ++x)
        if (g.element_order(x) == ord) return x;
    REQUIRE(false);
    return -1;
}

std::set<Element> component_members(const GraphAnalysis& a, int comp) {
    std::set<Element> out;
    for (size_t v = 0; v < a.vertices.size(); ++v)
        if (a.component[v] == comp) out.insert(a.vertices[v][0]);
    return out;
}

}  // namespace

TEST_CASE("one-component tuples split by inversion pairing") {
    GroupTable a5 = builtin_group("abelian", {5});
    GraphAnalysis a = analyze_graph(a5, 1, MoveSet::MPlusInversion);
    REQUIRE(a.component_count() == 2);
    CHECK(component_members(a, 0) == std::set<Element>{1, 4});
    CHECK(component_members(a, 1) == std::set<Element>{2, 3});
    CHECK(a.diameter[0] == 1);
    CHECK(a.diameter[1] == 1);
    CHECK(a.d_n() == 1);
    CHECK(a.d_n_exact());
}

TEST_CASE("single vertex graph") {
    GroupTable c2 = builtin_group("cyclic", {2});
    GraphAnalysis a = analyze_graph(c2, 1, MoveSet::AC);
    REQUIRE(a.component_count() == 1);
    CHECK(a.vertices.size() == 1);
    CHECK(a.diameter[0] == 0);
}

TEST_CASE("pairs of the symmetric group form one component") {
    GraphAnalysis a = analyze_graph(s3(), 2, MoveSet::AC);
    CHECK(a.vertices.size() == 27);
    CHECK(a.connected());
    // representative is the lexicographically least vertex
    CHECK(a.vertices[a.representative[0]] <= a.vertices.front());
    int total = 0;
    for (int s : a.component_size) total += s;
    CHECK(total == 27);
}

TEST_CASE("adjacency is symmetric and loop-free") {
    GraphAnalysis a = analyze_graph(builtin_group("dihedral", {4}), 2, MoveSet::AC);
    for (size_t v = 0; v < a.adjacency.size(); ++v)
        for (int w : a.adjacency[v]) {
            CHECK(w != static_cast<int>(v));
            const auto& back = a.adjacency[w];
            CHECK(std::find(back.begin(), back.end(), static_cast<int>(v)) != back.end());
        }
}

TEST_CASE("tuple recalcitrance") {
    GroupTable g = s3();
    Element t = find_order(g, 2), r = find_order(g, 3);
    CHECK(recalcitrance(g, {t, r}) == 0);
    CHECK(recalcitrance(g, {t, t}) == 1);
    CHECK_THROWS_AS(recalcitrance(g, {r, r}), NotNormallyGenerating);
}

TEST_CASE("group recalcitrance") {
    GroupRecalcitrance d4 = recalcitrance_group(builtin_group("dihedral", {4}), 2);
    REQUIRE(d4.value.has_value());
    CHECK(*d4.value == 0);

    GroupRecalcitrance r = recalcitrance_group(s3(), 2);
    REQUIRE(r.value.has_value());
    CHECK(*r.value <= 3);
    CHECK(*r.value == 1);  // pinned: BFS result is deterministic

    GroupRecalcitrance c5 = recalcitrance_group(builtin_group("cyclic", {5}), 1);
    REQUIRE(c5.value.has_value());
    CHECK(*c5.value == 0);
}

TEST_CASE("component bijection with the abelianization") {
    Gacc1Report r = gacc1_check(s3(), 2);
    CHECK(r.pass);
    CHECK(r.ac_component_count == 1);
    CHECK(r.nielsen_class_count == 1);

    Gacc1Report a55 = gacc1_check(builtin_group("abelian", {5, 5}), 2);
    CHECK(a55.pass);
    CHECK(a55.ac_component_count == 2);
    CHECK(a55.nielsen_class_count == 2);

    Gacc1Report h = gacc1_check(builtin_group("heisenberg", {3}), 2);
    CHECK(h.pass);
    CHECK(h.ac_component_count == 1);
}

TEST_CASE("bijection check guards its range") {
    CHECK_THROWS_AS(gacc1_check(s3(), 1), RangeError);
    // three normal generators are needed for (Z/2)^3
    CHECK_THROWS_AS(gacc1_check(builtin_group("abelian", {2, 2, 2}), 2), WeightTooLarge);
}

TEST_CASE("non-soluble input is computed with a flag") {
    Gacc1Report r = gacc1_check(builtin_group("symmetric", {4}), 2);
    CHECK(r.soluble);  // S4 is soluble
}

TEST_CASE("weight-one element classes") {
    WeightOneReport d3 = weight_one_classes(builtin_group("dihedral", {3}));
    CHECK(d3.satisfies_gacc1_1);

    WeightOneReport a5 = weight_one_classes(builtin_group("affine", {5}));
    CHECK(a5.satisfies_gacc1_1);

    WeightOneReport c5 = weight_one_classes(builtin_group("abelian", {5}));
    CHECK(c5.satisfies_gacc1_1);
    REQUIRE(c5.ac_classes.size() == 2);
    std::set<Element> first(c5.ac_classes[0].begin(), c5.ac_classes[0].end());
    std::set<Element> second(c5.ac_classes[1].begin(), c5.ac_classes[1].end());
    CHECK(first == std::set<Element>{1, 4});
    CHECK(second == std::set<Element>{2, 3});

    CHECK_THROWS_AS(weight_one_classes(builtin_group("abelian", {2, 2})), WeightNotOne);
}

TEST_CASE("diameter inequality report") {
    DiameterInequalityReport r = diameter_inequality_report(s3(), 2);
    CHECK(r.pass());
    CHECK(r.connected);
    CHECK(r.diam_ab <= r.diam_g);
    CHECK(r.diam_g <= r.diam_w + r.n + r.weight_g);

    DiameterInequalityReport c3 = diameter_inequality_report(builtin_group("cyclic", {3}), 2);
    CHECK(c3.pass());

    DiameterInequalityReport q8 = diameter_inequality_report(builtin_group("quaternion8", {}), 3);
    CHECK(q8.pass());

    CHECK_THROWS_AS(diameter_inequality_report(s3(), 1), RangeError);
}

TEST_CASE("move-set partitions coincide") {
    CHECK(move_equivalence_check(s3(), 2));
    CHECK(move_equivalence_check(builtin_group("abelian", {5}), 2));
    CHECK(move_equivalence_check(builtin_group("cyclic", {2}), 1));
}

TEST_CASE("graphs are connected above the weight") {
    for (const char* name : {"symmetric", "dihedral"}) {
        GroupTable g = builtin_group(name, {name[0] == 's' ? 3 : 6});
        int w = weight(g);
        GraphOptions opts;
        opts.diameters = false;
        GraphAnalysis a = analyze_graph(g, w + 1, MoveSet::MPlusInversion, opts);
        CHECK(a.connected());
    }
}

TEST_CASE("state cap triggers") {
    GraphOptions opts;
    opts.state_cap = 10;
    CHECK_THROWS_AS(analyze_graph(s3(), 2, MoveSet::AC, opts), StateCapExceeded);
}

TEST_CASE("pair diameters of prime cyclic groups") {
    // data table: finite, exact, and non-decreasing over the tested primes
    long long prev = -1;
    for (int p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        GraphAnalysis a = analyze_graph(builtin_group("cyclic", {p}), 2, MoveSet::MPlusInversion);
        REQUIRE(a.connected());
        REQUIRE(a.d_n() >= 0);
        CHECK(a.d_n_exact());
        CHECK(a.d_n() >= prev);
        prev = a.d_n();
    }
}

TEST_CASE("reports are deterministic across runs") {
    GraphAnalysis a = analyze_graph(s3(), 2, MoveSet::AC);
    GraphAnalysis b = analyze_graph(s3(), 2, MoveSet::AC);
    CHECK(a.vertices == b.vertices);
    CHECK(a.component == b.component);
    CHECK(a.diameter == b.diameter);
    CHECK(a.adjacency == b.adjacency);
}
