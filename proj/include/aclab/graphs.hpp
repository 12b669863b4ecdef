#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aclab/abelian.hpp"
#include "aclab/group.hpp"
#include "aclab/tuples.hpp"

namespace aclab {

enum class MoveSet {
    Nielsen,         // elementary Nielsen moves
    AC,              // Nielsen + conjugation
    MPlusInversion,  // M-transformations + one-component inversion (the M-graph)
    MOnly,           // M-transformations alone (recalcitrance metric)
};

std::string to_string(MoveSet m);

struct GraphOptions {
    long long state_cap = 10000000;
    bool diameters = true;
    int exact_diameter_cap = 20000;  // all-sources BFS up to this component size
};

// BFS decomposition of the transformation graph on normally generating
// n-tuples. Vertices are in lexicographic order; the representative of a
// component is its lexicographically least vertex. Edges are symmetrized.
struct GraphAnalysis {
    std::vector<Tuple> vertices;
    std::vector<int> component;              // per vertex
    std::vector<int> representative;         // per component: vertex index
    std::vector<int> component_size;         // per component
    std::vector<long long> diameter;         // per component; -1 if not computed
    std::vector<bool> diameter_exact;        // false => 2-sweep lower bound
    std::vector<std::vector<int>> adjacency; // symmetrized, sorted

    int component_count() const { return static_cast<int>(representative.size()); }
    long long d_n() const;                   // sup of component diameters
    bool d_n_exact() const;
    bool connected() const { return component_count() <= 1; }
};

GraphAnalysis analyze_graph(const GroupTable& g, int n, MoveSet moves,
                            const GraphOptions& opts = {});

// BFS distance from t to the nearest generating n-vector along M-moves;
// empty optional means unreachable (infinite recalcitrance).
std::optional<long long> recalcitrance(const GroupTable& g, const Tuple& t,
                                       long long state_cap = 10000000);

struct GroupRecalcitrance {
    std::optional<long long> value;  // empty == infinite
    Tuple witness;                   // lex-least tuple achieving the value
};

GroupRecalcitrance recalcitrance_group(const GroupTable& g, int n,
                                       long long state_cap = 10000000);

struct Gacc1Report {
    bool pass = false;
    bool soluble = true;  // false => computed anyway, with a warning
    int ac_component_count = 0;
    long long nielsen_class_count = 0;  // classes of generating n-vectors of G_ab
    // one entry per AC component: representative and the delta label of its
    // abelianized image (empty optional == single-class)
    struct Pair {
        Tuple representative;
        std::optional<long long> delta;
    };
    std::vector<Pair> pairing;
};

// Verifies that abelianization induces a bijection between AC components of
// normally generating n-vectors of G and Nielsen classes of generating
// n-vectors of G_ab.
Gacc1Report gacc1_check(const GroupTable& g, int n, const GraphOptions& opts = {});

struct WeightOneReport {
    bool satisfies_gacc1_1 = false;
    // keyed by the canonical abelianized pair {u, u^-1}: element id of the
    // smaller member, with the number of AC classes above it
    struct ImageClass {
        Element ab_pair_min;
        int ac_class_count;
        std::vector<Element> ac_representatives;
    };
    std::vector<ImageClass> image_classes;
    std::vector<std::vector<Element>> ac_classes;  // partition of weight elements
};

WeightOneReport weight_one_classes(const GroupTable& g);

struct DiameterInequalityReport {
    bool connected = false;
    long long diam_ab = 0;
    long long diam_g = 0;
    long long diam_w = 0;  // M_n(G/W(G))
    int n = 0;
    int weight_g = 0;
    bool lower_holds = false;  // diam_ab <= diam_g
    bool upper_holds = false;  // diam_g <= diam_w + n + w(G)
    bool exact = true;
    bool pass() const { return connected && lower_holds && upper_holds; }
};

DiameterInequalityReport diameter_inequality_report(const GroupTable& g, int n,
                                                    const GraphOptions& opts = {});

// AC-partition equals the (M + inversion)-partition.
bool move_equivalence_check(const GroupTable& g, int n, const GraphOptions& opts = {});

}  // namespace aclab
