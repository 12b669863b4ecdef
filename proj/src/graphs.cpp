#include "aclab/graphs.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace aclab {

std::string to_string(MoveSet m) {
    switch (m) {
        case MoveSet::Nielsen: return "nielsen";
        case MoveSet::AC: return "ac";
        case MoveSet::MPlusInversion: return "m+inv";
        case MoveSet::MOnly: return "m";
    }
    return "?";
}

namespace {

long long encode(const Tuple& t, int order) {
    long long id = 0;
    for (Element x : t) id = id * order + x;
    return id;
}

// vertex lookup by binary search over the lex-sorted encoded ids
int find_vertex(const std::vector<long long>& codes, long long code) {
    auto it = std::lower_bound(codes.begin(), codes.end(), code);
    if (it == codes.end() || *it != code) return -1;
    return static_cast<int>(it - codes.begin());
}

std::vector<Tuple> raw_neighbors(const GroupTable& g, const NormalClosureIndex& index,
                                 const Tuple& t, MoveSet moves) {
    const int n = static_cast<int>(t.size());
    std::vector<Tuple> out;
    auto push_inversions = [&] {
        for (int i = 0; i < n; ++i) {
            Tuple v = t;
            v[i] = g.inv(t[i]);
            out.push_back(std::move(v));
        }
    };
    auto push_m_moves = [&] {
        for (int i = 0; i < n; ++i) {
            Tuple others;
            for (int j = 0; j < n; ++j)
                if (j != i) others.push_back(t[j]);
            // join of the per-element closures, memoized across the graph
            const SubgroupSet& k = index.joined_closure(others);
            for (Element w : k.elements()) {
                if (w == kIdentity) continue;
                Tuple v = t;
                v[i] = g.mul(t[i], w);
                out.push_back(std::move(v));
            }
        }
    };
    switch (moves) {
        case MoveSet::Nielsen:
            out = nielsen_neighbors(g, t);
            break;
        case MoveSet::AC:
            out = ac_neighbors(g, t);
            break;
        case MoveSet::MPlusInversion:
            push_m_moves();
            push_inversions();
            break;
        case MoveSet::MOnly:
            push_m_moves();
            break;
    }
    return out;
}

}  // namespace

long long GraphAnalysis::d_n() const {
    long long d = 0;
    for (long long x : diameter) d = std::max(d, x);
    return d;
}

bool GraphAnalysis::d_n_exact() const {
    for (bool e : diameter_exact)
        if (!e) return false;
    return true;
}

namespace {

// eccentricity of source via BFS; also reports the farthest vertex
long long bfs_eccentricity(const std::vector<std::vector<int>>& adj,
                           const std::vector<int>& members, int source, int* farthest) {
    std::vector<long long> dist(adj.size(), -1);
    std::deque<int> q{source};
    dist[source] = 0;
    long long ecc = 0;
    int far = source;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : adj[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                if (dist[u] > ecc) {
                    ecc = dist[u];
                    far = u;
                }
                q.push_back(u);
            }
    }
    (void)members;
    if (farthest) *farthest = far;
    return ecc;
}

}  // namespace

GraphAnalysis analyze_graph(const GroupTable& g, int n, MoveSet moves,
                            const GraphOptions& opts) {
    GraphAnalysis out;
    out.vertices = enumerate_normally_generating(g, n, opts.state_cap);
    const int vcount = static_cast<int>(out.vertices.size());
    std::vector<long long> codes(vcount);
    for (int i = 0; i < vcount; ++i) codes[i] = encode(out.vertices[i], g.order());

    NormalClosureIndex index(g);
    out.adjacency.assign(vcount, {});
    for (int v = 0; v < vcount; ++v) {
        for (const Tuple& nb : raw_neighbors(g, index, out.vertices[v], moves)) {
            long long code = encode(nb, g.order());
            if (code == codes[v]) continue;  // self-loop
            int u = find_vertex(codes, code);
            if (u < 0) continue;  // moves preserve normal generation; guard anyway
            out.adjacency[v].push_back(u);
            out.adjacency[u].push_back(v);  // symmetrize
        }
    }
    for (auto& a : out.adjacency) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }

    out.component.assign(vcount, -1);
    for (int v = 0; v < vcount; ++v) {
        if (out.component[v] >= 0) continue;
        int c = out.component_count();
        out.representative.push_back(v);  // lex-least of its component
        int size = 0;
        std::deque<int> q{v};
        out.component[v] = c;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            ++size;
            for (int u : out.adjacency[x])
                if (out.component[u] < 0) {
                    out.component[u] = c;
                    q.push_back(u);
                }
        }
        out.component_size.push_back(size);
    }

    const int ccount = out.component_count();
    out.diameter.assign(ccount, -1);
    out.diameter_exact.assign(ccount, true);
    if (opts.diameters) {
        std::vector<std::vector<int>> members(ccount);
        for (int v = 0; v < vcount; ++v) members[out.component[v]].push_back(v);
        for (int c = 0; c < ccount; ++c) {
            if (out.component_size[c] <= opts.exact_diameter_cap) {
                long long diam = 0;
                for (int v : members[c])
                    diam = std::max(diam, bfs_eccentricity(out.adjacency, members[c], v, nullptr));
                out.diameter[c] = diam;
                out.diameter_exact[c] = true;
            } else {
                // 2-sweep lower bound
                int far = members[c][0];
                bfs_eccentricity(out.adjacency, members[c], members[c][0], &far);
                out.diameter[c] = bfs_eccentricity(out.adjacency, members[c], far, nullptr);
                out.diameter_exact[c] = false;
            }
        }
    }
    return out;
}

std::optional<long long> recalcitrance(const GroupTable& g, const Tuple& t,
                                       long long state_cap) {
    if (!normally_generates(g, t))
        throw NotNormallyGenerating("recalcitrance: tuple does not normally generate");
    if (is_generating(g, t)) return 0;
    GraphOptions opts;
    opts.state_cap = state_cap;
    opts.diameters = false;
    GraphAnalysis a = analyze_graph(g, static_cast<int>(t.size()), MoveSet::MOnly, opts);
    std::vector<long long> codes(a.vertices.size());
    for (size_t i = 0; i < a.vertices.size(); ++i) codes[i] = encode(a.vertices[i], g.order());
    int start = find_vertex(codes, encode(t, g.order()));
    std::vector<long long> dist(a.vertices.size(), -1);
    std::deque<int> q{start};
    dist[start] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (is_generating(g, a.vertices[v])) return dist[v];
        for (int u : a.adjacency[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    return std::nullopt;
}

GroupRecalcitrance recalcitrance_group(const GroupTable& g, int n, long long state_cap) {
    GraphOptions opts;
    opts.state_cap = state_cap;
    opts.diameters = false;
    GraphAnalysis a = analyze_graph(g, n, MoveSet::MOnly, opts);
    const int vcount = static_cast<int>(a.vertices.size());
    // multi-source BFS from the generating vertices (M-edges are symmetric)
    std::vector<long long> dist(vcount, -1);
    std::deque<int> q;
    for (int v = 0; v < vcount; ++v)
        if (is_generating(g, a.vertices[v])) {
            dist[v] = 0;
            q.push_back(v);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : a.adjacency[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    GroupRecalcitrance out;
    long long best = -1;
    for (int v = 0; v < vcount; ++v) {
        if (dist[v] < 0) {  // unreachable: infinite recalcitrance
            out.value = std::nullopt;
            out.witness = a.vertices[v];
            return out;
        }
        if (dist[v] > best) {
            best = dist[v];
            out.witness = a.vertices[v];
        }
    }
    out.value = best < 0 ? std::optional<long long>(0) : best;
    if (vcount == 0) out.witness.clear();
    return out;
}

Gacc1Report gacc1_check(const GroupTable& g, int n, const GraphOptions& opts) {
    if (n < 2) throw RangeError("gacc1_check: n must be at least 2");
    int w = weight(g);
    if (n < w) throw WeightTooLarge("gacc1_check: n below the weight of the group");
    Gacc1Report report;
    report.soluble = is_soluble(g);

    GraphOptions part_opts = opts;
    part_opts.diameters = false;
    GraphAnalysis ac = analyze_graph(g, n, MoveSet::AC, part_opts);
    report.ac_component_count = ac.component_count();

    Quotient ab = abelianization(g);
    AbelianBasis basis = invariant_factors(ab.table);
    report.nielsen_class_count = class_count(basis.invariants, n);

    GraphAnalysis abg = analyze_graph(ab.table, n, MoveSet::Nielsen, part_opts);

    std::vector<long long> ab_codes(abg.vertices.size());
    for (size_t i = 0; i < abg.vertices.size(); ++i)
        ab_codes[i] = encode(abg.vertices[i], ab.table.order());

    // image component of every vertex; must be constant per AC component
    std::vector<int> image_comp(ac.component_count(), -1);
    bool well_defined = true;
    for (size_t v = 0; v < ac.vertices.size(); ++v) {
        Tuple img(n);
        for (int i = 0; i < n; ++i) img[i] = ab.projection[ac.vertices[v][i]];
        int u = find_vertex(ab_codes, encode(img, ab.table.order()));
        if (u < 0) {  // image not generating: cannot happen for soluble groups
            well_defined = false;
            break;
        }
        int c = ac.component[v];
        if (image_comp[c] < 0)
            image_comp[c] = abg.component[u];
        else if (image_comp[c] != abg.component[u])
            well_defined = false;
    }

    bool injective = true;
    std::set<int> hit;
    for (int c : image_comp)
        if (c >= 0 && !hit.insert(c).second) injective = false;
    bool surjective = static_cast<int>(hit.size()) == abg.component_count();

    // cross-check the BFS oracle against the delta-class formula
    bool labels_ok =
        static_cast<long long>(abg.component_count()) == report.nielsen_class_count;
    for (int c = 0; c < ac.component_count(); ++c) {
        Tuple img(n);
        const Tuple& rep = ac.vertices[ac.representative[c]];
        for (int i = 0; i < n; ++i) img[i] = ab.projection[rep[i]];
        Gacc1Report::Pair p;
        p.representative = rep;
        p.delta = nielsen_class(ab.table, basis, img).delta;
        report.pairing.push_back(std::move(p));
    }

    report.pass = well_defined && injective && surjective && labels_ok;
    return report;
}

WeightOneReport weight_one_classes(const GroupTable& g) {
    if (weight(g) != 1) throw WeightNotOne("weight_one_classes: group has weight != 1");
    std::vector<Element> weight_elems;
    for (Element x = 0; x < g.order(); ++x)
        if (normal_closure(g, {x}).is_whole_group()) weight_elems.push_back(x);

    // AC moves on 1-tuples: conjugation and inversion
    std::vector<int> cls(g.order(), -1);
    WeightOneReport report;
    for (Element seed : weight_elems) {
        if (cls[seed] >= 0) continue;
        int id = static_cast<int>(report.ac_classes.size());
        std::vector<Element> members;
        std::deque<Element> q{seed};
        cls[seed] = id;
        while (!q.empty()) {
            Element x = q.front();
            q.pop_front();
            members.push_back(x);
            auto visit = [&](Element y) {
                if (cls[y] < 0) {
                    cls[y] = id;
                    q.push_back(y);
                }
            };
            visit(g.inv(x));
            for (Element c = 0; c < g.order(); ++c) visit(g.conj(x, c));
        }
        std::sort(members.begin(), members.end());
        report.ac_classes.push_back(std::move(members));
    }

    Quotient ab = abelianization(g);
    std::map<Element, std::set<int>> per_image;  // canonical pair -> AC class ids
    for (Element x : weight_elems) {
        Element u = ab.projection[x];
        Element key = std::min(u, ab.table.inv(u));
        per_image[key].insert(cls[x]);
    }
    report.satisfies_gacc1_1 = true;
    for (const auto& [key, ids] : per_image) {
        WeightOneReport::ImageClass ic;
        ic.ab_pair_min = key;
        ic.ac_class_count = static_cast<int>(ids.size());
        for (int id : ids) ic.ac_representatives.push_back(report.ac_classes[id].front());
        report.image_classes.push_back(std::move(ic));
        if (ids.size() != 1) report.satisfies_gacc1_1 = false;
    }
    return report;
}

DiameterInequalityReport diameter_inequality_report(const GroupTable& g, int n,
                                                    const GraphOptions& opts) {
    DiameterInequalityReport report;
    report.n = n;
    report.weight_g = weight(g);
    if (n <= report.weight_g)
        throw RangeError("diameter_inequality_report: requires n > w(G)");

    Quotient ab = abelianization(g);
    Quotient gw = quotient(g, w_subgroup(g));

    GraphAnalysis a_g = analyze_graph(g, n, MoveSet::MPlusInversion, opts);
    GraphAnalysis a_ab = analyze_graph(ab.table, n, MoveSet::MPlusInversion, opts);
    GraphAnalysis a_w = analyze_graph(gw.table, n, MoveSet::MPlusInversion, opts);

    report.connected = a_g.connected();
    report.diam_g = a_g.d_n();
    report.diam_ab = a_ab.d_n();
    report.diam_w = a_w.d_n();
    report.exact = a_g.d_n_exact() && a_ab.d_n_exact() && a_w.d_n_exact();
    report.lower_holds = report.diam_ab <= report.diam_g;
    report.upper_holds = report.diam_g <= report.diam_w + n + report.weight_g;
    return report;
}

bool move_equivalence_check(const GroupTable& g, int n, const GraphOptions& opts) {
    GraphOptions part_opts = opts;
    part_opts.diameters = false;
    GraphAnalysis ac = analyze_graph(g, n, MoveSet::AC, part_opts);
    GraphAnalysis mi = analyze_graph(g, n, MoveSet::MPlusInversion, part_opts);
    if (ac.vertices.size() != mi.vertices.size()) return false;
    // same vertex order on both sides, so comparing component ids suffices:
    // representatives are lex-least, making the labeling canonical
    return ac.component == mi.component;
}

}  // namespace aclab
