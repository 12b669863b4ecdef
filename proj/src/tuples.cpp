#include "aclab/tuples.hpp"

#include <algorithm>

namespace aclab {

bool is_generating(const GroupTable& g, const Tuple& t) {
    return subgroup_generated(g, t).is_whole_group();
}

bool normally_generates(const GroupTable& g, const Tuple& t) {
    return normal_closure(g, t).is_whole_group();
}

std::vector<Tuple> nielsen_neighbors(const GroupTable& g, const Tuple& t) {
    std::vector<Tuple> out;
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i) {
        Tuple v = t;
        v[i] = g.inv(t[i]);
        out.push_back(std::move(v));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            Tuple v = t;
            v[i] = g.mul(t[j], t[i]);
            out.push_back(std::move(v));
        }
    return out;
}

std::vector<Tuple> ac_neighbors(const GroupTable& g, const Tuple& t) {
    std::vector<Tuple> out = nielsen_neighbors(g, t);
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i)
        for (Element c = 0; c < g.order(); ++c) {
            Tuple v = t;
            v[i] = g.conj(t[i], c);
            out.push_back(std::move(v));
        }
    return out;
}

std::vector<Tuple> m_neighbors(const GroupTable& g, const Tuple& t) {
    std::vector<Tuple> out;
    const int n = static_cast<int>(t.size());
    for (int i = 0; i < n; ++i) {
        Tuple others;
        for (int j = 0; j < n; ++j)
            if (j != i) others.push_back(t[j]);
        SubgroupSet k = normal_closure(g, others);
        for (Element w : k.elements()) {
            if (w == kIdentity) continue;
            Tuple v = t;
            v[i] = g.mul(t[i], w);
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::vector<Tuple> enumerate_normally_generating(const GroupTable& g, int n,
                                                 long long state_cap) {
    long long states = 1;
    for (int i = 0; i < n; ++i) {
        states *= g.order();
        if (states > state_cap) throw StateCapExceeded("enumeration exceeds state cap");
    }
    NormalClosureIndex index(g);
    std::vector<Tuple> out;
    Tuple t(n, 0);
    for (;;) {
        if (index.tuple_normally_generates(t)) out.push_back(t);
        int i = n - 1;
        while (i >= 0 && ++t[i] == g.order()) t[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

NormalClosureIndex::NormalClosureIndex(const GroupTable& g) : g_(&g) {
    closure_id_.assign(g.order(), -1);
    for (Element x = 0; x < g.order(); ++x) {
        SubgroupSet c = normal_closure(g, {x});
        int id = -1;
        for (size_t i = 0; i < closures_.size(); ++i)
            if (closures_[i] == c) {
                id = static_cast<int>(i);
                break;
            }
        if (id < 0) {
            id = static_cast<int>(closures_.size());
            closures_.push_back(std::move(c));
        }
        closure_id_[x] = id;
    }
}

int NormalClosureIndex::join(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (a == b) return a;
    auto key = std::make_pair(a, b);
    auto it = join_memo_.find(key);
    if (it != join_memo_.end()) return it->second;
    std::vector<bool> in(g_->order(), false);
    for (Element x : closures_[a].elements())
        for (Element y : closures_[b].elements()) in[g_->mul(x, y)] = true;
    SubgroupSet j(g_, std::move(in));
    int id = -1;
    for (size_t i = 0; i < closures_.size(); ++i)
        if (closures_[i] == j) {
            id = static_cast<int>(i);
            break;
        }
    if (id < 0) {
        id = static_cast<int>(closures_.size());
        closures_.push_back(std::move(j));
    }
    join_memo_[key] = id;
    return id;
}

const SubgroupSet& NormalClosureIndex::joined_closure(const Tuple& t) const {
    if (t.empty()) return closures_[closure_id_[kIdentity]];
    int acc = closure_id_[t[0]];
    for (size_t i = 1; i < t.size(); ++i) acc = join(acc, closure_id_[t[i]]);
    return closures_[acc];
}

bool NormalClosureIndex::tuple_normally_generates(const Tuple& t) const {
    if (t.empty()) return g_->order() == 1;
    return joined_closure(t).is_whole_group();
}

}  // namespace aclab
