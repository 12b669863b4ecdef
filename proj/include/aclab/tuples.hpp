#pragma once

#include <deque>
#include <map>
#include <vector>

#include "aclab/group.hpp"

namespace aclab {

// An ordered tuple of element ids of a fixed group; the vertex type of all
// transformation graphs.
using Tuple = std::vector<Element>;

bool is_generating(const GroupTable& g, const Tuple& t);
bool normally_generates(const GroupTable& g, const Tuple& t);

// One elementary Nielsen move: for each i the inversion variant, then for
// each ordered pair j != i the left-multiplication g_i <- g_j * g_i.
// Raw move results; fixed points and duplicates are kept.
std::vector<Tuple> nielsen_neighbors(const GroupTable& g, const Tuple& t);

// Nielsen moves plus conjugation of one component by any group element.
std::vector<Tuple> ac_neighbors(const GroupTable& g, const Tuple& t);

// M-transformations: s_i <- s_i * w with w in the normal closure of the
// other components; w = identity is skipped as a self-loop.
std::vector<Tuple> m_neighbors(const GroupTable& g, const Tuple& t);

// All normally generating n-tuples in lexicographic order.
std::vector<Tuple> enumerate_normally_generating(const GroupTable& g, int n,
                                                 long long state_cap = 10000000);

// Per-element normal closures with memoized joins; makes tuple-level normal
// generation tests cheap inside enumeration loops.
class NormalClosureIndex {
public:
    explicit NormalClosureIndex(const GroupTable& g);
    const GroupTable& group() const { return *g_; }
    const SubgroupSet& closure_of(Element x) const { return closures_[closure_id_[x]]; }
    // join of the per-component closures; reference stays valid across calls
    const SubgroupSet& joined_closure(const Tuple& t) const;
    bool tuple_normally_generates(const Tuple& t) const;

private:
    const GroupTable* g_;
    std::vector<int> closure_id_;  // element -> index into closures_
    mutable std::deque<SubgroupSet> closures_;
    mutable std::map<std::pair<int, int>, int> join_memo_;
    int join(int a, int b) const;
};

}  // namespace aclab
