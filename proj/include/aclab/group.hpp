#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aclab/errors.hpp"

namespace aclab {

using Element = int32_t;

inline constexpr Element kIdentity = 0;
inline constexpr int kDefaultOrderCap = 4096;

// A finite group as an explicit multiplication table. Element 0 is always
// the identity. Immutable after construction.
class GroupTable {
public:
    // Builds the table from a raw multiplication function on {0..n-1}.
    // Checks the group laws: exhaustively for n <= 512, by sampling above.
    GroupTable(int order, std::vector<Element> mul, std::vector<std::string> names = {});

    int order() const { return order_; }
    Element mul(Element x, Element y) const { return mul_[static_cast<size_t>(x) * order_ + y]; }
    Element inv(Element x) const { return inv_[x]; }
    Element conj(Element x, Element g) const { return mul(mul(inv(g), x), g); }   // x^g = g^-1 x g
    Element comm(Element x, Element y) const {                                    // [x,y] = x^-1 y^-1 x y
        return mul(mul(inv(x), inv(y)), mul(x, y));
    }
    Element pow(Element x, long long e) const;
    int element_order(Element x) const;

    bool is_abelian() const;
    const std::string& name(Element x) const;
    bool has_names() const { return !names_.empty(); }

private:
    int order_;
    std::vector<Element> mul_;
    std::vector<Element> inv_;
    std::vector<std::string> names_;
};

// Membership bitset over element ids of a parent group.
class SubgroupSet {
public:
    SubgroupSet() = default;
    SubgroupSet(const GroupTable* parent, std::vector<bool> members);

    const GroupTable& parent() const { return *parent_; }
    bool contains(Element x) const { return members_[x]; }
    int size() const { return size_; }
    const std::vector<bool>& bits() const { return members_; }
    const std::vector<Element>& elements() const { return elements_; }

    bool is_subgroup() const;       // closed under mul and inv, contains identity
    bool is_normal() const;         // cached after first query
    bool is_whole_group() const { return size_ == parent_->order(); }
    bool is_trivial() const { return size_ == 1; }

    bool operator==(const SubgroupSet& o) const { return members_ == o.members_; }

private:
    const GroupTable* parent_ = nullptr;
    std::vector<bool> members_;
    std::vector<Element> elements_;
    int size_ = 0;
    mutable std::optional<bool> normal_;
};

using Permutation = std::vector<int>;

// Closure of the given permutations under composition; convention
// (g*h)(x) = h(g(x)). Element ids follow BFS discovery order from the
// generator list, identity first.
GroupTable group_from_permutations(const std::vector<Permutation>& generators,
                                   int order_cap = kDefaultOrderCap);

// Builtin catalog. Element numbering is deterministic per family:
//   cyclic(m)       : residues 0..m-1
//   abelian(d1..dk) : mixed-radix tuples, most significant factor first
//   dihedral(m)     : r^i s^j -> i + m*j  (order 2m)
//   quaternion8     : 1,-1,i,-i,j,-j,k,-k
//   symmetric(m)    : BFS order from {(0 1), (0 1 ... m-1)}, m <= 6
//   heisenberg(p)   : unitriangular (a,b,c) -> a p^2 + b p + c
//   affine(q)       : x -> ax+b over F_q, pairs (a,b), identity first,
//                     then lexicographic; q a prime power <= 32
GroupTable builtin_group(const std::string& name, const std::vector<int>& params,
                         int order_cap = kDefaultOrderCap);

SubgroupSet subgroup_generated(const GroupTable& g, const std::vector<Element>& seed);
SubgroupSet normal_closure(const GroupTable& g, const std::vector<Element>& seed);
SubgroupSet trivial_subgroup(const GroupTable& g);
SubgroupSet full_subgroup(const GroupTable& g);

struct Quotient {
    GroupTable table;
    std::vector<Element> projection;  // element of g -> element of table
};

// Coset table of g modulo a normal subgroup; coset of the identity is 0 and
// cosets are numbered by their least member in element order.
Quotient quotient(const GroupTable& g, const SubgroupSet& n);

// [G, G^(1), ...] until stabilization.
std::vector<SubgroupSet> derived_series(const GroupTable& g);
SubgroupSet derived_subgroup(const GroupTable& g);
bool is_soluble(const GroupTable& g);

Quotient abelianization(const GroupTable& g);

// Exhaustive searches over tuples of size <= budget.
int rank(const GroupTable& g, int budget = 4);
int weight(const GroupTable& g, int budget = 4);

// Complete normal subgroup lattice, ordered by (size, lexicographic bitset).
std::vector<SubgroupSet> normal_subgroups(const GroupTable& g, int order_cap = 512);

// W(G): intersection of all maximal normal subgroups; the whole group when
// none exist (trivial group only, at finite scale).
SubgroupSet w_subgroup(const GroupTable& g, int order_cap = 512);

}  // namespace aclab
