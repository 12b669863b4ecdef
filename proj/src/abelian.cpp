#include "aclab/abelian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace aclab {

namespace {

// closure of seeds inside an abelian group, as a sorted element list
std::vector<Element> closure(const GroupTable& g, const std::vector<Element>& seeds) {
    std::vector<bool> in(g.order(), false);
    in[kIdentity] = true;
    std::vector<Element> queue{kIdentity};
    for (size_t h = 0; h < queue.size(); ++h)
        for (Element s : seeds) {
            Element y = g.mul(queue[h], s);
            if (!in[y]) {
                in[y] = true;
                queue.push_back(y);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

bool trivial_intersection(const std::vector<Element>& a, const std::vector<Element>& b) {
    size_t i = 0, j = 0, common = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++common;
            ++i;
            ++j;
        } else if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return common == 1;  // just the identity
}

// maximal-order element of h (ties by smallest id)
Element max_order_element(const GroupTable& g, const std::vector<Element>& h, int* order_out) {
    Element best = kIdentity;
    int best_order = 1;
    for (Element x : h) {
        int o = g.element_order(x);
        if (o > best_order) {
            best_order = o;
            best = x;
        }
    }
    *order_out = best_order;
    return best;
}

// Find generators of a complement of <b> in h: a subgroup c with
// c /\ <b> = 1 and |c| * ord(b) = |h|. Greedy first, backtracking fallback.
bool find_complement(const GroupTable& g, const std::vector<Element>& h,
                     const std::vector<Element>& cyc_b, size_t target,
                     std::vector<Element>& gens, std::vector<Element>& members) {
    {
        std::vector<Element> cg;
        std::vector<Element> cm = closure(g, cg);
        for (Element x : h) {
            if (std::binary_search(cm.begin(), cm.end(), x)) continue;
            std::vector<Element> try_gens = cg;
            try_gens.push_back(x);
            std::vector<Element> grown = closure(g, try_gens);
            if (trivial_intersection(grown, cyc_b)) {
                cg = std::move(try_gens);
                cm = std::move(grown);
            }
        }
        if (cm.size() == target) {
            gens = std::move(cg);
            members = std::move(cm);
            return true;
        }
    }
    // exhaustive fallback
    std::vector<Element> cg;
    std::function<bool(size_t, std::vector<Element>&)> dfs = [&](size_t from,
                                                                 std::vector<Element>& cm) -> bool {
        if (cm.size() == target) {
            gens = cg;
            members = cm;
            return true;
        }
        for (size_t idx = from; idx < h.size(); ++idx) {
            Element x = h[idx];
            if (std::binary_search(cm.begin(), cm.end(), x)) continue;
            cg.push_back(x);
            std::vector<Element> grown = closure(g, cg);
            bool ok = grown.size() <= target && trivial_intersection(grown, cyc_b) &&
                      dfs(idx + 1, grown);
            if (ok) return true;
            cg.pop_back();
        }
        return false;
    };
    std::vector<Element> cm0 = closure(g, cg);
    return dfs(0, cm0);
}

void decompose(const GroupTable& g, std::vector<Element> h, std::vector<Element>& basis,
               std::vector<int>& orders) {
    if (h.size() == 1) return;
    int ord = 0;
    Element b = max_order_element(g, h, &ord);
    std::vector<Element> cyc_b = closure(g, {b});
    basis.push_back(b);
    orders.push_back(ord);
    size_t target = h.size() / cyc_b.size();
    std::vector<Element> cgens, cmembers;
    if (!find_complement(g, h, cyc_b, target, cgens, cmembers))
        throw Error("invariant_factors: no complement found (not an abelian table?)");
    decompose(g, std::move(cmembers), basis, orders);
}

}  // namespace

AbelianBasis invariant_factors(const GroupTable& a) {
    if (!a.is_abelian()) throw NotAbelian("invariant_factors: group is not abelian");
    std::vector<Element> all(a.order());
    for (Element x = 0; x < a.order(); ++x) all[x] = x;

    std::vector<Element> basis;
    std::vector<int> orders;
    decompose(a, std::move(all), basis, orders);  // largest factor first
    std::reverse(basis.begin(), basis.end());
    std::reverse(orders.begin(), orders.end());

    AbelianBasis out;
    for (int o : orders) out.invariants.factors.push_back(o);
    out.basis = basis;
    for (size_t i = 1; i < orders.size(); ++i)
        if (orders[i] % orders[i - 1] != 0)
            throw Error("invariant_factors: divisibility chain broken");

    // verify the coordinate map is a bijection
    const int k = static_cast<int>(basis.size());
    out.coords.assign(a.order(), {});
    std::vector<int> digit(k, 0);
    long long total = 1;
    for (int o : orders) total *= o;
    if (total != a.order()) throw Error("invariant_factors: order census mismatch");
    for (long long it = 0;; ++it) {
        Element e = kIdentity;
        for (int i = 0; i < k; ++i) e = a.mul(e, a.pow(basis[i], digit[i]));
        if (!out.coords[e].empty() && it > 0)
            throw Error("invariant_factors: coordinate map not injective");
        out.coords[e] = digit;
        int i = k - 1;
        while (i >= 0 && ++digit[i] == orders[i]) digit[i--] = 0;
        if (i < 0) break;
    }
    for (Element x = 0; x < a.order(); ++x)
        if (out.coords[x].size() != static_cast<size_t>(k) && !(k == 0 && x == kIdentity))
            throw Error("invariant_factors: coordinate map not surjective");
    if (k == 0) out.coords[kIdentity] = {};
    return out;
}

long long euler_phi_ext(long long d) {
    if (d == 0) return 2;
    long long result = d, m = d;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

long long class_count(const AbelianInvariants& inv, int n) {
    const int k = inv.length();
    if (n < k) throw VectorTooShort("class_count: n < number of invariant factors");
    if (n > k || k == 0) return 1;
    return std::max<long long>(euler_phi_ext(inv.factors[0]) / 2, 1);
}

NielsenClass nielsen_class(const GroupTable& a, const AbelianBasis& basis,
                           const std::vector<Element>& tuple) {
    const int k = basis.invariants.length();
    const int n = static_cast<int>(tuple.size());
    if (n < k) throw VectorTooShort("nielsen_class: tuple shorter than invariant count");
    if (!subgroup_generated(a, tuple).is_whole_group())
        throw NotGenerating("nielsen_class: tuple does not generate");

    NielsenClass cls;
    cls.invariants = basis.invariants;
    cls.n = n;
    if (n > k || k == 0) return cls;  // single-class

    const long long d1 = basis.invariants.factors[0];
    IntMatrix m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = static_cast<long>(basis.coords[tuple[i]][j] % d1);
    const BigInt big_d1(static_cast<long>(d1));
    BigInt det = m.det() % big_d1;
    long long delta = mpz_class((det % big_d1 + big_d1) % big_d1).get_si();
    cls.delta = std::min(delta, d1 - delta);
    return cls;
}

NielsenClass nielsen_class(const GroupTable& a, const std::vector<Element>& tuple) {
    return nielsen_class(a, invariant_factors(a), tuple);
}

bool nielsen_equivalent(const GroupTable& a, const std::vector<Element>& u,
                        const std::vector<Element>& v) {
    if (u.size() != v.size()) throw LengthMismatch("nielsen_equivalent: tuple lengths differ");
    AbelianBasis basis = invariant_factors(a);
    return nielsen_class(a, basis, u) == nielsen_class(a, basis, v);
}

}  // namespace aclab
