#include "aclab/wreath.hpp"

#include <numeric>
#include <set>

namespace aclab {

namespace {

// one wreath stage: W = B^t x| C_t, elements (f, c) with
// (f1,c1)(f2,c2) = (f1 * shift(c1, f2), c1 + c2), shift(c,f)(x) = f(x + c).
// Encoding: id = radix(f, base |B|) * t + c; identity encodes to 0.
GroupTable wreath_stage(const GroupTable& base, int t, long long order_cap) {
    const long long b = base.order();
    long long n = t;
    for (int i = 0; i < t; ++i) {
        n *= b;
        if (n > order_cap) throw OrderCapExceeded("wreath product exceeds order cap");
    }
    auto decode_f = [&](long long id, std::vector<Element>& f, int& c) {
        c = static_cast<int>(id % t);
        id /= t;
        f.resize(t);
        for (int i = 0; i < t; ++i) {
            f[i] = static_cast<Element>(id % b);
            id /= b;
        }
    };
    auto encode_f = [&](const std::vector<Element>& f, int c) {
        long long id = 0;
        for (int i = t - 1; i >= 0; --i) id = id * b + f[i];
        return static_cast<Element>(id * t + c);
    };
    std::vector<Element> mul(static_cast<size_t>(n) * n);
    std::vector<Element> f1, f2, prod(t);
    for (long long x = 0; x < n; ++x) {
        int c1;
        decode_f(x, f1, c1);
        for (long long y = 0; y < n; ++y) {
            int c2;
            decode_f(y, f2, c2);
            for (int i = 0; i < t; ++i) prod[i] = base.mul(f1[i], f2[(i + c1) % t]);
            mul[static_cast<size_t>(x) * n + y] = encode_f(prod, (c1 + c2) % t);
        }
    }
    return GroupTable(static_cast<int>(n), std::move(mul));
}

// lift x_{i-1} into the new stage: f supported at coordinate 0 with value
// prev, times the top generator c = 1
Element distinguished_lift(const GroupTable& base, int t, Element prev) {
    const long long b = base.order();
    long long id = prev;  // f(0) = prev, f(i) = identity otherwise
    (void)b;
    return static_cast<Element>(id * t + 1);
}

}  // namespace

WreathGroup wreath_cyclic(const WreathSpec& spec, int order_cap) {
    if (spec.orders.empty()) throw UnknownSpec("wreath: at least one stage required");
    for (size_t i = 0; i < spec.orders.size(); ++i) {
        if (spec.orders[i] < 2) throw UnknownSpec("wreath: stage orders must be >= 2");
        for (size_t j = i + 1; j < spec.orders.size(); ++j)
            if (std::gcd(spec.orders[i], spec.orders[j]) != 1)
                throw NotCoprime("wreath: stage orders must be pairwise coprime");
    }
    GroupTable g = builtin_group("cyclic", {spec.orders[0]}, order_cap);
    Element x = spec.orders[0] > 1 ? 1 : 0;  // generator of the first stage
    long long ab = spec.orders[0];
    for (size_t i = 1; i < spec.orders.size(); ++i) {
        int t = spec.orders[i];
        GroupTable next = wreath_stage(g, t, order_cap);
        x = distinguished_lift(g, t, x);
        g = std::move(next);
        ab *= t;
    }
    return WreathGroup{std::move(g), x, ab};
}

WreathVerifyReport wreath_weight_one_verify(const WreathSpec& spec, int order_cap) {
    WreathGroup wg = wreath_cyclic(spec, order_cap);
    const GroupTable& g = wg.table;
    WreathVerifyReport r;
    r.group_order = g.order();
    r.ab_order = wg.ab_order;

    r.distinguished_order = g.element_order(wg.distinguished);
    r.order_matches_ab = (r.distinguished_order == wg.ab_order);

    // centralizer of x_k
    std::set<Element> centralizer;
    for (Element y = 0; y < g.order(); ++y)
        if (g.mul(y, wg.distinguished) == g.mul(wg.distinguished, y)) centralizer.insert(y);
    std::set<Element> cyc;
    Element p = kIdentity;
    do {
        cyc.insert(p);
        p = g.mul(p, wg.distinguished);
    } while (p != kIdentity);
    r.self_centralizing = (centralizer == cyc);

    // conjugacy class of x_k vs the coset x_k [G,G]
    std::set<Element> cls;
    for (Element y = 0; y < g.order(); ++y) cls.insert(g.conj(wg.distinguished, y));
    r.conjugacy_class_size = static_cast<long long>(cls.size());
    SubgroupSet comm = derived_subgroup(g);
    std::set<Element> coset;
    for (Element d : comm.elements()) coset.insert(g.mul(wg.distinguished, d));
    r.coset_single_conjugacy = (coset == cls);

    r.weight_one = (weight(g) == 1);
    r.pass = r.order_matches_ab && r.self_centralizing && r.coset_single_conjugacy &&
             r.weight_one && r.conjugacy_class_size == r.group_order / r.ab_order;
    return r;
}

}  // namespace aclab
