#include "aclab/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace aclab {

GroupTable::GroupTable(int order, std::vector<Element> mul, std::vector<std::string> names)
    : order_(order), mul_(std::move(mul)), names_(std::move(names)) {
    if (order_ < 1 || mul_.size() != static_cast<size_t>(order_) * order_)
        throw Error("GroupTable: table size does not match order");
    const int n = order_;
    for (Element x = 0; x < n; ++x) {
        if (this->mul(kIdentity, x) != x || this->mul(x, kIdentity) != x)
            throw Error("GroupTable: identity law violated");
    }
    inv_.assign(n, -1);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (this->mul(x, y) == kIdentity && this->mul(y, x) == kIdentity) {
                inv_[x] = y;
                break;
            }
        }
        if (inv_[x] < 0) throw Error("GroupTable: element without two-sided inverse");
    }
    auto assoc = [&](Element x, Element y, Element z) {
        return this->mul(this->mul(x, y), z) == this->mul(x, this->mul(y, z));
    };
    if (n <= 512) {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                for (Element z = 0; z < n; ++z)
                    if (!assoc(x, y, z)) throw Error("GroupTable: associativity violated");
    } else {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<Element> pick(0, n - 1);
        const long long samples = 10LL * n * n;
        for (long long i = 0; i < samples; ++i)
            if (!assoc(pick(rng), pick(rng), pick(rng)))
                throw Error("GroupTable: associativity violated (sampled)");
    }
}

Element GroupTable::pow(Element x, long long e) const {
    if (e < 0) return pow(inv(x), -e);
    Element acc = kIdentity;
    Element base = x;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int GroupTable::element_order(Element x) const {
    int k = 1;
    Element y = x;
    while (y != kIdentity) {
        y = mul(y, x);
        ++k;
    }
    return k;
}

bool GroupTable::is_abelian() const {
    for (Element x = 0; x < order_; ++x)
        for (Element y = x + 1; y < order_; ++y)
            if (mul(x, y) != mul(y, x)) return false;
    return true;
}

const std::string& GroupTable::name(Element x) const {
    static const std::string empty;
    if (names_.empty()) return empty;
    return names_[x];
}

SubgroupSet::SubgroupSet(const GroupTable* parent, std::vector<bool> members)
    : parent_(parent), members_(std::move(members)) {
    for (Element x = 0; x < parent_->order(); ++x)
        if (members_[x]) elements_.push_back(x);
    size_ = static_cast<int>(elements_.size());
}

bool SubgroupSet::is_subgroup() const {
    if (!members_[kIdentity]) return false;
    for (Element x : elements_) {
        if (!members_[parent_->inv(x)]) return false;
        for (Element y : elements_)
            if (!members_[parent_->mul(x, y)]) return false;
    }
    return true;
}

bool SubgroupSet::is_normal() const {
    if (normal_) return *normal_;
    bool ok = true;
    for (Element g = 0; g < parent_->order() && ok; ++g)
        for (Element m : elements_)
            if (!members_[parent_->conj(m, g)]) {
                ok = false;
                break;
            }
    normal_ = ok;
    return ok;
}

namespace {

Permutation compose_perm(const Permutation& g, const Permutation& h) {
    // right action: (g*h)(x) = h(g(x))
    Permutation r(g.size());
    for (size_t x = 0; x < g.size(); ++x) r[x] = h[g[x]];
    return r;
}

std::string cycle_notation(const Permutation& p) {
    std::ostringstream out;
    std::vector<bool> seen(p.size(), false);
    bool any = false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        any = true;
        out << '(';
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            out << j;
            first = false;
            j = p[j];
        }
        out << ')';
    }
    if (!any) out << "()";
    return out.str();
}

}  // namespace

GroupTable group_from_permutations(const std::vector<Permutation>& generators, int order_cap) {
    size_t degree = 1;
    for (const auto& g : generators) degree = std::max(degree, g.size());
    for (const auto& g : generators) {
        if (g.size() != degree) throw InvalidPermutation("generators have mixed degrees");
        std::vector<bool> hit(degree, false);
        for (int v : g) {
            if (v < 0 || static_cast<size_t>(v) >= degree || hit[v])
                throw InvalidPermutation("generator is not a bijection");
            hit[v] = true;
        }
    }
    Permutation identity(degree);
    std::iota(identity.begin(), identity.end(), 0);

    std::vector<Permutation> elems{identity};
    std::map<Permutation, Element> index{{identity, 0}};
    std::queue<Element> todo;
    todo.push(0);
    while (!todo.empty()) {
        Element cur = todo.front();
        todo.pop();
        for (const auto& gen : generators) {
            Permutation next = compose_perm(elems[cur], gen);
            if (index.emplace(next, static_cast<Element>(elems.size())).second) {
                elems.push_back(next);
                if (static_cast<int>(elems.size()) > order_cap)
                    throw OrderCapExceeded("permutation closure exceeds order cap");
                todo.push(static_cast<Element>(elems.size()) - 1);
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<Element> mul(static_cast<size_t>(n) * n);
    std::vector<std::string> names(n);
    for (Element x = 0; x < n; ++x) {
        names[x] = cycle_notation(elems[x]);
        for (Element y = 0; y < n; ++y)
            mul[static_cast<size_t>(x) * n + y] = index.at(compose_perm(elems[x], elems[y]));
    }
    return GroupTable(n, std::move(mul), std::move(names));
}

namespace {

GroupTable table_from_fn(int n, const std::function<Element(Element, Element)>& f,
                         std::vector<std::string> names = {}) {
    std::vector<Element> mul(static_cast<size_t>(n) * n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) mul[static_cast<size_t>(x) * n + y] = f(x, y);
    return GroupTable(n, std::move(mul), std::move(names));
}

GroupTable make_cyclic(int m) {
    return table_from_fn(m, [m](Element x, Element y) { return (x + y) % m; });
}

GroupTable make_abelian(const std::vector<int>& ds) {
    long long n = 1;
    for (int d : ds) {
        if (d < 1) throw UnknownSpec("abelian: factors must be >= 1");
        n *= d;
    }
    auto add = [&ds](Element x, Element y) {
        Element r = 0;
        Element xs = x, ys = y;
        // mixed radix, most significant factor first
        std::vector<int> digits(ds.size());
        for (int i = static_cast<int>(ds.size()) - 1; i >= 0; --i) {
            digits[i] = (xs % ds[i] + ys % ds[i]) % ds[i];
            xs /= ds[i];
            ys /= ds[i];
        }
        for (size_t i = 0; i < ds.size(); ++i) r = r * ds[i] + digits[i];
        return r;
    };
    return table_from_fn(static_cast<int>(n), add);
}

GroupTable make_dihedral(int m) {
    // r^i s^j -> i + m*j;  s r = r^-1 s
    return table_from_fn(2 * m, [m](Element x, Element y) {
        int i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
        int i = j1 == 0 ? (i1 + i2) % m : ((i1 - i2) % m + m) % m;
        return i + m * ((j1 + j2) % 2);
    });
}

GroupTable make_quaternion8() {
    // 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k
    auto sign = [](Element x) { return x & 1; };
    auto axis = [](Element x) { return x >> 1; };  // 0:real 1:i 2:j 3:k
    auto pack = [](int ax, int s) { return (ax << 1) | s; };
    return table_from_fn(8, [&](Element x, Element y) {
        static const int prod_axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int prod_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        int ax = prod_axis[axis(x)][axis(y)];
        int s = sign(x) ^ sign(y) ^ prod_sign[axis(x)][axis(y)];
        return pack(ax, s);
    });
}

GroupTable make_heisenberg(int p) {
    // unitriangular 3x3 over Z/p: (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b')
    int n = p * p * p;
    return table_from_fn(n, [p](Element x, Element y) {
        int a1 = x / (p * p), b1 = (x / p) % p, c1 = x % p;
        int a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
        int a = (a1 + a2) % p, b = (b1 + b2) % p, c = (c1 + c2 + a1 * b2) % p;
        return a * p * p + b * p + c;
    });
}

// Arithmetic in GF(p^k), elements encoded base p by coefficient vectors.
struct SmallField {
    int p = 0, k = 0, q = 0;
    std::vector<int> modulus;  // monic irreducible, coefficients of degree 0..k

    explicit SmallField(int q_in) {
        int pp = 2;
        while (pp * pp <= q_in && q_in % pp != 0) ++pp;
        p = (q_in % pp == 0) ? pp : q_in;
        int m = q_in;
        k = 0;
        while (m > 1) {
            if (m % p != 0) throw UnknownSpec("affine: parameter is not a prime power");
            m /= p;
            ++k;
        }
        if (k == 0) throw UnknownSpec("affine: parameter must be >= 2");
        q = q_in;
        if (k == 1) {
            modulus = {0, 1};
            return;
        }
        // brute-force search for a monic irreducible of degree k
        for (int code = 0; code < q; ++code) {
            modulus.assign(k + 1, 0);
            modulus[k] = 1;
            int c = code;
            for (int i = 0; i < k; ++i) {
                modulus[i] = c % p;
                c /= p;
            }
            if (irreducible()) return;
        }
        throw Error("affine: no irreducible polynomial found");
    }

    std::vector<int> decode(int e) const {
        std::vector<int> c(k);
        for (int i = 0; i < k; ++i) {
            c[i] = e % p;
            e /= p;
        }
        return c;
    }
    int encode(const std::vector<int>& c) const {
        int e = 0;
        for (int i = k - 1; i >= 0; --i) e = e * p + c[i];
        return e;
    }
    int add(int a, int b) const {
        auto x = decode(a), y = decode(b);
        for (int i = 0; i < k; ++i) x[i] = (x[i] + y[i]) % p;
        return encode(x);
    }
    int mul(int a, int b) const {
        auto x = decode(a), y = decode(b);
        std::vector<int> prod(2 * k - 1, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        for (int d = 2 * k - 2; d >= k; --d) {
            int c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < k; ++i)
                prod[d - k + i] = ((prod[d - k + i] - c * modulus[i]) % p + p) % p;
        }
        prod.resize(k);
        return encode(prod);
    }

private:
    bool irreducible() const {
        // no roots is not enough for k >= 4; test by checking that no monic
        // factor of degree 1..k/2 divides the modulus
        std::vector<std::vector<int>> cand;
        for (int d = 1; d <= k / 2; ++d) {
            int count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (int code = 0; code < count; ++code) {
                std::vector<int> f(d + 1, 0);
                f[d] = 1;
                int c = code;
                for (int i = 0; i < d; ++i) {
                    f[i] = c % p;
                    c /= p;
                }
                if (divides(f)) return false;
            }
        }
        return true;
    }
    bool divides(const std::vector<int>& f) const {
        std::vector<int> r = modulus;
        int df = static_cast<int>(f.size()) - 1;
        for (int d = static_cast<int>(r.size()) - 1; d >= df; --d) {
            int c = r[d];
            if (c == 0) continue;
            for (int i = 0; i <= df; ++i) r[d - df + i] = ((r[d - df + i] - c * f[i]) % p + p) % p;
        }
        for (int i = 0; i < df; ++i)
            if (r[i] != 0) return false;
        return true;
    }
};

GroupTable make_affine(int q) {
    if (q < 2 || q > 32) throw UnknownSpec("affine: q must be a prime power in [2, 32]");
    SmallField f(q);
    // elements (a, b) with a != 0; identity (1, 0) first, rest lexicographic
    std::vector<std::pair<int, int>> elems;
    elems.emplace_back(1, 0);
    for (int a = 1; a < q; ++a)
        for (int b = 0; b < q; ++b)
            if (!(a == 1 && b == 0)) elems.emplace_back(a, b);
    std::map<std::pair<int, int>, Element> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);
    // right-action composition: apply x then y
    return table_from_fn(static_cast<int>(elems.size()), [&](Element x, Element y) {
        auto [a1, b1] = elems[x];
        auto [a2, b2] = elems[y];
        return index.at({f.mul(a2, a1), f.add(f.mul(a2, b1), b2)});
    });
}

}  // namespace

GroupTable builtin_group(const std::string& name, const std::vector<int>& params, int order_cap) {
    auto need = [&](size_t n) {
        if (params.size() != n) throw UnknownSpec("builtin '" + name + "': wrong parameter count");
    };
    auto check_cap = [&](long long order) {
        if (order > order_cap) throw OrderCapExceeded("builtin '" + name + "' exceeds order cap");
    };
    if (name == "cyclic") {
        need(1);
        if (params[0] < 1) throw UnknownSpec("cyclic: m must be >= 1");
        check_cap(params[0]);
        return make_cyclic(params[0]);
    }
    if (name == "abelian") {
        if (params.empty()) return make_cyclic(1);
        long long n = 1;
        for (int d : params) n *= std::max(d, 1);
        check_cap(n);
        return make_abelian(params);
    }
    if (name == "dihedral") {
        need(1);
        if (params[0] < 1) throw UnknownSpec("dihedral: m must be >= 1");
        check_cap(2LL * params[0]);
        return make_dihedral(params[0]);
    }
    if (name == "quaternion8") {
        need(0);
        return make_quaternion8();
    }
    if (name == "symmetric") {
        need(1);
        int m = params[0];
        if (m < 1 || m > 6) throw UnknownSpec("symmetric: m must be in [1, 6]");
        if (m == 1) return make_cyclic(1);
        std::vector<Permutation> gens;
        Permutation t(m), c(m);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[0], t[1]);
        for (int i = 0; i < m; ++i) c[i] = (i + 1) % m;
        gens.push_back(t);
        gens.push_back(c);
        return group_from_permutations(gens, order_cap);
    }
    if (name == "heisenberg") {
        need(1);
        int p = params[0];
        if (p < 2) throw UnknownSpec("heisenberg: p must be >= 2");
        check_cap(1LL * p * p * p);
        return make_heisenberg(p);
    }
    if (name == "affine") {
        need(1);
        check_cap(1LL * params[0] * (params[0] - 1));
        return make_affine(params[0]);
    }
    throw UnknownSpec("unknown builtin group '" + name + "'");
}

SubgroupSet subgroup_generated(const GroupTable& g, const std::vector<Element>& seed) {
    // products of seed elements from the identity; in a finite group this
    // closure is the generated subgroup
    std::vector<bool> in(g.order(), false);
    in[kIdentity] = true;
    std::queue<Element> todo;
    todo.push(kIdentity);
    while (!todo.empty()) {
        Element x = todo.front();
        todo.pop();
        for (Element s : seed) {
            Element y = g.mul(x, s);
            if (!in[y]) {
                in[y] = true;
                todo.push(y);
            }
        }
    }
    return SubgroupSet(&g, std::move(in));
}

SubgroupSet normal_closure(const GroupTable& g, const std::vector<Element>& seed) {
    std::set<Element> conj_seed;
    for (Element s : seed)
        for (Element x = 0; x < g.order(); ++x) conj_seed.insert(g.conj(s, x));
    return subgroup_generated(g, std::vector<Element>(conj_seed.begin(), conj_seed.end()));
}

SubgroupSet trivial_subgroup(const GroupTable& g) {
    std::vector<bool> in(g.order(), false);
    in[kIdentity] = true;
    return SubgroupSet(&g, std::move(in));
}

SubgroupSet full_subgroup(const GroupTable& g) {
    return SubgroupSet(&g, std::vector<bool>(g.order(), true));
}

Quotient quotient(const GroupTable& g, const SubgroupSet& n) {
    if (!n.is_normal()) throw NotNormal("quotient: subgroup is not normal");
    const int order = g.order();
    std::vector<Element> proj(order, -1);
    std::vector<Element> reps;
    for (Element x = 0; x < order; ++x) {
        if (proj[x] >= 0) continue;
        Element coset = static_cast<Element>(reps.size());
        reps.push_back(x);
        for (Element m : n.elements()) proj[g.mul(x, m)] = coset;
    }
    const int q = static_cast<int>(reps.size());
    std::vector<Element> mul(static_cast<size_t>(q) * q);
    for (Element a = 0; a < q; ++a)
        for (Element b = 0; b < q; ++b)
            mul[static_cast<size_t>(a) * q + b] = proj[g.mul(reps[a], reps[b])];
    return Quotient{GroupTable(q, std::move(mul)), std::move(proj)};
}

SubgroupSet derived_subgroup_of(const GroupTable& g, const SubgroupSet& h) {
    std::set<Element> comms;
    for (Element x : h.elements())
        for (Element y : h.elements()) comms.insert(g.comm(x, y));
    return normal_closure(g, std::vector<Element>(comms.begin(), comms.end()));
}

std::vector<SubgroupSet> derived_series(const GroupTable& g) {
    std::vector<SubgroupSet> series{full_subgroup(g)};
    for (;;) {
        SubgroupSet next = derived_subgroup_of(g, series.back());
        if (next == series.back()) break;
        series.push_back(std::move(next));
    }
    return series;
}

SubgroupSet derived_subgroup(const GroupTable& g) {
    return derived_subgroup_of(g, full_subgroup(g));
}

bool is_soluble(const GroupTable& g) {
    return derived_series(g).back().is_trivial();
}

Quotient abelianization(const GroupTable& g) {
    return quotient(g, derived_subgroup(g));
}

int rank(const GroupTable& g, int budget) {
    const int n = g.order();
    if (n == 1) return 0;
    // k = 1
    for (Element x = 1; x < n; ++x)
        if (subgroup_generated(g, {x}).is_whole_group()) return 1;
    // k >= 2: unordered subsets, pruning elements inside the prefix closure
    std::vector<Element> chosen;
    std::function<bool(int, int, const SubgroupSet&)> search = [&](int k, int from,
                                                                   const SubgroupSet& closure) {
        if (static_cast<int>(chosen.size()) == k) return closure.is_whole_group();
        for (Element x = from; x < n; ++x) {
            if (closure.contains(x)) continue;
            chosen.push_back(x);
            std::vector<Element> seed = chosen;
            SubgroupSet bigger = subgroup_generated(g, seed);
            bool found = search(k, x + 1, bigger);
            chosen.pop_back();
            if (found) return true;
        }
        return false;
    };
    for (int k = 2; k <= budget; ++k) {
        chosen.clear();
        if (search(k, 1, trivial_subgroup(g))) return k;
    }
    throw SearchBudgetExceeded("rank exceeds tuple-size budget");
}

int weight(const GroupTable& g, int budget) {
    const int n = g.order();
    if (n == 1) return 0;
    // distinct single-element normal closures
    std::vector<SubgroupSet> closures;
    for (Element x = 0; x < n; ++x) {
        SubgroupSet c = normal_closure(g, {x});
        if (std::find(closures.begin(), closures.end(), c) == closures.end())
            closures.push_back(std::move(c));
    }
    auto join = [&](const SubgroupSet& a, const SubgroupSet& b) {
        // product of normal subgroups is their join
        std::vector<bool> in(n, false);
        for (Element x : a.elements())
            for (Element y : b.elements()) in[g.mul(x, y)] = true;
        return SubgroupSet(&g, std::move(in));
    };
    std::vector<SubgroupSet> reachable{trivial_subgroup(g)};
    for (int k = 1; k <= budget; ++k) {
        std::vector<SubgroupSet> next;
        for (const auto& base : reachable)
            for (const auto& c : closures) {
                SubgroupSet j = join(base, c);
                if (j.is_whole_group()) return k;
                if (std::find(next.begin(), next.end(), j) == next.end()) next.push_back(std::move(j));
            }
        reachable = std::move(next);
    }
    throw SearchBudgetExceeded("weight exceeds tuple-size budget");
}

std::vector<SubgroupSet> normal_subgroups(const GroupTable& g, int order_cap) {
    const int n = g.order();
    if (n > order_cap) throw OrderCapExceeded("normal_subgroups: group exceeds lattice cap");
    std::set<std::vector<bool>> seen;
    std::vector<SubgroupSet> all;
    auto insert = [&](SubgroupSet s) {
        if (seen.insert(s.bits()).second) all.push_back(std::move(s));
    };
    for (Element x = 0; x < n; ++x) insert(normal_closure(g, {x}));
    // every normal subgroup is a join of single-element closures
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            std::vector<bool> in(n, false);
            for (Element x : all[i].elements())
                for (Element y : all[j].elements()) in[g.mul(x, y)] = true;
            insert(SubgroupSet(&g, std::move(in)));
        }
    std::sort(all.begin(), all.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits() < b.bits();
    });
    return all;
}

SubgroupSet w_subgroup(const GroupTable& g, int order_cap) {
    auto lattice = normal_subgroups(g, order_cap);
    std::vector<bool> meet(g.order(), true);
    bool any_maximal = false;
    for (const auto& n : lattice) {
        if (n.is_whole_group()) continue;
        Quotient q = quotient(g, n);
        if (normal_subgroups(q.table, order_cap).size() == 2) {  // simple quotient
            any_maximal = true;
            for (Element x = 0; x < g.order(); ++x)
                if (!n.contains(x)) meet[x] = false;
        }
    }
    if (!any_maximal) return full_subgroup(g);
    return SubgroupSet(&g, std::move(meet));
}

}  // namespace aclab
