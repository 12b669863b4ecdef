#include "aclab/unit_rings.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "aclab/abelian.hpp"

namespace aclab {

namespace {

long long mod_reduce(long long x, long long m) { return ((x % m) + m) % m; }

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> ps;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

bool is_prime_power(long long n, long long* p_out, int* d_out) {
    if (n < 2) return false;
    auto ps = prime_divisors(n);
    if (ps.size() != 1) return false;
    if (p_out) *p_out = ps[0];
    if (d_out) {
        int d = 0;
        while (n > 1) {
            n /= ps[0];
            ++d;
        }
        *d_out = d;
    }
    return true;
}

UnitSubgroup unit_subgroup_mod(long long m, const std::vector<long long>& gens) {
    if (m < 1) throw RangeError("unit_subgroup_mod: modulus must be >= 1");
    UnitSubgroup out;
    out.modulus = m;
    std::set<long long> members;
    if (m == 1) {
        out.members = {0};
        return out;
    }
    for (long long g : gens) {
        long long r = mod_reduce(g, m);
        if (gcd_ll(r, m) != 1) throw NotCoprime("unit_subgroup_mod: generator not coprime");
        out.generators.push_back(r);
    }
    members.insert(1);
    std::vector<long long> frontier{1};
    while (!frontier.empty()) {
        std::vector<long long> next;
        for (long long x : frontier)
            for (long long g : out.generators) {
                long long y = (x * g) % m;
                if (members.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    out.members.assign(members.begin(), members.end());
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Surjective: return "surjective";
        case Verdict::NotSurjective: return "not-surjective";
        case Verdict::TrivialTarget: return "trivial-target";
    }
    return "?";
}

bool trivial_unit_target(long long m) {
    return m == 0 || m == 1 || m == 2 || m == 3 || m == 4 || m == 6;
}

CoessentialityCertificate bs_coessential(long long n) {
    if (n < 2) throw RangeError("bs_coessential: n must be >= 2");
    CoessentialityCertificate cert;
    cert.n = n;
    cert.modulus = n - 1;
    std::vector<long long> gens{-1};
    for (long long p : prime_divisors(n)) gens.push_back(p);
    if (cert.modulus <= 1) {
        cert.verdict = Verdict::TrivialTarget;
        cert.image = unit_subgroup_mod(1, {});
        return cert;
    }
    cert.image = unit_subgroup_mod(cert.modulus, gens);
    long long phi = euler_phi_ext(cert.modulus);
    if (static_cast<long long>(cert.image.members.size()) == phi) {
        cert.verdict = Verdict::Surjective;
    } else {
        cert.verdict = Verdict::NotSurjective;
        for (long long u = 1; u < cert.modulus; ++u)
            if (gcd_ll(u, cert.modulus) == 1 &&
                !std::binary_search(cert.image.members.begin(), cert.image.members.end(), u)) {
                cert.witness = u;
                break;
            }
        cert.infinite_recalcitrance = true;
    }
    long long p;
    int d;
    if (is_prime_power(n, &p, &d) && n >= 11 && cert.verdict == Verdict::Surjective)
        cert.prime_power_range_divergence = true;
    return cert;
}

IntPoly cyclotomic_poly(int n) {
    if (n < 1 || n > 200) throw RangeError("cyclotomic_poly: n out of budget [1, 200]");
    // x^n - 1 = prod_{d | n} Phi_d; divide out the proper divisors
    IntPoly num(n + 1, BigInt(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        IntPoly phi_d = cyclotomic_poly(d);
        // exact division num /= phi_d (phi_d is monic)
        IntPoly q(num.size() - phi_d.size() + 1, BigInt(0));
        IntPoly r = num;
        for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
            BigInt c = r[i + phi_d.size() - 1];
            q[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < phi_d.size(); ++j) r[i + j] -= c * phi_d[j];
        }
        num = std::move(q);
    }
    return num;
}

long long phi_at_1(int n) {
    if (n < 2) throw RangeError("phi_at_1: n must be >= 2");
    IntPoly phi = cyclotomic_poly(n);
    BigInt v = 0;
    for (auto it = phi.rbegin(); it != phi.rend(); ++it) v = v + *it;
    long long result = v.get_si();
    long long p;
    if (is_prime_power(n, &p, nullptr)) {
        if (result != p) throw Error("phi_at_1: prime-power value mismatch");
    } else if (result != 1) {
        throw Error("phi_at_1: composite value mismatch");
    }
    return result;
}

namespace {

int poly_degree(const IntPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

}  // namespace

BigInt resultant(const IntPoly& f, const IntPoly& g) {
    int df = poly_degree(f), dg = poly_degree(g);
    if (df < 0 || dg < 0) return 0;
    if (df == 0) {
        BigInt r = 1;
        for (int i = 0; i < dg; ++i) r *= f[0];
        return r;
    }
    if (dg == 0) {
        BigInt r = 1;
        for (int i = 0; i < df; ++i) r *= g[0];
        return r;
    }
    const int n = df + dg;
    IntMatrix s(n, n);
    for (int i = 0; i < dg; ++i)
        for (int j = 0; j <= df; ++j) s.at(i, i + j) = f[df - j];
    for (int i = 0; i < df; ++i)
        for (int j = 0; j <= dg; ++j) s.at(dg + i, i + j) = g[dg - j];
    return s.det();
}

XiUnitResult xi_unit_check(int n, long long a) {
    long long p;
    if (!is_prime_power(n, &p, nullptr))
        throw NotPrimePower("xi_unit_check: n must be a prime power");
    if (gcd_ll(mod_reduce(a, n), n) != 1) throw NotCoprime("xi_unit_check: a not coprime to n");

    IntPoly phi = cyclotomic_poly(n);
    int deg = poly_degree(phi);
    long long aa = mod_reduce(a, n);
    // xi_a = 1 + x + ... + x^{a-1}, reduced mod Phi_n
    IntPoly xi(std::max<long long>(aa, 1), BigInt(0));
    for (long long i = 0; i < aa; ++i) xi[i] = 1;
    for (int i = static_cast<int>(xi.size()) - 1; i >= deg; --i) {
        BigInt c = xi[i];
        if (c == 0) continue;
        for (int j = 0; j <= deg; ++j) xi[i - deg + j] -= c * phi[j];
    }
    xi.resize(deg, BigInt(0));
    if (xi.empty()) xi.push_back(BigInt(0));

    XiUnitResult out;
    BigInt res = resultant(phi, xi);
    out.is_unit = (res == 1 || res == -1);

    long long m = phi_at_1(n);
    const BigInt big_m(static_cast<long>(m));
    BigInt at1 = 0;
    for (const BigInt& c : xi) at1 += c;
    BigInt residue = (at1 % big_m + big_m) % big_m;
    out.residue = residue.get_si();
    if (out.residue != mod_reduce(a, m))
        throw Error("xi_unit_check: residue does not match a mod Phi_n(1)");
    return out;
}

LaurentConstantLift laurent_unit_lift(long long m, long long u) {
    if (m < 2) throw RangeError("laurent_unit_lift: modulus must be >= 2");
    long long r = mod_reduce(u, m);
    if (gcd_ll(r, m) != 1) throw NotCoprime("laurent_unit_lift: u not coprime to m");
    // extended gcd for the constant inverse
    long long a = r, b = m, x0 = 1, x1 = 0;
    while (b != 0) {
        long long q = a / b;
        long long tmp = a - q * b;
        a = b;
        b = tmp;
        tmp = x0 - q * x1;
        x0 = x1;
        x1 = tmp;
    }
    LaurentConstantLift out;
    out.modulus = m;
    out.constant = r;
    out.inverse = mod_reduce(x0, m);
    if (mod_reduce(out.constant * out.inverse, m) != 1)
        throw Error("laurent_unit_lift: inverse check failed");
    return out;
}

namespace {

// R = (Z/m)[x]/(f) with f monic; elements encoded base m
struct FiniteRing {
    long long m;
    int deg;
    std::vector<long long> f;  // monic, size deg+1

    long long size() const {
        long long s = 1;
        for (int i = 0; i < deg; ++i) s *= m;
        return s;
    }
    std::vector<long long> decode(long long e) const {
        std::vector<long long> c(deg);
        for (int i = 0; i < deg; ++i) {
            c[i] = e % m;
            e /= m;
        }
        return c;
    }
    long long encode(const std::vector<long long>& c) const {
        long long e = 0;
        for (int i = deg - 1; i >= 0; --i) e = e * m + c[i];
        return e;
    }
    long long add(long long a, long long b) const {
        auto x = decode(a), y = decode(b);
        for (int i = 0; i < deg; ++i) x[i] = (x[i] + y[i]) % m;
        return encode(x);
    }
    long long mul(long long a, long long b) const {
        auto x = decode(a), y = decode(b);
        std::vector<long long> prod(2 * deg - 1 > 0 ? 2 * deg - 1 : 1, 0);
        for (int i = 0; i < deg; ++i)
            for (int j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % m;
        for (int d = static_cast<int>(prod.size()) - 1; d >= deg; --d) {
            long long c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < deg; ++i) prod[d - deg + i] = mod_reduce(prod[d - deg + i] - c * f[i], m);
        }
        prod.resize(deg);
        return encode(prod);
    }
    long long x_elem() const {
        if (deg == 1) return constant(-f[0]);  // x == -f[0] in degree one
        std::vector<long long> c(deg, 0);
        c[1] = 1;
        return encode(c);
    }
    long long from_poly(const std::vector<long long>& poly) const {
        long long x = x_elem();
        long long acc = constant(0), xp = one();
        for (long long coeff : poly) {
            acc = add(acc, mul(constant(coeff), xp));
            xp = mul(xp, x);
        }
        return acc;
    }
    long long one() const { return constant(1); }
    long long constant(long long c) const {
        std::vector<long long> v(deg, 0);
        v[0] = mod_reduce(c, m);
        return encode(v);
    }
    // a finite commutative ring element is a unit iff some power equals 1
    bool is_unit(long long a) const {
        long long x = a;
        std::set<long long> seen;
        while (seen.insert(x).second) {
            if (x == one()) return true;
            x = mul(x, a);
        }
        return false;
    }
};

}  // namespace

FiniteQuotientCertificate finite_quotient_surjectivity(long long m,
                                                       const std::vector<long long>& f,
                                                       const std::vector<long long>& alpha,
                                                       long long size_cap) {
    if (m < 2) throw RangeError("finite_quotient_surjectivity: modulus must be >= 2");
    std::vector<long long> fr;
    for (long long c : f) fr.push_back(mod_reduce(c, m));
    while (fr.size() > 1 && fr.back() == 0) fr.pop_back();
    if (fr.size() < 2 || fr.back() != 1)
        throw RangeError("finite_quotient_surjectivity: f must be monic of degree >= 1");
    FiniteRing ring{m, static_cast<int>(fr.size()) - 1, fr};
    if (ring.size() > size_cap)
        throw SizeCapExceeded("finite_quotient_surjectivity: ring too large");

    long long al = ring.from_poly(alpha);
    if (!ring.is_unit(al)) throw AlphaNotUnit("finite_quotient_surjectivity: alpha is not a unit");

    // the ideal (1 - alpha)R
    long long t = ring.add(ring.one(), ring.mul(ring.constant(-1), al));
    std::set<long long> ideal;
    for (long long r = 0; r < ring.size(); ++r) ideal.insert(ring.mul(r, t));

    // additive cosets of the ideal: class id = least member
    std::vector<long long> coset(ring.size(), -1);
    for (long long r = 0; r < ring.size(); ++r) {
        if (coset[r] >= 0) continue;
        for (long long i : ideal) {
            long long y = ring.add(r, i);
            if (coset[y] < 0) coset[y] = r;
        }
    }

    FiniteQuotientCertificate cert;
    cert.ring_size = ring.size();
    std::set<long long> image;
    std::set<long long> units_of_target;
    for (long long r = 0; r < ring.size(); ++r) {
        if (ring.is_unit(r)) {
            ++cert.unit_count;
            image.insert(coset[r]);
        }
    }
    // units of R_C: classes c with some class d where c*d == class of 1
    std::set<long long> classes;
    for (long long r = 0; r < ring.size(); ++r) classes.insert(coset[r]);
    long long one_class = coset[ring.one()];
    for (long long c : classes)
        for (long long d : classes)
            if (coset[ring.mul(c, d)] == one_class) {
                units_of_target.insert(c);
                break;
            }
    cert.target_unit_count = static_cast<long long>(units_of_target.size());
    cert.image.assign(image.begin(), image.end());
    cert.surjective = image == units_of_target;
    return cert;
}

}  // namespace aclab
