#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "aclab/abelian.hpp"
#include "aclab/unit_rings.hpp"

using namespace aclab;

namespace {

// multiply two integer polynomials and reduce mod a monic modulus
IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const IntPoly& mod) {
    IntPoly prod(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    int deg = static_cast<int>(mod.size()) - 1;
    for (int i = static_cast<int>(prod.size()) - 1; i >= deg; --i) {
        BigInt c = prod[i];
        if (c == 0) continue;
        for (int j = 0; j <= deg; ++j) prod[i - deg + j] -= c * mod[j];
    }
    prod.resize(deg, BigInt(0));
    return prod;
}

IntPoly reduce(IntPoly f, const IntPoly& mod) { return mul_mod(f, {BigInt(1)}, mod); }

}  // namespace

TEST_CASE("multiplicative closures modulo m") {
    UnitSubgroup u = unit_subgroup_mod(10, {-1, 11});
    CHECK(u.members == std::vector<long long>{1, 9});

    CHECK(unit_subgroup_mod(7, {1}).members == std::vector<long long>{1});
    CHECK(unit_subgroup_mod(5, {2}).members == std::vector<long long>{1, 2, 3, 4});
    CHECK(unit_subgroup_mod(1, {}).members == std::vector<long long>{0});

    CHECK_THROWS_AS(unit_subgroup_mod(10, {5}), NotCoprime);
}

TEST_CASE("closure order divides the unit group order") {
    for (long long m : {8LL, 15LL, 36LL, 100LL, 9973LL}) {
        long long phi = euler_phi_ext(m);
        for (long long g = 2; g < 40; ++g) {
            if (std::gcd(g, m) != 1) continue;
            CHECK(phi % static_cast<long long>(unit_subgroup_mod(m, {g}).members.size()) == 0);
        }
    }
}

TEST_CASE("unit-image certificates") {
    CoessentialityCertificate c2 = bs_coessential(2);
    CHECK(c2.verdict == Verdict::TrivialTarget);
    CHECK(c2.surjective());

    CoessentialityCertificate c11 = bs_coessential(11);
    CHECK(c11.verdict == Verdict::NotSurjective);
    CHECK(c11.image.members == std::vector<long long>{1, 9});
    REQUIRE(c11.witness.has_value());
    CHECK(*c11.witness == 3);
    CHECK(c11.infinite_recalcitrance);

    CHECK(bs_coessential(6).verdict == Verdict::Surjective);
    CHECK_THROWS_AS(bs_coessential(1), RangeError);
}

TEST_CASE("trivial unit targets always certify surjective") {
    CHECK(trivial_unit_target(0));
    for (long long m : {1LL, 2LL, 3LL, 4LL, 6LL}) {
        CHECK(trivial_unit_target(m));
        CHECK(bs_coessential(m + 1).surjective());
    }
    CHECK_FALSE(trivial_unit_target(5));
    CHECK_FALSE(trivial_unit_target(8));
}

TEST_CASE("borderline fourth power of two") {
    CoessentialityCertificate c16 = bs_coessential(16);
    CHECK(c16.verdict == Verdict::Surjective);
    CHECK(c16.prime_power_range_divergence);
    CHECK(c16.image.members.size() == 8);  // all of (Z/15)^x
}

TEST_CASE("prime power images are generated by the prime and minus one") {
    for (long long n = 4; n <= 10000; ++n) {
        long long p;
        if (!is_prime_power(n, &p)) continue;
        CoessentialityCertificate c = bs_coessential(n);
        UnitSubgroup direct = unit_subgroup_mod(n - 1, {-1, p});
        CHECK(c.image.members == direct.members);
    }
}

TEST_CASE("cyclotomic polynomials by the divisor recurrence") {
    IntPoly phi9 = cyclotomic_poly(9);
    REQUIRE(phi9.size() == 7);
    CHECK(phi9 == IntPoly{1, 0, 0, 1, 0, 0, 1});  // x^6 + x^3 + 1

    CHECK(phi_at_1(9) == 3);
    CHECK(phi_at_1(12) == 1);
    CHECK(phi_at_1(5) == 5);
    CHECK(phi_at_1(64) == 2);
    for (int n = 2; n <= 200; ++n) {
        long long p;
        CHECK(phi_at_1(n) == (is_prime_power(n, &p) ? p : 1));
    }
}

TEST_CASE("resultants") {
    // Res(x^2 - 1, x - 2) = (1 - 2)(-1 - 2) = 3
    BigInt r = resultant({BigInt(-1), BigInt(0), BigInt(1)}, {BigInt(-2), BigInt(1)});
    CHECK((r == 3 || r == -3));

    // Res(Phi_5, 1 + x) = Phi_5(-1) = 1
    IntPoly phi5 = cyclotomic_poly(5);
    BigInt s = resultant(phi5, {BigInt(1), BigInt(1)});
    CHECK((s == 1 || s == -1));
}

TEST_CASE("geometric sums are units modulo the cyclotomic polynomial") {
    XiUnitResult a = xi_unit_check(5, 2);
    CHECK(a.is_unit);
    CHECK(a.residue == 2);

    XiUnitResult one = xi_unit_check(7, 1);
    CHECK(one.is_unit);
    CHECK(one.residue == 1);

    XiUnitResult b = xi_unit_check(9, 2);
    CHECK(b.is_unit);
    CHECK(b.residue == 2 % 3);

    CHECK_THROWS_AS(xi_unit_check(12, 5), NotPrimePower);
    CHECK_THROWS_AS(xi_unit_check(9, 3), NotCoprime);
}

TEST_CASE("geometric sum times its telescoping factor") {
    // (1 + x + ... + x^{a-1}) * (1 - x) == 1 - x^a mod Phi_n
    for (int n : {5, 8, 9, 13}) {
        IntPoly phi = cyclotomic_poly(n);
        for (long long a = 1; a < n; ++a) {
            if (std::gcd(a, static_cast<long long>(n)) != 1) continue;
            IntPoly xi(a, BigInt(1));
            IntPoly lhs = mul_mod(reduce(xi, phi), {BigInt(1), BigInt(-1)}, phi);
            IntPoly target(a + 1, BigInt(0));
            target[0] = 1;
            target[a] = -1;
            CHECK(lhs == reduce(target, phi));
        }
    }
}

TEST_CASE("constant lifts and inverses") {
    LaurentConstantLift l = laurent_unit_lift(5, 2);
    CHECK(l.constant == 2);
    CHECK(l.inverse == 3);

    CHECK(laurent_unit_lift(9, 1).inverse == 1);
    CHECK(laurent_unit_lift(10, 7).inverse == 3);
    CHECK_THROWS_AS(laurent_unit_lift(10, 4), NotCoprime);
}

TEST_CASE("unit image in the cyclic quotient by direct enumeration") {
    // R = Z/5 via x - 2
    FiniteQuotientCertificate a = finite_quotient_surjectivity(5, {-2, 1}, {0, 1});
    CHECK(a.surjective);
    CHECK(a.ring_size == 5);

    // field with four elements
    FiniteQuotientCertificate b = finite_quotient_surjectivity(2, {1, 1, 1}, {0, 1});
    CHECK(b.surjective);
    CHECK(b.ring_size == 4);
    CHECK(b.unit_count == 3);

    // alpha = x = 1: the quotient map is the identity
    FiniteQuotientCertificate c = finite_quotient_surjectivity(7, {-1, 1}, {0, 1});
    CHECK(c.surjective);
    CHECK(c.target_unit_count == 6);

    CHECK_THROWS_AS(finite_quotient_surjectivity(4, {-2, 1}, {0, 1}), AlphaNotUnit);
    CHECK_THROWS_AS(finite_quotient_surjectivity(5, {0, 0, 0, 1}, {0, 1}, 100),
                    SizeCapExceeded);
}

TEST_CASE("prime helpers") {
    CHECK(prime_divisors(12) == std::vector<long long>{2, 3});
    CHECK(prime_divisors(49) == std::vector<long long>{7});
    long long p;
    int d;
    CHECK(is_prime_power(32, &p, &d));
    CHECK(p == 2);
    CHECK(d == 5);
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(1));
}
