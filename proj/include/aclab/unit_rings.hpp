#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aclab/errors.hpp"
#include "aclab/int_matrix.hpp"

namespace aclab {

// Multiplicative closure of residues in (Z/m)^x.
struct UnitSubgroup {
    long long modulus = 1;
    std::vector<long long> generators;  // reduced residues
    std::vector<long long> members;     // sorted
};

UnitSubgroup unit_subgroup_mod(long long m, const std::vector<long long>& gens);

enum class Verdict { Surjective, NotSurjective, TrivialTarget };

std::string to_string(Verdict v);

// Certificate for the unit map Z[1/n]^x -> (Z/(n-1))^x behind BS(1, n).
struct CoessentialityCertificate {
    long long n = 0;
    long long modulus = 0;  // n - 1
    Verdict verdict = Verdict::Surjective;
    UnitSubgroup image;
    std::optional<long long> witness;  // least unit outside the image
    bool infinite_recalcitrance = false;
    // set when n is a prime power >= 11 but enumeration says surjective,
    // i.e. the stated prime-power range over-covers this n
    bool prime_power_range_divergence = false;

    bool surjective() const { return verdict != Verdict::NotSurjective; }
};

CoessentialityCertificate bs_coessential(long long n);

// (Z/m)^x == {+-1}, i.e. m in {0, 1, 2, 3, 4, 6}.
bool trivial_unit_target(long long m);

// Integer polynomials, coefficient vector by ascending degree.
using IntPoly = std::vector<BigInt>;

IntPoly cyclotomic_poly(int n);
long long phi_at_1(int n);  // Phi_n(1); p for prime powers p^k, else 1

// resultant of two integer polynomials (Sylvester determinant)
BigInt resultant(const IntPoly& f, const IntPoly& g);

struct XiUnitResult {
    bool is_unit = false;
    long long residue = 0;  // xi_a(1) mod Phi_n(1)
};

// xi_a = (1 - zeta_n^a)/(1 - zeta_n) = 1 + x + ... + x^{a-1} mod Phi_n.
XiUnitResult xi_unit_check(int n, long long a);

struct LaurentConstantLift {
    long long modulus = 0;
    long long constant = 0;
    long long inverse = 0;
};

LaurentConstantLift laurent_unit_lift(long long m, long long u);

// Direct enumeration of R = (Z/m)[x]/(f) and the unit image in
// R_C = R/(1 - alpha)R.
struct FiniteQuotientCertificate {
    long long ring_size = 0;
    long long unit_count = 0;
    long long target_unit_count = 0;
    bool surjective = false;
    std::vector<long long> image;  // encoded residue-class ids hit by units
};

FiniteQuotientCertificate finite_quotient_surjectivity(long long m,
                                                       const std::vector<long long>& f,
                                                       const std::vector<long long>& alpha,
                                                       long long size_cap = 1000000);

bool is_prime_power(long long n, long long* p_out = nullptr, int* d_out = nullptr);
std::vector<long long> prime_divisors(long long n);

}  // namespace aclab
