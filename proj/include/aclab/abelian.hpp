#pragma once

#include <optional>
#include <vector>

#include "aclab/group.hpp"
#include "aclab/int_matrix.hpp"

namespace aclab {

// Invariant factor list d1 | d2 | ... | dk, d1 != 1; a 0 entry stands for Z
// and may only appear last.
struct AbelianInvariants {
    std::vector<long long> factors;

    int length() const { return static_cast<int>(factors.size()); }
    bool operator==(const AbelianInvariants&) const = default;
};

// Basis decomposition of a finite abelian table: A = <b1> x ... x <bk> with
// order(b_i) = factors[i]. coords maps every element to its coordinate
// vector, verified bijective at construction.
struct AbelianBasis {
    AbelianInvariants invariants;
    std::vector<Element> basis;
    std::vector<std::vector<int>> coords;  // indexed by element id
};

AbelianBasis invariant_factors(const GroupTable& a);

// Euler totient with the convention phi(0) = 2, phi(1) = 1.
long long euler_phi_ext(long long d);

// Number of Nielsen equivalence classes of generating n-vectors.
long long class_count(const AbelianInvariants& inv, int n);

// Canonical class label: "single-class" for n > k, else the +/-determinant
// class canonicalized to min(delta, d1 - delta) in [1, d1 - 1].
struct NielsenClass {
    AbelianInvariants invariants;
    int n = 0;
    std::optional<long long> delta;  // empty == single-class

    bool operator==(const NielsenClass&) const = default;
};

NielsenClass nielsen_class(const GroupTable& a, const AbelianBasis& basis,
                           const std::vector<Element>& tuple);
NielsenClass nielsen_class(const GroupTable& a, const std::vector<Element>& tuple);

bool nielsen_equivalent(const GroupTable& a, const std::vector<Element>& u,
                        const std::vector<Element>& v);

}  // namespace aclab
