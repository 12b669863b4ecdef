#pragma once

#include <vector>

#include "aclab/group.hpp"

namespace aclab {

// Iterated regular wreath product of cyclic groups with pairwise coprime
// orders, associated left to right: G_1 = C_1, G_i = G_{i-1} wr C_i.
struct WreathSpec {
    std::vector<int> orders;
};

// Resulting group table plus the distinguished element built stage by
// stage: x_1 = c_1, x_i = f_i c_i with f_i supported at the identity
// coordinate with value x_{i-1}.
struct WreathGroup {
    GroupTable table;
    Element distinguished;  // x_k
    long long ab_order;     // product of the stage orders
};

WreathGroup wreath_cyclic(const WreathSpec& spec, int order_cap = kDefaultOrderCap);

struct WreathVerifyReport {
    bool pass = false;
    long long group_order = 0;
    long long ab_order = 0;
    int distinguished_order = 0;
    bool order_matches_ab = false;        // order(x_k) == |G_ab|
    bool self_centralizing = false;       // C_G(x_k) == <x_k>
    bool coset_single_conjugacy = false;  // x_k [G,G] is one conjugacy class
    bool weight_one = false;
    long long conjugacy_class_size = 0;   // expected |G| / |G_ab|
};

WreathVerifyReport wreath_weight_one_verify(const WreathSpec& spec,
                                            int order_cap = kDefaultOrderCap);

}  // namespace aclab
