#pragma once

#include <string>

#include "aclab/group.hpp"
#include "aclab/tuples.hpp"

namespace aclab {

// Grammar, one group per string:
//   perm d=5: (0 1)(2 3), (0 1 2 3 4)
//   builtin: dihedral(6)
//   abelian: 2,4
//   wreath: 2,3
// Errors carry 1-based line/column positions.
GroupTable parse_group_spec(const std::string& text, int order_cap = kDefaultOrderCap);

// Tuple literals: "3,4" (element ids) or, for permutation groups,
// "(0 1)|(0 1 2)" resolved against the group's element names.
Tuple parse_tuple(const GroupTable& g, const std::string& text);
Tuple parse_tuple_perms(const GroupTable& g, const std::string& text);

}  // namespace aclab
