#pragma once

#include "gt/set_family.hpp"

namespace gt {

// How the "different sets" quantifiers of the subfamily properties treat
// duplicates: by value (one copy of each repeated set) or by index (repeated
// values stay distinct). Dual families are checked by index, since dual
// positions carry element identity.
enum class DistinctBy { value, index };

// For every pair of distinct d-subsets X1, X2 of [n] some member meets
// exactly one of them. Vacuously true at d = n. Throws BadParameter outside
// 1 <= d <= n. Witness: the first indistinguishable scenario pair.
PropertyReport is_d_separating(const SetFamily& f, int d);

// Distinct d-subfamilies have distinct unions (injectivity of the union map).
PropertyReport is_d_union_free(const SetFamily& f, int d, DistinctBy mode = DistinctBy::value);

// No member lies inside the union of d other members.
PropertyReport is_d_cover_free(const SetFamily& f, int d, DistinctBy mode = DistinctBy::value);

// No r-wise intersection lies inside the union of d other members; the empty
// intersection counts as contained in anything.
PropertyReport is_r_d_cover_free(const SetFamily& f, int r, int d,
                                 DistinctBy mode = DistinctBy::value);

// The ceil(log2 n) bit-pattern sets B_j = { x : bit j of x-1 is set }; a
// minimal 1-separating family. Throws BadParameter for n < 2.
SetFamily binary_separating_family(int n);

}  // namespace gt
