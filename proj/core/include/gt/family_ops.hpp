#pragma once

#include "gt/set_family.hpp"

namespace gt {

// {[n] \ F : F in family}, order preserved
SetFamily complement_family(const SetFamily& f);

// One set per element a of [n]: { i : a in set i }, indexed over the query
// positions 1..|f.sets|. Multiset semantics: elements with equal stars keep
// separate (consecutive) entries, so the output always has exactly n sets.
SetFamily dual_family(const SetFamily& f);

// All distinct unions of d pairwise value-distinct members; deduplicated,
// first-occurrence order. Empty when fewer than d distinct members exist.
SetFamily d_fold_unions(const SetFamily& f, int d);

// Antichain check: fails when one member is contained in a member at a
// different index (equal values count as containment).
PropertyReport is_sperner(const SetFamily& f);

// F1 u F2 = F1 u F3 forces F2 = F3 over pairwise value-distinct triples.
PropertyReport is_cancellative(const SetFamily& f);

// Same with intersections in place of unions.
PropertyReport is_intersection_cancellative(const SetFamily& f);

// Every pairwise intersection is itself a member (by value).
PropertyReport is_intersection_closed(const SetFamily& f);

// Minimum size of a transversal meeting every member set; 0 for an empty
// family. Throws EmptyMemberSet when a member is empty (no transversal).
int covering_number(const SetFamily& h);

// tau(h) > d, tolerating empty members (tau = infinity). Bounded search.
bool covering_number_exceeds(const SetFamily& h, int d);

// { Q \ {x} : Q in f, x in Q } as a list, duplicates kept, universe [n].
SetFamily restricted_star(const SetFamily& f, int x);

}  // namespace gt
