#pragma once

#include <optional>

#include "gt/set_family.hpp"

namespace gt {

// One YES/NO bit per query position: bit i is set iff query i meets the
// defective set that generated it.
using AnswerVector = Bitset;

// Answers a coalition can see: the indices of the queries meeting it plus
// the YES/NO answer of each.
struct KnowledgeView {
  Bitset coalition;           // S, universe n
  std::vector<int> visible;   // ascending 1-based query indices
  std::vector<bool> answers;  // parallel to visible
};

// What a reasoner must satisfy, decoupled from the generating family so
// adaptive transcripts can reuse the same machinery: a candidate defective
// set must meet every YES query and avoid every NO query.
struct ConstraintView {
  int n = 1;
  std::vector<Bitset> yes;
  std::vector<Bitset> no;
};

struct ScenarioSet {
  std::vector<Bitset> scenarios;  // each of cardinality d
  bool sampled = false;           // true = subsampled, not the exact set
};

// Extra requirements for the existence search.
struct ScenarioFilter {
  std::optional<int> require;  // element that must be defective
  std::optional<int> forbid;   // element that must not be
};

AnswerVector answer_vector(const SetFamily& f, const Bitset& defectives);

// The queries visible to coalition S under true defective set D, with their
// answers. S must be nonempty.
KnowledgeView coalition_view(const SetFamily& f, const Bitset& coalition, const Bitset& defectives);

ConstraintView to_constraints(const SetFamily& f, const KnowledgeView& view);

// Complete branch-and-bound for a d-subset satisfying the view and filter.
// Decides the same question as scanning consistent_scenarios, without
// materializing C(n,d) candidates.
bool exists_consistent(const ConstraintView& view, int d, ScenarioFilter filter = {});

// Exact enumeration of all consistent d-subsets (full C(n,d) scan). Throws
// BudgetExceeded when C(n,d) > budget; use the sampled variant beyond that.
ScenarioSet consistent_scenarios(const SetFamily& f, const KnowledgeView& view, int d,
                                 std::uint64_t budget = 2'000'000);

// Monte-Carlo subsample of the consistent set, flagged as such. Never a
// substitute for the exact forms in equivalence checks.
ScenarioSet consistent_scenarios_sampled(const SetFamily& f, const KnowledgeView& view, int d,
                                         std::uint64_t draws, std::uint64_t seed);

// --- view-level predicates (shared with the adaptive module) ---
bool knows_own_status_view(const ConstraintView& view, int x, const Bitset& defectives, int d);
bool identifies_set_view(const ConstraintView& view, const Bitset& defectives, int d);
bool identifies_no_defective_view(const ConstraintView& view, const Bitset& defectives, int d);

// --- family-level predicates ---

// Every scenario consistent with x's view agrees with D about x.
bool knows_own_status(const SetFamily& f, int x, const Bitset& defectives, int d);

// The coalition's consistent set is exactly {D}.
bool identifies_set(const SetFamily& f, const Bitset& coalition, const Bitset& defectives, int d);

// For every defective y some consistent scenario avoids y.
bool identifies_no_defective(const SetFamily& f, const Bitset& coalition, const Bitset& defectives,
                             int d);

// tau(H_x) > d for H_x = restricted_star(f, x); equivalently x learns its
// status under every defective set of size d.
bool element_always_knows_status(const SetFamily& f, int x, int d);

}  // namespace gt
