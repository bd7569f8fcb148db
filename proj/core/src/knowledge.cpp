#include "gt/knowledge.hpp"

#include <algorithm>

#include "gt/family_ops.hpp"

namespace gt {

AnswerVector answer_vector(const SetFamily& f, const Bitset& defectives) {
  if (defectives.universe() != f.n) throw BadScenario("answer_vector: universe mismatch");
  Bitset out(std::max(f.size(), 1));
  for (int i = 0; i < f.size(); ++i)
    if (f.sets[i].intersects(defectives)) out.set(i + 1);
  return out;
}

KnowledgeView coalition_view(const SetFamily& f, const Bitset& coalition,
                             const Bitset& defectives) {
  if (coalition.empty()) throw BadParameter("coalition_view: coalition must be nonempty");
  if (coalition.universe() != f.n) throw BadParameter("coalition_view: universe mismatch");
  KnowledgeView v;
  v.coalition = coalition;
  Bitset answers = answer_vector(f, defectives);
  for (int i = 0; i < f.size(); ++i)
    if (f.sets[i].intersects(coalition)) {
      v.visible.push_back(i + 1);
      v.answers.push_back(answers.test(i + 1));
    }
  return v;
}

ConstraintView to_constraints(const SetFamily& f, const KnowledgeView& view) {
  ConstraintView c;
  c.n = f.n;
  for (std::size_t k = 0; k < view.visible.size(); ++k)
    (view.answers[k] ? c.yes : c.no).push_back(f.sets[view.visible[k] - 1]);
  return c;
}

namespace {

// Hit every pending query with at most `slots` further elements. Branches on
// the pending query with the fewest candidates. Complete: any hitting set of
// size <= slots survives down some branch.
bool cover_dfs(const std::vector<Bitset>& pending, int slots) {
  if (pending.empty()) return true;
  if (slots == 0) return false;
  std::size_t best = 0;
  int best_size = 1 << 30;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    int sz = pending[i].count();
    if (sz < best_size) {
      best_size = sz;
      best = i;
    }
  }
  if (best_size == 0) return false;
  const Bitset branch = pending[best];
  for (int e = branch.first(); e; e = branch.next(e)) {
    std::vector<Bitset> rest;
    rest.reserve(pending.size());
    for (const auto& q : pending)
      if (!q.test(e)) rest.push_back(q);
    if (cover_dfs(rest, slots - 1)) return true;
  }
  return false;
}

}  // namespace

bool exists_consistent(const ConstraintView& view, int d, ScenarioFilter filter) {
  if (d < 0 || d > view.n) return false;
  Bitset allowed = Bitset::full(view.n);
  for (const auto& q : view.no) allowed.subtract(q);
  if (filter.forbid) allowed.reset(*filter.forbid);
  // a scenario = d distinct allowed elements containing `require`, hitting
  // every YES query; padding past a minimal hitting set is unconstrained
  if (allowed.count() < d) return false;

  int pre_chosen = 0;
  std::vector<Bitset> pending;
  pending.reserve(view.yes.size());
  if (filter.require) {
    if (!allowed.test(*filter.require)) return false;
    pre_chosen = 1;
  }
  for (const auto& q : view.yes) {
    if (filter.require && q.test(*filter.require)) continue;
    Bitset p = q & allowed;
    if (p.empty()) return false;
    pending.push_back(std::move(p));
  }
  // dedupe identical pending queries (transcripts repeat them)
  std::sort(pending.begin(), pending.end());
  pending.erase(std::unique(pending.begin(), pending.end()), pending.end());
  return cover_dfs(pending, d - pre_chosen);
}

namespace {

bool scenario_consistent(const SetFamily& f, const KnowledgeView& view, const Bitset& candidate) {
  for (std::size_t k = 0; k < view.visible.size(); ++k)
    if (f.sets[view.visible[k] - 1].intersects(candidate) != (bool)view.answers[k]) return false;
  return true;
}

}  // namespace

ScenarioSet consistent_scenarios(const SetFamily& f, const KnowledgeView& view, int d,
                                 std::uint64_t budget) {
  if (binomial(f.n, d) > budget)
    throw BudgetExceeded("consistent_scenarios: C(n,d) beyond budget, use the sampled variant");
  ScenarioSet out;
  for_each_combination(f.n, d, [&](const std::vector<int>& c) {
    Bitset cand = Bitset::of(f.n, c);
    if (scenario_consistent(f, view, cand)) out.scenarios.push_back(std::move(cand));
    return true;
  });
  return out;
}

ScenarioSet consistent_scenarios_sampled(const SetFamily& f, const KnowledgeView& view, int d,
                                         std::uint64_t draws, std::uint64_t seed) {
  ScenarioSet out;
  out.sampled = true;
  Rng rng(seed);
  std::vector<int> pool(f.n);
  for (int i = 0; i < f.n; ++i) pool[i] = i + 1;
  for (std::uint64_t t = 0; t < draws; ++t) {
    // partial Fisher-Yates draw of a d-subset
    for (int i = 0; i < d; ++i) {
      std::size_t j = i + (std::size_t)rng.below(pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    Bitset cand(f.n);
    for (int i = 0; i < d; ++i) cand.set(pool[i]);
    if (scenario_consistent(f, view, cand)) out.scenarios.push_back(std::move(cand));
  }
  std::sort(out.scenarios.begin(), out.scenarios.end());
  out.scenarios.erase(std::unique(out.scenarios.begin(), out.scenarios.end()),
                      out.scenarios.end());
  return out;
}

namespace {

ScenarioFilter require_of(int x) {
  ScenarioFilter f;
  f.require = x;
  return f;
}

ScenarioFilter forbid_of(int y) {
  ScenarioFilter f;
  f.forbid = y;
  return f;
}

}  // namespace

bool knows_own_status_view(const ConstraintView& view, int x, const Bitset& defectives, int d) {
  // the truth is consistent, so knowledge = no consistent scenario with the
  // opposite membership status for x
  if (defectives.test(x)) return !exists_consistent(view, d, forbid_of(x));
  return !exists_consistent(view, d, require_of(x));
}

bool identifies_set_view(const ConstraintView& view, const Bitset& defectives, int d) {
  // a consistent D' != D must miss some y in D (both have cardinality d)
  for (int y = defectives.first(); y; y = defectives.next(y))
    if (exists_consistent(view, d, forbid_of(y))) return false;
  return true;
}

bool identifies_no_defective_view(const ConstraintView& view, const Bitset& defectives, int d) {
  for (int y = defectives.first(); y; y = defectives.next(y))
    if (!exists_consistent(view, d, forbid_of(y))) return false;
  return true;
}

namespace {

ConstraintView constraints_for(const SetFamily& f, const Bitset& coalition,
                               const Bitset& defectives, int d) {
  if ((int)defectives.count() != d)
    throw BadScenario("defective set cardinality does not match d");
  return to_constraints(f, coalition_view(f, coalition, defectives));
}

}  // namespace

bool knows_own_status(const SetFamily& f, int x, const Bitset& defectives, int d) {
  if (x < 1 || x > f.n) throw BadParameter("knows_own_status: element out of range");
  Bitset s(f.n);
  s.set(x);
  return knows_own_status_view(constraints_for(f, s, defectives, d), x, defectives, d);
}

bool identifies_set(const SetFamily& f, const Bitset& coalition, const Bitset& defectives, int d) {
  return identifies_set_view(constraints_for(f, coalition, defectives, d), defectives, d);
}

bool identifies_no_defective(const SetFamily& f, const Bitset& coalition, const Bitset& defectives,
                             int d) {
  return identifies_no_defective_view(constraints_for(f, coalition, defectives, d), defectives, d);
}

bool element_always_knows_status(const SetFamily& f, int x, int d) {
  return covering_number_exceeds(restricted_star(f, x), d);
}

}  // namespace gt
