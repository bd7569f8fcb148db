#include <set>

#include "doctest.h"
#include "gt/adaptive.hpp"

using namespace gt;

namespace {

// strategy that never stops: exercises the session step budget
class StallingStrategy : public Strategy {
 public:
  explicit StallingStrategy(int n) : n_(n) {}
  std::optional<Bitset> next_query() override { return Bitset::of(n_, {1}); }
  void on_answer(bool) override {}
  Bitset verdict() const override { return Bitset(n_); }

 private:
  int n_;
};

Bitset oracle_of(int n, std::initializer_list<int> elems) { return Bitset::of(n, elems); }

}  // namespace

TEST_CASE("singleton strategy reads the defectives off directly") {
  SingletonStrategy s(4, 2);
  auto t = run_session(s, oracle_of(4, {1, 3}), 4, 2);
  CHECK(t.steps.size() == 4);
  REQUIRE(t.verdict);
  CHECK(*t.verdict == oracle_of(4, {1, 3}));
  // every element sees its own singleton, so own-status knowledge holds, but
  // a coalition like {1,2} never sees {3} or {4} and cannot pin the set
  CHECK(verify_transcript(t, ModelTag::model1).solves);
  CHECK_FALSE(verify_transcript(t, ModelTag::model2dbl).solves);
}

TEST_CASE("run_session enforces the step budget") {
  StallingStrategy s(8);
  CHECK_THROWS_AS(run_session(s, oracle_of(8, {1, 2}), 8, 2), StrategyError);
}

TEST_CASE("run_session rejects malformed oracles") {
  SingletonStrategy s(4, 2);
  CHECK_THROWS_AS(run_session(s, oracle_of(4, {1}), 4, 2), BadScenario);
}

TEST_CASE("halving strategy finds the defectives") {
  HalvingModel3Strategy s(64, 2);
  auto t = run_session(s, oracle_of(64, {5, 40}), 64, 2);
  REQUIRE(t.verdict);
  CHECK(*t.verdict == oracle_of(64, {5, 40}));
  CHECK((int)t.steps.size() <= 2 * 2 * ceil_log2(64) + 5 * 2);

  // the final leaves are disjoint, of size 3..5, at most d of them, and they
  // absorb every defective
  REQUIRE(!s.round_snapshots().empty());
  const HalvingState& last = s.round_snapshots().back();
  CHECK(last.active.empty());
  CHECK(last.leaves.size() <= 2);
  Bitset leaf_union(64);
  for (const auto& leaf : last.leaves) {
    CHECK(leaf.count() >= 3);
    CHECK(leaf.count() <= 5);
    CHECK_FALSE(leaf.intersects(leaf_union));
    leaf_union |= leaf;
  }
  CHECK(leaf_union.test(5));
  CHECK(leaf_union.test(40));
}

TEST_CASE("halving state invariants hold at every round boundary") {
  for (auto oracle : {oracle_of(100, {3, 97}), oracle_of(100, {49, 50}), oracle_of(100, {1, 2})}) {
    HalvingModel3Strategy s(100, 2);
    auto t = run_session(s, oracle, 100, 2);
    REQUIRE(t.verdict);
    CHECK(*t.verdict == oracle);
    for (const auto& snap : s.round_snapshots()) {
      Bitset seen(100);
      for (const auto& leaf : snap.leaves) {
        CHECK(leaf.count() >= 3);
        CHECK(leaf.count() <= 5);
        CHECK_FALSE(leaf.intersects(seen));
        seen |= leaf;
      }
      CHECK(snap.leaves.size() <= 2);
      // active sets are pairwise disjoint and disjoint from the leaves
      for (const auto& a : snap.active) {
        CHECK_FALSE(a.intersects(seen));
        seen |= a;
      }
    }
  }
}

TEST_CASE("halving transcript passes the model 3 check and the element-permuted mode works") {
  HalvingModel3Strategy plain(128, 2);
  auto t = run_session(plain, oracle_of(128, {7, 100}), 128, 2);
  CHECK(verify_transcript(t, ModelTag::model3).solves);

  HalvingModel3Strategy shuffled(128, 2, /*shuffle_seed=*/11);
  auto ts = run_session(shuffled, oracle_of(128, {7, 100}), 128, 2);
  REQUIRE(ts.verdict);
  CHECK(*ts.verdict == oracle_of(128, {7, 100}));
  CHECK(verify_transcript(ts, ModelTag::model3).solves);
}

TEST_CASE("halving surfaces a too-small universe as InsufficientNoPool") {
  HalvingModel3Strategy s(20, 2);
  CHECK_THROWS_AS(run_session(s, oracle_of(20, {3, 11}), 20, 2), InsufficientNoPool);
}

TEST_CASE("halving keeps its guarantees across seeds and the permuted mode") {
  for (int n : {100, 200}) {
    for (int d : {2, 3}) {
      int bound = 2 * d * ceil_log2(n) + 5 * d;
      Rng rng(mix_seed(0x5a1, (std::uint64_t)n + d));
      int completed = 0;
      for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i + 1;
        rng.shuffle(pool);
        Bitset oracle(n);
        for (int i = 0; i < d; ++i) oracle.set(pool[i]);
        HalvingModel3Strategy s(n, d, /*shuffle_seed=*/trial * 31 + 5);
        Transcript t;
        try {
          t = run_session(s, oracle, n, d);
        } catch (const InsufficientNoPool&) {
          continue;
        }
        ++completed;
        CHECK((int)t.steps.size() <= bound);
        CHECK(*t.verdict == oracle);
        CHECK(verify_transcript(t, ModelTag::model3).solves);
      }
      CHECK(completed > 0);
    }
  }
}

TEST_CASE("find-then-announce: model 1") {
  FindThenAnnounceStrategy s(FindThenAnnounceStrategy::Announce::model1, 32, 2);
  auto t = run_session(s, oracle_of(32, {3, 17}), 32, 2);
  REQUIRE(t.verdict);
  CHECK(*t.verdict == oracle_of(32, {3, 17}));
  CHECK((int)t.steps.size() == s.find_phase_queries() + 2 + 1);
  CHECK(s.find_phase_queries() <= 2 * (ceil_log2(32) + 2));
  CHECK(verify_transcript(t, ModelTag::model1).solves);
}

TEST_CASE("find-then-announce: model 2'") {
  FindThenAnnounceStrategy s(FindThenAnnounceStrategy::Announce::model2prime, 32, 2);
  auto t = run_session(s, oracle_of(32, {3, 17}), 32, 2);
  REQUIRE(t.verdict);
  CHECK(*t.verdict == oracle_of(32, {3, 17}));
  CHECK((int)t.steps.size() == s.find_phase_queries() + 1);
  CHECK(verify_transcript(t, ModelTag::model2prime).solves);
  // the last query is the announced non-defective complement, answered NO
  CHECK(t.steps.back().query == oracle_of(32, {3, 17}).complement());
  CHECK_FALSE(t.steps.back().answer);
  // the complement announcement leaks the set to every non-defective
  CHECK_FALSE(verify_transcript(t, ModelTag::model3).solves);
}

TEST_CASE("find-then-announce: model 2'' and cross-model leakage") {
  FindThenAnnounceStrategy s(FindThenAnnounceStrategy::Announce::model2dbl, 16, 2);
  auto t = run_session(s, oracle_of(16, {2, 9}), 16, 2);
  REQUIRE(t.verdict);
  CHECK(*t.verdict == oracle_of(16, {2, 9}));
  CHECK(verify_transcript(t, ModelTag::model2dbl).solves);

  // announcements deliberately leak: the same transcript cannot be private
  CHECK_FALSE(verify_transcript(t, ModelTag::model3).solves);
}

TEST_CASE("bare search baseline: counts and verdicts") {
  FindThenAnnounceStrategy one(FindThenAnnounceStrategy::Announce::none, 8, 1);
  auto t1 = run_session(one, oracle_of(8, {6}), 8, 1);
  CHECK(*t1.verdict == oracle_of(8, {6}));
  CHECK((int)t1.steps.size() <= ceil_log2(8) + 1);

  FindThenAnnounceStrategy two(FindThenAnnounceStrategy::Announce::none, 8, 2);
  auto t2 = run_session(two, oracle_of(8, {1, 8}), 8, 2);
  CHECK(*t2.verdict == oracle_of(8, {1, 8}));
  CHECK((int)t2.steps.size() <= 8);

  // d = n: everything is defective, the bound is loose but holds
  FindThenAnnounceStrategy all(FindThenAnnounceStrategy::Announce::none, 4, 4);
  auto t4 = run_session(all, Bitset::full(4), 4, 4);
  CHECK(*t4.verdict == Bitset::full(4));
  CHECK((int)t4.steps.size() <= 4 * (ceil_log2(4) + 2));
}

TEST_CASE("binary search phase stays within the counting bound across oracles") {
  for (int n : {8, 64}) {
    for (int d : {1, 2, 3}) {
      if (d >= n) continue;
      Rng rng(mix_seed(n, d));
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i + 1;
        rng.shuffle(pool);
        Bitset oracle(n);
        for (int i = 0; i < d; ++i) oracle.set(pool[i]);
        FindThenAnnounceStrategy s(FindThenAnnounceStrategy::Announce::model2prime, n, d);
        auto t = run_session(s, oracle, n, d);
        CHECK(*t.verdict == oracle);
        CHECK(s.find_phase_queries() <= d * (ceil_log2(n) + 2));
      }
    }
  }
}

TEST_CASE("existence search matches scenario enumeration on a real halving transcript") {
  HalvingModel3Strategy s(64, 2);
  auto t = run_session(s, oracle_of(64, {9, 33}), 64, 2);
  REQUIRE(t.verdict);
  // enumerate all C(64,2) scenarios per element view and compare against the
  // branch-and-bound answer for every forbidden defective
  for (int x = 1; x <= 64; ++x) {
    Bitset coal(64);
    coal.set(x);
    ConstraintView view;
    view.n = 64;
    for (const auto& step : t.steps)
      if (step.query.test(x)) (step.answer ? view.yes : view.no).push_back(step.query);
    for (int y : {9, 33}) {
      bool enumerated = false;
      for_each_combination(64, 2, [&](const std::vector<int>& c) {
        if (c[0] == y || c[1] == y) return true;
        Bitset cand = Bitset::of(64, c);
        for (const auto& q : view.yes)
          if (!q.intersects(cand)) return true;
        for (const auto& q : view.no)
          if (q.intersects(cand)) return true;
        enumerated = true;
        return false;
      });
      ScenarioFilter filter;
      filter.forbid = y;
      REQUIRE(exists_consistent(view, 2, filter) == enumerated);
    }
  }
}

TEST_CASE("verify_transcript demands a verdict and a consistent replay") {
  Transcript t;
  t.n = 4;
  t.d = 2;
  t.steps.push_back({Bitset::of(4, {1, 2}), true});
  CHECK_THROWS_AS(verify_transcript(t, ModelTag::model1), IncompleteTranscript);

  t.verdict = Bitset::of(4, {3, 4});  // contradicts the YES answer
  auto v = verify_transcript(t, ModelTag::model1);
  CHECK_FALSE(v.solves);
  REQUIRE(v.failing);
  CHECK(v.failing->clause == "verdict does not replay against the recorded answers");
}

TEST_CASE("verify_transcript model 4 needs and validates (i, j)") {
  SingletonStrategy s(5, 2);
  auto t = run_session(s, oracle_of(5, {2, 4}), 5, 2);
  CHECK_THROWS_AS(verify_transcript(t, ModelTag::model4), BadParameter);
  CHECK_THROWS_AS(verify_transcript(t, ModelTag::model4, std::pair{3, 3}), BadParameter);
  // singletons leak everything: j-coalitions know, but i-coalitions also know
  auto v = verify_transcript(t, ModelTag::model4, std::pair{1, 2});
  CHECK_FALSE(v.solves);
}

TEST_CASE("all-YES coalitions cannot self-identify when an outside scenario hits their view") {
  // coalition = the defectives themselves, receiving only YES answers; if a
  // different d-set meets every visible query, identification must fail
  SetFamily f = SetFamily::of(6, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
  Bitset defectives = Bitset::of(6, {2, 3});
  Transcript t;
  t.n = 6;
  t.d = 2;
  for (const auto& q : f.sets) t.steps.push_back({q, q.intersects(defectives)});
  t.verdict = defectives;
  // {3, 6} != {2, 3} intersects every query visible to {2, 3}
  ConstraintView view;
  view.n = 6;
  for (const auto& step : t.steps)
    if (step.query.intersects(defectives)) (step.answer ? view.yes : view.no).push_back(step.query);
  bool all_yes = view.no.empty();
  CHECK(all_yes);
  Bitset alt = Bitset::of(6, {3, 6});
  for (const auto& q : view.yes) CHECK(q.intersects(alt));
  CHECK_FALSE(identifies_set_view(view, defectives, 2));
}
