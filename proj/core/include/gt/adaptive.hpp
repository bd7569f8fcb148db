#pragma once

#include <memory>

#include "gt/knowledge.hpp"
#include "gt/models.hpp"

namespace gt {

struct TranscriptStep {
  Bitset query;
  bool answer = false;
};

// Ordered query/answer log of one adaptive session plus the Questioner's
// claimed defective set. Elements consume it unordered.
struct Transcript {
  int n = 1;
  int d = 1;
  std::vector<TranscriptStep> steps;
  std::optional<Bitset> verdict;
};

class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::optional<Bitset> next_query() = 0;  // nullopt = session over
  virtual void on_answer(bool yes) = 0;            // answer to the last query
  virtual Bitset verdict() const = 0;              // valid once next_query() is empty
};

struct SessionOptions {
  int step_budget = 0;  // 0 = 64 * d * ceil_log2(n)
};

// Drives the strategy against a fixed defective set. Throws StrategyError on
// malformed queries or a runaway session; strategy-specific errors
// (InsufficientNoPool) pass through.
Transcript run_session(Strategy& strategy, const Bitset& oracle_defectives, int n, int d,
                       SessionOptions opts = {});

// asks {1}, {2}, ..., {n}; verdict = the YES elements
class SingletonStrategy : public Strategy {
 public:
  SingletonStrategy(int n, int d);
  std::optional<Bitset> next_query() override;
  void on_answer(bool yes) override;
  Bitset verdict() const override;

 private:
  int n_, d_, asked_ = 0;
  Bitset found_;
};

// Split state mirrored for inspection: YES sets pending a split, YES leaves
// of size <= 5, and the NO pool.
struct HalvingState {
  std::vector<Bitset> active;
  std::vector<Bitset> leaves;
  std::vector<Bitset> no_pool;
};

// Round 1 asks a prefix half of the element order and its complement; every
// round splits each YES set of size >= 6 into near-halves and asks both; YES
// sets of size <= 5 become leaves. Afterwards the two largest disjoint NO
// queries of size >= 5d donate fresh non-defectives b_i, c_i, and each leaf
// element a_i is resolved with the probe {a_i, b_i, c_i}. Query count stays
// within 2d*ceil_log2(n) + 5d. Throws InsufficientNoPool when no usable NO
// pair exists (n too small).
class HalvingModel3Strategy : public Strategy {
 public:
  HalvingModel3Strategy(int n, int d, std::optional<std::uint64_t> shuffle_seed = {});
  std::optional<Bitset> next_query() override;
  void on_answer(bool yes) override;
  Bitset verdict() const override;

  // state right after each completed split round
  const std::vector<HalvingState>& round_snapshots() const { return snapshots_; }

 private:
  struct Range {
    int begin, end;  // half-open slice of order_
  };
  Bitset materialize(Range r) const;
  void finish_round();
  void prepare_probes();

  int n_, d_;
  std::vector<int> order_;
  enum class Phase { splitting, probing, done } phase_ = Phase::splitting;
  std::vector<Range> pending_;           // queries of the current round
  std::vector<bool> pending_answers_;
  std::size_t cursor_ = 0;               // next pending query to emit
  bool awaiting_answer_ = false;
  std::vector<Range> leaves_;
  std::vector<Range> no_pool_;
  std::vector<HalvingState> snapshots_;
  std::vector<int> probe_elements_;      // a_i, ascending
  std::vector<Bitset> probe_queries_;
  std::vector<bool> probe_answers_;
  Bitset verdict_;
};

// Finds the defectives by d successive binary searches over the not-yet-found
// elements, then announces: singletons of the defectives and/or the
// non-defective complement, depending on the target model. Announce::none is
// the bare search baseline (finds the set, announces nothing); the search
// phase stays within d * (ceil_log2(n) + 2) queries.
class FindThenAnnounceStrategy : public Strategy {
 public:
  enum class Announce { none, model1, model2prime, model2dbl };
  FindThenAnnounceStrategy(Announce which, int n, int d);
  std::optional<Bitset> next_query() override;
  void on_answer(bool yes) override;
  Bitset verdict() const override;

  int find_phase_queries() const { return find_phase_queries_; }

 private:
  void emit_search_query();

  Announce which_;
  int n_, d_;
  Bitset found_;
  Bitset window_;  // current binary-search window, contains a defective
  bool awaiting_ = false;
  Bitset probe_half_;
  int find_phase_queries_ = 0;
  enum class Phase { searching, announcing, done } phase_ = Phase::searching;
  std::vector<Bitset> announcements_;
  std::size_t announce_cursor_ = 0;
};

enum class ModelTag { model1, model2, model2prime, model2dbl, model3, model4 };

// Post-hoc check of a finished transcript: every element (or coalition, per
// model) reasons only from the unordered (query, answer) pairs it can see.
// The verdict must replay correctly against the answers; the defective set
// used by the per-model clauses is the verdict itself.
ModelVerdict verify_transcript(const Transcript& t, ModelTag tag,
                               std::optional<std::pair<int, int>> ij = {});

}  // namespace gt
