#include "gt/adaptive.hpp"

#include <algorithm>

namespace gt {

Transcript run_session(Strategy& strategy, const Bitset& oracle_defectives, int n, int d,
                       SessionOptions opts) {
  if (oracle_defectives.universe() != n) throw BadScenario("run_session: universe mismatch");
  if (oracle_defectives.count() != d)
    throw BadScenario("run_session: defective set cardinality differs from d");
  int budget = opts.step_budget > 0 ? opts.step_budget : 64 * d * std::max(1, ceil_log2(n));
  Transcript t;
  t.n = n;
  t.d = d;
  while (auto q = strategy.next_query()) {
    if ((int)t.steps.size() >= budget) throw StrategyError("run_session: step budget exceeded");
    if (q->universe() != n) throw StrategyError("run_session: query not a subset of [n]");
    bool answer = q->intersects(oracle_defectives);
    t.steps.push_back({*q, answer});
    strategy.on_answer(answer);
  }
  Bitset v = strategy.verdict();
  if (v.count() != d) throw StrategyError("run_session: verdict cardinality differs from d");
  t.verdict = std::move(v);
  return t;
}

// --- singleton strategy ---

SingletonStrategy::SingletonStrategy(int n, int d) : n_(n), d_(d), found_(n) {
  if (d < 1 || d > n) throw BadParameter("singleton strategy: need 1 <= d <= n");
}

std::optional<Bitset> SingletonStrategy::next_query() {
  if (asked_ >= n_) return std::nullopt;
  Bitset q(n_);
  q.set(asked_ + 1);
  return q;
}

void SingletonStrategy::on_answer(bool yes) {
  ++asked_;
  if (yes) found_.set(asked_);
}

Bitset SingletonStrategy::verdict() const { return found_; }

// --- halving strategy ---

HalvingModel3Strategy::HalvingModel3Strategy(int n, int d, std::optional<std::uint64_t> seed)
    : n_(n), d_(d), verdict_(n) {
  if (d < 1 || d >= n) throw BadParameter("halving strategy: need 1 <= d < n");
  order_.resize(n);
  for (int i = 0; i < n; ++i) order_[i] = i + 1;
  if (seed) {
    Rng rng(*seed);
    rng.shuffle(order_);
  }
  pending_.push_back({0, n / 2});
  pending_.push_back({n / 2, n});
  pending_answers_.assign(pending_.size(), false);
}

Bitset HalvingModel3Strategy::materialize(Range r) const {
  Bitset b(n_);
  for (int i = r.begin; i < r.end; ++i) b.set(order_[i]);
  return b;
}

std::optional<Bitset> HalvingModel3Strategy::next_query() {
  while (true) {
    switch (phase_) {
      case Phase::splitting:
        if (cursor_ < pending_.size()) {
          awaiting_answer_ = true;
          return materialize(pending_[cursor_]);
        }
        finish_round();
        continue;
      case Phase::probing:
        if (cursor_ < probe_queries_.size()) {
          awaiting_answer_ = true;
          return probe_queries_[cursor_];
        }
        phase_ = Phase::done;
        for (std::size_t i = 0; i < probe_elements_.size(); ++i)
          if (probe_answers_[i]) verdict_.set(probe_elements_[i]);
        continue;
      case Phase::done:
        return std::nullopt;
    }
  }
}

void HalvingModel3Strategy::on_answer(bool yes) {
  if (!awaiting_answer_) throw StrategyError("halving strategy: unexpected answer");
  awaiting_answer_ = false;
  if (phase_ == Phase::splitting) {
    pending_answers_[cursor_++] = yes;
  } else {
    probe_answers_.push_back(yes);
    ++cursor_;
  }
}

void HalvingModel3Strategy::finish_round() {
  std::vector<Range> next;
  HalvingState snap;
  for (std::size_t i = 0; i < pending_.size(); ++i) {
    Range r = pending_[i];
    if (!pending_answers_[i]) {
      no_pool_.push_back(r);
      continue;
    }
    int len = r.end - r.begin;
    if (len <= 5) {
      leaves_.push_back(r);
      continue;
    }
    snap.active.push_back(materialize(r));
    int mid = r.begin + len / 2;
    next.push_back({r.begin, mid});
    next.push_back({mid, r.end});
  }
  for (Range r : leaves_) snap.leaves.push_back(materialize(r));
  for (Range r : no_pool_) snap.no_pool.push_back(materialize(r));
  snapshots_.push_back(std::move(snap));
  pending_ = std::move(next);
  pending_answers_.assign(pending_.size(), false);
  cursor_ = 0;
  if (pending_.empty()) {
    prepare_probes();
    phase_ = Phase::probing;
  }
}

void HalvingModel3Strategy::prepare_probes() {
  // leaf elements in ascending order, each remembering its leaf
  std::vector<int> a;
  for (Range r : leaves_)
    for (int i = r.begin; i < r.end; ++i) a.push_back(order_[i]);
  std::sort(a.begin(), a.end());

  // the two largest disjoint NO queries of size >= 5d, largest first
  std::vector<Bitset> candidates;
  for (Range r : no_pool_)
    if (r.end - r.begin >= 5 * d_) candidates.push_back(materialize(r));
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Bitset& x, const Bitset& y) { return x.count() > y.count(); });
  const Bitset* pool_b = nullptr;
  const Bitset* pool_c = nullptr;
  for (std::size_t i = 0; i < candidates.size() && !pool_b; ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (!candidates[i].intersects(candidates[j])) {
        pool_b = &candidates[i];
        pool_c = &candidates[j];
        break;
      }
  if (!pool_b)
    throw InsufficientNoPool(
        "halving strategy: no two disjoint NO queries of size >= 5d; n is too small");
  std::vector<int> bs = pool_b->elements();
  std::vector<int> cs = pool_c->elements();
  if (a.size() > bs.size() || a.size() > cs.size())
    throw InsufficientNoPool("halving strategy: NO pool cannot supply enough helpers");

  probe_elements_ = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    probe_queries_.push_back(Bitset::of(n_, {a[i], bs[i], cs[i]}));
}

Bitset HalvingModel3Strategy::verdict() const {
  if (phase_ != Phase::done) throw StrategyError("halving strategy: session not finished");
  return verdict_;
}

// --- find-then-announce ---

FindThenAnnounceStrategy::FindThenAnnounceStrategy(Announce which, int n, int d)
    : which_(which), n_(n), d_(d), found_(n), window_(n), probe_half_(n) {
  // the bare search tolerates d = n; announcing needs a nonempty complement
  int max_d = which == Announce::none ? n : n - 1;
  if (d < 1 || d > max_d) throw BadParameter("find-then-announce: d out of range");
}

std::optional<Bitset> FindThenAnnounceStrategy::next_query() {
  while (phase_ == Phase::searching) {
    if (found_.count() == d_) {
      // build the announcement queue
      if (which_ == Announce::model1 || which_ == Announce::model2dbl) {
        for (int x = found_.first(); x; x = found_.next(x)) {
          Bitset q(n_);
          q.set(x);
          announcements_.push_back(std::move(q));
        }
      }
      if (which_ != Announce::none) announcements_.push_back(found_.complement());
      phase_ = Phase::announcing;
      break;
    }
    if (window_.empty()) window_ = found_.complement();
    if (window_.count() == 1) {
      found_.set(window_.first());
      window_ = Bitset(n_);
      continue;
    }
    // ask the first half of the window
    probe_half_ = Bitset(n_);
    int half = window_.count() / 2;
    int e = window_.first();
    for (int k = 0; k < half; ++k) {
      probe_half_.set(e);
      e = window_.next(e);
    }
    ++find_phase_queries_;
    awaiting_ = true;
    return probe_half_;
  }
  if (phase_ == Phase::announcing) {
    if (announce_cursor_ < announcements_.size()) {
      awaiting_ = true;
      return announcements_[announce_cursor_];
    }
    phase_ = Phase::done;
  }
  return std::nullopt;
}

void FindThenAnnounceStrategy::on_answer(bool yes) {
  if (!awaiting_) throw StrategyError("find-then-announce: unexpected answer");
  awaiting_ = false;
  if (phase_ == Phase::searching) {
    window_ = yes ? probe_half_ : window_.minus(probe_half_);
  } else {
    ++announce_cursor_;
  }
}

Bitset FindThenAnnounceStrategy::verdict() const {
  if (phase_ != Phase::done) throw StrategyError("find-then-announce: session not finished");
  return found_;
}

// --- transcript verification ---

namespace {

ConstraintView transcript_view(const Transcript& t, const Bitset& coalition) {
  ConstraintView v;
  v.n = t.n;
  for (const auto& step : t.steps)
    if (step.query.intersects(coalition)) (step.answer ? v.yes : v.no).push_back(step.query);
  return v;
}

}  // namespace

ModelVerdict verify_transcript(const Transcript& t, ModelTag tag,
                               std::optional<std::pair<int, int>> ij) {
  if (!t.verdict) throw IncompleteTranscript("verify_transcript: transcript has no verdict");
  const Bitset& defectives = *t.verdict;
  if (defectives.count() != t.d)
    throw IncompleteTranscript("verify_transcript: verdict cardinality differs from d");
  std::vector<int> dv = defectives.elements();
  for (const auto& step : t.steps)
    if (step.answer != step.query.intersects(defectives))
      return ModelVerdict::fail({dv, {}, "verdict does not replay against the recorded answers"});

  auto single = [&](int x) {
    Bitset s(t.n);
    s.set(x);
    return s;
  };

  switch (tag) {
    case ModelTag::model1:
      for (int x = 1; x <= t.n; ++x)
        if (!knows_own_status_view(transcript_view(t, single(x)), x, defectives, t.d))
          return ModelVerdict::fail({dv, {x}, "element cannot decide its own status"});
      return ModelVerdict::ok();
    case ModelTag::model2:
      for (int x = 1; x <= t.n; ++x)
        if (!identifies_set_view(transcript_view(t, single(x)), defectives, t.d))
          return ModelVerdict::fail({dv, {x}, "element cannot pin down the defective set"});
      return ModelVerdict::ok();
    case ModelTag::model2prime:
      for (int x = 1; x <= t.n; ++x) {
        if (defectives.test(x)) continue;
        if (!identifies_set_view(transcript_view(t, single(x)), defectives, t.d))
          return ModelVerdict::fail(
              {dv, {x}, "non-defective element cannot pin down the defective set"});
      }
      return ModelVerdict::ok();
    case ModelTag::model2dbl: {
      ModelVerdict out = ModelVerdict::ok();
      for_each_combination(t.n, t.d, [&](const std::vector<int>& sv) {
        if (!identifies_set_view(transcript_view(t, Bitset::of(t.n, sv)), defectives, t.d)) {
          out = ModelVerdict::fail({dv, sv, "d-coalition cannot pin down the defective set"});
          return false;
        }
        return true;
      });
      return out;
    }
    case ModelTag::model3:
      for (int x = 1; x <= t.n; ++x)
        if (!identifies_no_defective_view(transcript_view(t, single(x)), defectives, t.d))
          return ModelVerdict::fail({dv, {x}, "element can point at a defective"});
      return ModelVerdict::ok();
    case ModelTag::model4: {
      if (!ij) throw BadParameter("verify_transcript: model 4 needs (i, j)");
      auto [i, j] = *ij;
      if (i < 1 || i >= j || j > t.n) throw BadParameter("verify_transcript: need 1 <= i < j <= n");
      ModelVerdict out = ModelVerdict::ok();
      for_each_combination(t.n, j, [&](const std::vector<int>& sv) {
        if (!identifies_set_view(transcript_view(t, Bitset::of(t.n, sv)), defectives, t.d)) {
          out = ModelVerdict::fail({dv, sv, "j-coalition cannot pin down the defective set"});
          return false;
        }
        return true;
      });
      if (!out.solves) return out;
      for_each_combination(t.n, i, [&](const std::vector<int>& tv) {
        if (!identifies_no_defective_view(transcript_view(t, Bitset::of(t.n, tv)), defectives,
                                          t.d)) {
          out = ModelVerdict::fail({dv, tv, "i-coalition can point at a defective"});
          return false;
        }
        return true;
      });
      return out;
    }
  }
  throw BadParameter("verify_transcript: unknown model tag");
}

}  // namespace gt
