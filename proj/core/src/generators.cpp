#include "gt/generators.hpp"

#include <algorithm>
#include <cstdlib>

#include "gt/separation.hpp"

namespace gt {

int enumeration_cap() {
  if (const char* env = std::getenv("GT_BUDGET")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 4;
}

FamilyEnumerator::FamilyEnumerator(int n, int max_sets, bool ignore_cap)
    : n_(n), max_sets_(max_sets) {
  if (n < 1 || max_sets < 1) throw BadParameter("FamilyEnumerator: need n >= 1, max_sets >= 1");
  if (n > 20) throw BadParameter("FamilyEnumerator: universe too large to enumerate");
  if (!ignore_cap && n > enumeration_cap())
    throw BudgetExceeded("FamilyEnumerator: n exceeds the enumeration cap (set GT_BUDGET)");
  std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
  if ((std::uint64_t)max_sets_ > subsets) max_sets_ = (int)subsets;
  combo_.assign(1, 1);  // the family {{1}}
}

SetFamily FamilyEnumerator::materialize() const {
  SetFamily f(n_);
  for (std::uint64_t mask : combo_) {
    Bitset b(n_);
    for (int e = 1; e <= n_; ++e)
      if (mask >> (e - 1) & 1) b.set(e);
    f.sets.push_back(std::move(b));
  }
  return f;
}

std::optional<SetFamily> FamilyEnumerator::next() {
  if (done_) return std::nullopt;
  if (fresh_) {
    fresh_ = false;
    ++emitted_;
    return materialize();
  }
  const std::uint64_t top = (std::uint64_t{1} << n_) - 1;  // largest mask
  int k = size_;
  int i = k - 1;
  while (i >= 0 && combo_[i] == top - (std::uint64_t)(k - 1 - i)) --i;
  if (i < 0) {
    if (size_ == max_sets_) {
      done_ = true;
      return std::nullopt;
    }
    ++size_;
    combo_.resize(size_);
    for (int j = 0; j < size_; ++j) combo_[j] = j + 1;
  } else {
    ++combo_[i];
    for (int j = i + 1; j < k; ++j) combo_[j] = combo_[j - 1] + 1;
  }
  ++emitted_;
  return materialize();
}

std::uint64_t FamilyEnumerator::total_count(int n, int max_sets) {
  std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
  std::uint64_t total = 0;
  for (int k = 1; k <= max_sets && (std::uint64_t)k <= subsets; ++k)
    total += binomial(subsets, k);
  return total;
}

SetFamily random_family(int n, int m, double p, std::uint64_t seed) {
  if (m < 1) throw BadParameter("random_family: m must be >= 1");
  if (!(p > 0.0 && p < 1.0)) throw BadParameter("random_family: need 0 < p < 1");
  Rng rng(seed);
  SetFamily f(n);
  while (f.size() < m) {
    Bitset b(n);
    for (int e = 1; e <= n; ++e)
      if (rng.chance(p)) b.set(e);
    if (b.empty()) continue;  // redraw empty sets
    f.sets.push_back(std::move(b));
  }
  return f;
}

CoverFreeSearch search_cover_free(int universe, int target, int d, std::uint64_t seed,
                                  std::uint64_t budget) {
  if (universe < 1 || target < 1 || d < 1)
    throw BadParameter("search_cover_free: bad parameters");
  int weight = std::max(1, (int)((universe + (d + 1) / 2) / (d + 1)));
  CoverFreeSearch out;
  std::vector<int> pool(universe);
  for (int i = 0; i < universe; ++i) pool[i] = i + 1;

  std::uint64_t spent = 0;
  for (std::uint64_t restart = 0; spent < budget; ++restart) {
    Rng rng(mix_seed(seed, restart));
    SetFamily f(universe);
    std::uint64_t stale = 0;
    while (f.size() < target && spent < budget && stale < 400) {
      ++spent;
      for (int i = 0; i < weight; ++i) {
        std::size_t j = i + (std::size_t)rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
      }
      Bitset cand(universe);
      for (int i = 0; i < weight; ++i) cand.set(pool[i]);
      if (std::find(f.sets.begin(), f.sets.end(), cand) != f.sets.end()) {
        ++stale;
        continue;
      }
      SetFamily trial = f;
      trial.sets.push_back(cand);
      if (is_d_cover_free(trial, d).holds) {
        f = std::move(trial);
        stale = 0;
      } else {
        ++stale;
      }
    }
    out.best_found = std::max(out.best_found, f.size());
    if (f.size() >= target && is_d_cover_free(f, d).holds) {
      out.family = std::move(f);
      return out;
    }
  }
  return out;
}

}  // namespace gt
