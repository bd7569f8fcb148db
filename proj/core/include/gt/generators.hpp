#pragma once

#include "gt/set_family.hpp"

namespace gt {

// Exhaustive-enumeration cap on the universe size (GT_BUDGET env overrides).
int enumeration_cap();

// Streams every family of 1..max_sets distinct nonempty subsets of [n],
// each exactly once: sizes ascending, then mask-lexicographic within a size.
// Throws BudgetExceeded when n exceeds the configured cap.
class FamilyEnumerator {
 public:
  FamilyEnumerator(int n, int max_sets, bool ignore_cap = false);
  std::optional<SetFamily> next();
  std::uint64_t emitted() const { return emitted_; }
  static std::uint64_t total_count(int n, int max_sets);

 private:
  SetFamily materialize() const;
  int n_;
  int max_sets_;
  int size_ = 1;
  bool done_ = false;
  bool fresh_ = true;
  std::uint64_t emitted_ = 0;
  std::vector<std::uint64_t> combo_;  // current masks, ascending
};

// m sets, each element kept with probability p, empty draws redone.
// Byte-identical output for a fixed seed.
SetFamily random_family(int n, int m, double p, std::uint64_t seed);

struct CoverFreeSearch {
  std::optional<SetFamily> family;
  int best_found = 0;  // largest d-cover-free family size reached
};

// Randomized greedy packing of constant-weight sets (weight ~ m/(d+1)) with
// restarts; every success is re-verified through is_d_cover_free.
CoverFreeSearch search_cover_free(int universe, int target, int d, std::uint64_t seed,
                                  std::uint64_t budget = 200'000);

}  // namespace gt
