#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gt {

// Domain errors surfaced to callers (the CLI maps these onto exit codes).
struct BadParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadScenario : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EmptyMemberSet : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StrategyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientNoPool : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncompleteTranscript : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// smallest k with 2^k >= n (n >= 1)
inline int ceil_log2(std::uint64_t n) {
  int k = 0;
  std::uint64_t p = 1;
  while (p < n) {
    p <<= 1;
    ++k;
  }
  return k;
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9e3779b97f4a7c15ull * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// mt19937_64 with explicit bounded draws / shuffle so streams are identical
// across standard libraries (std::uniform_* distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t next() { return g_(); }
  std::uint64_t below(std::uint64_t k) {
    return (std::uint64_t)(((unsigned __int128)g_() * k) >> 64);
  }
  double unit() { return (double)(g_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 g_;
};

// Visit the k-subsets of {1..n} as ascending vectors, lexicographic order.
// Fn returns false to stop early; the function then returns false.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return true;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  while (true) {
    if (!fn(static_cast<const std::vector<int>&>(c))) return false;
    int i = k - 1;
    while (i >= 0 && c[i] == n - (k - 1 - i)) --i;
    if (i < 0) return true;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// saturates at 2^63 instead of overflowing
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  const std::uint64_t cap = std::uint64_t{1} << 63;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r >= cap) return cap;
  }
  return (std::uint64_t)r;
}

}  // namespace gt
