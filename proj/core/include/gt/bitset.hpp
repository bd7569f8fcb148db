#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gt {

// Subset of {1..n} packed into 64-bit words; element e lives at bit e-1.
// Universe size travels with the value so mixed-universe operations are
// caught early instead of silently truncating.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(words_for(n), 0) {}

  static Bitset full(int n) {
    Bitset b(n);
    for (auto& w : b.w_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }
  static Bitset of(int n, std::initializer_list<int> elems) {
    Bitset b(n);
    for (int e : elems) b.set(e);
    return b;
  }
  static Bitset of(int n, const std::vector<int>& elems) {
    Bitset b(n);
    for (int e : elems) b.set(e);
    return b;
  }
  // interval {lo..hi}, inclusive; empty when hi < lo
  static Bitset range(int n, int lo, int hi) {
    Bitset b(n);
    for (int e = lo; e <= hi; ++e) b.set(e);
    return b;
  }

  int universe() const { return n_; }
  bool test(int e) const { return (w_[word(e)] >> bit(e)) & 1u; }
  void set(int e) { w_[word(e)] |= kOne << bit(e); }
  void reset(int e) { w_[word(e)] &= ~(kOne << bit(e)); }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  Bitset minus(const Bitset& o) const {
    Bitset r = *this;
    return r.subtract(o);
  }
  Bitset complement() const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  bool operator==(const Bitset&) const = default;
  // numeric order of the characteristic value; canonical total order
  bool operator<(const Bitset& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  // element iteration: for (int e = s.first(); e; e = s.next(e))
  int first() const { return scan_from(0); }
  int next(int e) const { return scan_from(e); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (int e = first(); e; e = next(e)) out.push_back(e);
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ (std::uint64_t)n_;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return (std::size_t)h;
  }

  std::string to_string() const {
    std::string s = "{";
    for (int e = first(); e; e = next(e)) {
      if (s.size() > 1) s += ',';
      s += std::to_string(e);
    }
    return s + "}";
  }

 private:
  static constexpr std::uint64_t kOne = 1;
  static int words_for(int n) { return (n + 63) / 64; }
  static int word(int e) { return (e - 1) >> 6; }
  static int bit(int e) { return (e - 1) & 63; }
  void trim() {
    if (int r = n_ & 63; r != 0 && !w_.empty()) w_.back() &= (kOne << r) - 1;
  }
  // first set bit with index >= b, reported as an element (bit index + 1); 0 = none
  int scan_from(int b) const {
    std::size_t i = (std::size_t)b >> 6;
    if (i >= w_.size()) return 0;
    int off = b & 63;
    std::uint64_t w = (w_[i] >> off) << off;
    while (true) {
      if (w) return (int)(i << 6) + std::countr_zero(w) + 1;
      if (++i >= w_.size()) return 0;
      w = w_[i];
    }
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace gt
