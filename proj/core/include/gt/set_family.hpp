#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gt/bitset.hpp"
#include "gt/util.hpp"

namespace gt {

// Ordered family of subsets of {1..n}. Index identity is significant and
// duplicate member sets are representable. Doubles as a hypergraph
// (universe = vertices, sets = hyperedges) and as a query pool.
struct SetFamily {
  int n = 1;
  std::vector<Bitset> sets;

  SetFamily() = default;
  explicit SetFamily(int n) : n(n) {
    if (n < 1) throw BadParameter("SetFamily: universe size must be >= 1");
  }
  static SetFamily of(int n, std::initializer_list<std::initializer_list<int>> members) {
    SetFamily f(n);
    for (const auto& m : members) {
      Bitset b(n);
      for (int e : m) b.set(e);
      f.sets.push_back(std::move(b));
    }
    return f;
  }
  // all k-subsets of {1..n} as a family, lexicographic order
  static SetFamily uniform_complete(int n, int k);

  void add(Bitset b) {
    if (b.universe() != n) throw BadParameter("SetFamily::add: universe mismatch");
    sets.push_back(std::move(b));
  }
  void add(std::initializer_list<int> elems) { sets.push_back(Bitset::of(n, elems)); }

  int size() const { return (int)sets.size(); }
  const Bitset& operator[](int i) const { return sets[i]; }

  // member values with duplicates removed, first-occurrence order
  std::vector<Bitset> distinct_values() const;

  bool operator==(const SetFamily&) const = default;
};

// Counterexample payload. set_indices are 1-based positions in the family;
// elements and scenarios are 1-based universe elements.
struct Witness {
  std::vector<int> set_indices;
  std::vector<int> elements;
  std::vector<std::vector<int>> scenarios;
  std::string note;
};

struct PropertyReport {
  bool holds = true;
  std::optional<Witness> witness;

  static PropertyReport ok() { return {}; }
  static PropertyReport fail(Witness w) { return {false, std::move(w)}; }
  explicit operator bool() const { return holds; }
};

}  // namespace gt
