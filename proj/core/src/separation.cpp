#include "gt/separation.hpp"

#include <algorithm>
#include <unordered_set>

namespace gt {

namespace {

// positions (1-based) the "different sets" quantifier ranges over
std::vector<int> quantifier_positions(const SetFamily& f, DistinctBy mode) {
  std::vector<int> pos;
  if (mode == DistinctBy::index) {
    pos.resize(f.size());
    for (int i = 0; i < f.size(); ++i) pos[i] = i + 1;
    return pos;
  }
  std::unordered_set<Bitset, BitsetHash> seen;
  for (int i = 0; i < f.size(); ++i)
    if (seen.insert(f.sets[i]).second) pos.push_back(i + 1);
  return pos;
}

}  // namespace

PropertyReport is_d_separating(const SetFamily& f, int d) {
  if (d < 1 || d > f.n) throw BadParameter("is_d_separating: need 1 <= d <= n");
  // answer mask per d-subset, then pairwise comparison in lexicographic order
  int m = f.size();
  std::vector<Bitset> masks;
  std::vector<std::vector<int>> scenarios;
  for_each_combination(f.n, d, [&](const std::vector<int>& c) {
    Bitset x = Bitset::of(f.n, c);
    Bitset mask(std::max(m, 1));
    for (int i = 0; i < m; ++i)
      if (f.sets[i].intersects(x)) mask.set(i + 1);
    masks.push_back(std::move(mask));
    scenarios.push_back(c);
    return true;
  });
  int k = (int)masks.size();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (masks[i] == masks[j])
        return PropertyReport::fail(
            {{}, {}, {scenarios[i], scenarios[j]}, "no member meets exactly one scenario"});
  return PropertyReport::ok();
}

PropertyReport is_d_union_free(const SetFamily& f, int d, DistinctBy mode) {
  if (d < 1) throw BadParameter("is_d_union_free: d must be >= 1");
  auto pos = quantifier_positions(f, mode);
  int k = (int)pos.size();
  if (k < d) return PropertyReport::ok();
  PropertyReport out = PropertyReport::ok();
  std::vector<Bitset> unions;
  std::vector<std::vector<int>> picks;
  for_each_combination(k, d, [&](const std::vector<int>& c) {
    Bitset u(f.n);
    std::vector<int> idx(d);
    for (int t = 0; t < d; ++t) {
      idx[t] = pos[c[t] - 1];
      u |= f.sets[idx[t] - 1];
    }
    for (std::size_t prev = 0; prev < unions.size(); ++prev) {
      if (unions[prev] == u) {
        Witness w;
        w.set_indices = picks[prev];
        w.set_indices.insert(w.set_indices.end(), idx.begin(), idx.end());
        w.note = "two d-subfamilies share the same union";
        out = PropertyReport::fail(std::move(w));
        return false;
      }
    }
    unions.push_back(std::move(u));
    picks.push_back(std::move(idx));
    return true;
  });
  return out;
}

PropertyReport is_d_cover_free(const SetFamily& f, int d, DistinctBy mode) {
  if (d < 1) throw BadParameter("is_d_cover_free: d must be >= 1");
  auto pos = quantifier_positions(f, mode);
  int k = (int)pos.size();
  if (k < d + 1) return PropertyReport::ok();
  PropertyReport out = PropertyReport::ok();
  for_each_combination(k, d + 1, [&](const std::vector<int>& c) {
    Bitset total(f.n);
    for (int t = 0; t < d + 1; ++t) total |= f.sets[pos[c[t] - 1] - 1];
    for (int covered = 0; covered < d + 1; ++covered) {
      Bitset rest(f.n);
      for (int t = 0; t < d + 1; ++t)
        if (t != covered) rest |= f.sets[pos[c[t] - 1] - 1];
      if (f.sets[pos[c[covered] - 1] - 1].is_subset_of(rest)) {
        Witness w;
        w.set_indices.push_back(pos[c[covered] - 1]);
        for (int t = 0; t < d + 1; ++t)
          if (t != covered) w.set_indices.push_back(pos[c[t] - 1]);
        w.note = "first listed set is covered by the union of the others";
        out = PropertyReport::fail(std::move(w));
        return false;
      }
    }
    return true;
  });
  return out;
}

PropertyReport is_r_d_cover_free(const SetFamily& f, int r, int d, DistinctBy mode) {
  if (r < 1 || d < 1) throw BadParameter("is_r_d_cover_free: need r >= 1 and d >= 1");
  auto pos = quantifier_positions(f, mode);
  int k = (int)pos.size();
  if (k < d + r) return PropertyReport::ok();
  PropertyReport out = PropertyReport::ok();
  // choose d+r member positions, then which r of them form the intersection side
  for_each_combination(k, d + r, [&](const std::vector<int>& c) {
    bool go_on = for_each_combination(d + r, r, [&](const std::vector<int>& which) {
      Bitset inter = Bitset::full(f.n);
      std::vector<char> in_r(d + r, 0);
      for (int t : which) in_r[t - 1] = 1;
      for (int t = 0; t < d + r; ++t)
        if (in_r[t]) inter &= f.sets[pos[c[t] - 1] - 1];
      Bitset uni(f.n);
      for (int t = 0; t < d + r; ++t)
        if (!in_r[t]) uni |= f.sets[pos[c[t] - 1] - 1];
      if (inter.is_subset_of(uni)) {
        Witness w;
        for (int t = 0; t < d + r; ++t)
          if (in_r[t]) w.set_indices.push_back(pos[c[t] - 1]);
        for (int t = 0; t < d + r; ++t)
          if (!in_r[t]) w.set_indices.push_back(pos[c[t] - 1]);
        w.note = "intersection of the first r listed sets is covered by the union of the rest";
        out = PropertyReport::fail(std::move(w));
        return false;
      }
      return true;
    });
    return go_on;
  });
  return out;
}

SetFamily binary_separating_family(int n) {
  if (n < 2) throw BadParameter("binary_separating_family: n must be >= 2");
  int bits = ceil_log2((std::uint64_t)n);
  SetFamily f(n);
  for (int j = 0; j < bits; ++j) {
    Bitset b(n);
    for (int x = 1; x <= n; ++x)
      if ((x - 1) >> j & 1) b.set(x);
    f.sets.push_back(std::move(b));
  }
  return f;
}

}  // namespace gt
