#include "gt/family_ops.hpp"

#include <algorithm>
#include <unordered_set>

namespace gt {

SetFamily SetFamily::uniform_complete(int n, int k) {
  SetFamily f(n);
  for_each_combination(n, k, [&](const std::vector<int>& c) {
    f.add(Bitset::of(n, c));
    return true;
  });
  return f;
}

std::vector<Bitset> SetFamily::distinct_values() const {
  std::vector<Bitset> out;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (const auto& s : sets)
    if (seen.insert(s).second) out.push_back(s);
  return out;
}

SetFamily complement_family(const SetFamily& f) {
  SetFamily out(f.n);
  out.sets.reserve(f.sets.size());
  for (const auto& s : f.sets) out.sets.push_back(s.complement());
  return out;
}

SetFamily dual_family(const SetFamily& f) {
  int m = f.size();
  SetFamily out(std::max(m, 1));
  out.sets.assign(f.n, Bitset(std::max(m, 1)));
  for (int i = 0; i < m; ++i)
    for (int a = f.sets[i].first(); a; a = f.sets[i].next(a)) out.sets[a - 1].set(i + 1);
  return out;
}

SetFamily d_fold_unions(const SetFamily& f, int d) {
  if (d < 1) throw BadParameter("d_fold_unions: d must be >= 1");
  SetFamily out(f.n);
  auto values = f.distinct_values();
  if ((int)values.size() < d) return out;
  std::unordered_set<Bitset, BitsetHash> seen;
  for_each_combination((int)values.size(), d, [&](const std::vector<int>& c) {
    Bitset u(f.n);
    for (int i : c) u |= values[i - 1];
    if (seen.insert(u).second) out.sets.push_back(std::move(u));
    return true;
  });
  return out;
}

PropertyReport is_sperner(const SetFamily& f) {
  int m = f.size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (f.sets[i].is_subset_of(f.sets[j]))
        return PropertyReport::fail({{i + 1, j + 1}, {}, {}, "set i contained in set j"});
      if (f.sets[j].is_subset_of(f.sets[i]))
        return PropertyReport::fail({{j + 1, i + 1}, {}, {}, "set i contained in set j"});
    }
  return PropertyReport::ok();
}

namespace {

// first index (1-based) of each distinct value, ascending
std::vector<int> distinct_value_positions(const SetFamily& f) {
  std::vector<int> pos;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (int i = 0; i < f.size(); ++i)
    if (seen.insert(f.sets[i]).second) pos.push_back(i + 1);
  return pos;
}

// Scans pairwise value-distinct triples {A,B,C} and reports the first triple
// (by index order) where combine(P, Q) == combine(P, R) for some designation
// of P. Witness order: (P, Q, R).
template <typename Combine>
PropertyReport cancellative_scan(const SetFamily& f, Combine&& combine, const char* note) {
  auto pos = distinct_value_positions(f);
  int k = (int)pos.size();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c) {
        const Bitset &A = f.sets[pos[a] - 1], &B = f.sets[pos[b] - 1], &C = f.sets[pos[c] - 1];
        if (combine(A, B) == combine(A, C))
          return PropertyReport::fail({{pos[a], pos[b], pos[c]}, {}, {}, note});
        if (combine(B, A) == combine(B, C))
          return PropertyReport::fail({{pos[b], pos[a], pos[c]}, {}, {}, note});
        if (combine(C, A) == combine(C, B))
          return PropertyReport::fail({{pos[c], pos[a], pos[b]}, {}, {}, note});
      }
  return PropertyReport::ok();
}

}  // namespace

PropertyReport is_cancellative(const SetFamily& f) {
  return cancellative_scan(
      f, [](const Bitset& x, const Bitset& y) { return x | y; },
      "union with first set cannot distinguish second and third");
}

PropertyReport is_intersection_cancellative(const SetFamily& f) {
  return cancellative_scan(
      f, [](const Bitset& x, const Bitset& y) { return x & y; },
      "intersection with first set cannot distinguish second and third");
}

PropertyReport is_intersection_closed(const SetFamily& f) {
  std::unordered_set<Bitset, BitsetHash> members(f.sets.begin(), f.sets.end());
  int m = f.size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Bitset x = f.sets[i] & f.sets[j];
      if (!members.count(x))
        return PropertyReport::fail({{i + 1, j + 1}, {}, {}, "pairwise intersection missing"});
    }
  return PropertyReport::ok();
}

namespace {

// Branch and bound on the smallest still-uncovered set. depth_cap < 0 means
// exact; otherwise the search only decides whether a transversal of size
// <= depth_cap exists (returning the size found, or a value > depth_cap).
int cover_search(const std::vector<Bitset>& sets, std::vector<char>& dead, int chosen_count,
                 int best, int depth_cap) {
  int pick = -1, pick_size = 1 << 30;
  for (int i = 0; i < (int)sets.size(); ++i) {
    if (dead[i]) continue;
    int sz = sets[i].count();
    if (sz < pick_size) {
      pick = i;
      pick_size = sz;
    }
  }
  if (pick < 0) return chosen_count;  // everything covered
  if (chosen_count + 1 >= best) return best;
  if (depth_cap >= 0 && chosen_count + 1 > depth_cap) return best;
  const Bitset branch = sets[pick];
  for (int e = branch.first(); e; e = branch.next(e)) {
    std::vector<int> flipped;
    for (int i = 0; i < (int)sets.size(); ++i)
      if (!dead[i] && sets[i].test(e)) {
        dead[i] = 1;
        flipped.push_back(i);
      }
    best = cover_search(sets, dead, chosen_count + 1, best, depth_cap);
    for (int i : flipped) dead[i] = 0;
  }
  return best;
}

int covering_number_impl(const SetFamily& h, int depth_cap) {
  if (h.sets.empty()) return 0;
  std::vector<char> dead(h.sets.size(), 0);
  int ub = (int)h.sets.size();  // one element per set always suffices
  Bitset all(h.n);
  for (const auto& s : h.sets) all |= s;
  ub = std::min(ub, all.count());
  return cover_search(h.sets, dead, 0, depth_cap >= 0 ? depth_cap + 1 : ub + 1, depth_cap);
}

}  // namespace

int covering_number(const SetFamily& h) {
  for (int i = 0; i < h.size(); ++i)
    if (h.sets[i].empty())
      throw EmptyMemberSet("covering_number: member set " + std::to_string(i + 1) +
                           " is empty, no transversal exists");
  return covering_number_impl(h, -1);
}

bool covering_number_exceeds(const SetFamily& h, int d) {
  for (const auto& s : h.sets)
    if (s.empty()) return true;  // tau = infinity
  if (h.sets.empty()) return 0 > d;
  // bounded: find any transversal of size <= d, else exceeds
  return covering_number_impl(h, d) > d;
}

SetFamily restricted_star(const SetFamily& f, int x) {
  if (x < 1 || x > f.n) throw BadParameter("restricted_star: element out of range");
  SetFamily out(f.n);
  for (const auto& s : f.sets)
    if (s.test(x)) {
      Bitset t = s;
      t.reset(x);
      out.sets.push_back(std::move(t));
    }
  return out;
}

}  // namespace gt
