#include "gt/hypergraph.hpp"

#include <algorithm>

namespace gt {

std::optional<int> berge_girth(const Hypergraph& h) {
  int m = h.size();
  for (int i = 0; i < m; ++i)
    if (h.sets[i].empty())
      throw EmptyMemberSet("berge_girth: hyperedge " + std::to_string(i + 1) + " is empty");
  // incidence graph: nodes 0..n-1 = vertices, n..n+m-1 = hyperedges
  int big = h.n + m;
  std::vector<std::vector<int>> adj(big);
  for (int e = 0; e < m; ++e)
    for (int v = h.sets[e].first(); v; v = h.sets[e].next(v)) {
      adj[v - 1].push_back(h.n + e);
      adj[h.n + e].push_back(v - 1);
    }
  int best = 1 << 30;
  std::vector<int> dist(big), parent(big), queue;
  for (int s = 0; s < big; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      if (2 * dist[u] >= best) break;  // deeper layers cannot improve
      for (int w : adj[u]) {
        if (w == parent[u]) continue;
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == 1 << 30) return std::nullopt;
  return best / 2;
}

PropertyReport validate_hypergraph(const Hypergraph& h, int r, int d, int g) {
  for (int i = 0; i < h.size(); ++i)
    if (h.sets[i].count() != r)
      return PropertyReport::fail({{i + 1}, {}, {}, "hyperedge size differs from r"});
  std::vector<int> degree(h.n, 0);
  for (const auto& e : h.sets)
    for (int v = e.first(); v; v = e.next(v)) ++degree[v - 1];
  for (int v = 1; v <= h.n; ++v)
    if (degree[v - 1] != d)
      return PropertyReport::fail({{}, {v}, {}, "vertex degree differs from d"});
  for (int i = 0; i < h.size(); ++i)
    for (int j = i + 1; j < h.size(); ++j)
      if ((h.sets[i] & h.sets[j]).count() > 1)
        return PropertyReport::fail({{i + 1, j + 1}, {}, {}, "two hyperedges share two vertices"});
  auto girth = berge_girth(h);
  if (girth && *girth < g)
    return PropertyReport::fail({{}, {}, {}, "girth " + std::to_string(*girth) + " below target"});
  return PropertyReport::ok();
}

namespace {

// Greedy growth state. Compatibility of a fresh r-set: the vertices must be
// pairwise at Berge distance >= g-1, so any new cycle has length >= g.
struct GreedyBuild {
  int n, r, d, g;
  std::vector<std::vector<int>> edges;
  std::vector<std::vector<int>> incident;  // vertex -> edge ids
  std::vector<int> degree;
  std::vector<int> mark;
  int stamp = 0;

  GreedyBuild(int n, int r, int d, int g)
      : n(n), r(r), d(d), g(g), incident(n), degree(n, 0), mark(n, -1) {}

  void reset() {
    edges.clear();
    for (auto& inc : incident) inc.clear();
    std::fill(degree.begin(), degree.end(), 0);
  }

  // vertices within distance g-2 of v (v included), marked with `stamp`
  void mark_reach(int v) {
    ++stamp;
    std::vector<int> frontier{v};
    mark[v] = stamp;
    for (int depth = 0; depth < g - 2 && !frontier.empty(); ++depth) {
      std::vector<int> next;
      for (int u : frontier)
        for (int e : incident[u])
          for (int w : edges[e])
            if (mark[w] != stamp) {
              mark[w] = stamp;
              next.push_back(w);
            }
      frontier = std::move(next);
    }
  }

  void add_edge(std::vector<int> verts) {
    int id = (int)edges.size();
    for (int v : verts) {
      incident[v].push_back(id);
      ++degree[v];
    }
    edges.push_back(std::move(verts));
  }

  void remove_random_edge(Rng& rng) {
    if (edges.empty()) return;
    int idx = (int)rng.below(edges.size());
    for (int v : edges[idx]) {
      --degree[v];
      incident[v].erase(std::find(incident[v].begin(), incident[v].end(), idx));
    }
    int last = (int)edges.size() - 1;
    if (idx != last) {
      for (int v : edges[last])
        *std::find(incident[v].begin(), incident[v].end(), last) = idx;
      edges[idx] = std::move(edges[last]);
    }
    edges.pop_back();
  }

  bool attempt(std::uint64_t seed) {
    reset();
    Rng rng(seed);
    int target = d * n / r;
    std::vector<int> pool;
    std::vector<char> forbidden(n, 0);
    int fail_streak = 0;
    long steps = 0;
    const long step_budget = 400L * target;
    while ((int)edges.size() < target) {
      if (++steps > step_budget) return false;
      pool.clear();
      for (int v = 0; v < n; ++v)
        if (degree[v] < d) pool.push_back(v);
      if ((int)pool.size() < r) {
        ++fail_streak;
        for (int k = 0; k <= fail_streak / 4 && !edges.empty(); ++k) remove_random_edge(rng);
        continue;
      }
      rng.shuffle(pool);
      std::fill(forbidden.begin(), forbidden.end(), 0);
      std::vector<int> chosen;
      for (int v : pool) {
        if (forbidden[v]) continue;
        chosen.push_back(v);
        if ((int)chosen.size() == r) break;
        mark_reach(v);
        for (int w = 0; w < n; ++w)
          if (mark[w] == stamp) forbidden[w] = 1;
      }
      if ((int)chosen.size() < r) {
        ++fail_streak;
        for (int k = 0; k <= fail_streak / 6 && !edges.empty(); ++k) remove_random_edge(rng);
        continue;
      }
      fail_streak = 0;
      std::sort(chosen.begin(), chosen.end());
      add_edge(std::move(chosen));
    }
    return true;
  }
};

}  // namespace

GirthConstruction construct_girth_hypergraph(int n, int r, int d, int g, std::uint64_t seed,
                                             int max_restarts) {
  if (d < 2 || r < 2 || g < 3 || n < r) throw BadParameter("girth construction: bad parameters");
  if ((long long)d * n % r != 0)
    throw BadParameter("girth construction: r must divide d*n");
  GreedyBuild build(n, r, d, g);
  for (int restart = 0; restart < max_restarts; ++restart) {
    if (build.attempt(mix_seed(seed, (std::uint64_t)restart))) {
      Hypergraph h(n);
      std::vector<std::vector<int>> sorted = build.edges;
      std::sort(sorted.begin(), sorted.end());
      for (const auto& e : sorted) {
        Bitset b(n);
        for (int v : e) b.set(v + 1);
        h.sets.push_back(std::move(b));
      }
      return {std::move(h), restart};
    }
  }
  return {std::nullopt, max_restarts};
}

Model3Construction model3_construction(int n, int d, std::uint64_t seed, int max_restarts) {
  if (d < 2) throw BadParameter("model3 construction: d must be >= 2");
  int r = d >= 3 ? d : 4;
  if (n < d * r + 2) throw BadParameter("model3 construction: n must be at least d*r+2");
  if (d >= 3 || n % 2 == 0) {
    auto res = construct_girth_hypergraph(n, r, d, 5, seed, max_restarts);
    return {std::move(res.hypergraph), res.restarts_used};
  }
  // d = 2, n odd: build on n+1 vertices and delete the extra element; member
  // sizes drop to 3 only where the deleted vertex occurred
  auto res = construct_girth_hypergraph(n + 1, r, d, 5, seed, max_restarts);
  if (!res.hypergraph) return {std::nullopt, res.restarts_used};
  SetFamily out(n);
  for (const auto& e : res.hypergraph->sets) {
    Bitset b(n);
    for (int v = e.first(); v; v = e.next(v))
      if (v <= n) b.set(v);
    out.sets.push_back(std::move(b));
  }
  return {std::move(out), res.restarts_used};
}

}  // namespace gt
