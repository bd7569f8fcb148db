#pragma once

#include "gt/set_family.hpp"

namespace gt {

// A SetFamily read as a hypergraph: universe = vertices, sets = hyperedges.
using Hypergraph = SetFamily;

// Smallest k >= 2 such that k distinct hyperedges and k distinct vertices
// form an alternating closed chain; nullopt when acyclic. Two edges sharing
// two vertices (or equal edges at different indices) give girth 2. Computed
// as half the shortest cycle length of the vertex-edge incidence graph.
// Throws EmptyMemberSet on an empty hyperedge.
std::optional<int> berge_girth(const Hypergraph& h);

// r-uniform, d-regular, linear, girth >= g, all checked exactly.
PropertyReport validate_hypergraph(const Hypergraph& h, int r, int d, int g);

struct GirthConstruction {
  std::optional<Hypergraph> hypergraph;  // nullopt = restarts exhausted
  int restarts_used = 0;
};

// Randomized greedy with backtracking: add random r-sets of degree-deficient
// vertices whose pairwise distance keeps every cycle length >= g, restart on
// dead ends. Deterministic per (n, r, d, g, seed). Requires d >= 2, r >= 2,
// g >= 3 and r | d*n (BadParameter otherwise). Exhausting max_restarts means
// the parameters may simply be infeasible at this n.
GirthConstruction construct_girth_hypergraph(int n, int r, int d, int g, std::uint64_t seed,
                                             int max_restarts = 400);

struct Model3Construction {
  std::optional<SetFamily> family;
  int restarts_used = 0;
};

// Query family immune to single-element deductions: a girth-5 construction
// with r = max(d, 3) adjusted so r divides d*n; for d = 2 uses r = 4 and, for
// odd n, builds on n+1 vertices and deletes the extra element (member sizes
// stay >= 3). Requires d >= 2 and n >= d*r + 2.
Model3Construction model3_construction(int n, int d, std::uint64_t seed, int max_restarts = 400);

}  // namespace gt
