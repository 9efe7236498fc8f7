#pragma once

#include <random>
#include <string>
#include <vector>

#include "schurlc/graph.hpp"

namespace schurlc {

/// Complete isomorphism invariant: lexicographically smallest adjacency
/// encoding over all vertex orderings compatible with a degree-refinement
/// coloring. Brute force, intended for small graphs only (guard at 12).
std::string canonical_key(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// All isomorphism classes of connected graphs on exactly n vertices,
/// generated by single-vertex extension and canonical-key deduplication.
/// Deterministic order (sorted by key). Cached.
const std::vector<Graph>& connected_graphs(int n);

/// Same, restricted to claw-free graphs (claw-freeness is hereditary, so the
/// extension search prunes early).
const std::vector<Graph>& connected_clawfree_graphs(int n);

/// All free trees on n vertices, from rooted-tree generation plus
/// centroid-rooted canonical deduplication. Cached.
const std::vector<Graph>& free_trees(int n);

/// Decode a Pruefer sequence over {0..n-1}, n = seq.size() + 2.
Graph tree_from_pruefer(const std::vector<int>& seq);

/// G(n, 1/2) with edges drawn from the raw engine stream, one draw per
/// vertex pair, so corpora are reproducible byte-for-byte across platforms.
Graph random_graph(int n, std::mt19937_64& rng);

/// All integer partitions with sum <= max_sum, the empty partition included,
/// ordered by (sum, reverse-lexicographic).
std::vector<std::vector<int>> partitions_up_to(int max_sum);

} // namespace schurlc
