#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurlc/errors.hpp"

namespace schurlc {

using Edge = std::pair<int, int>;

/// Immutable finite simple graph on vertices 0..n-1. Edges are normalized
/// (u < v, sorted, deduplicated). All operations below are pure and return
/// new graphs plus relabeling maps, so graph values are stable cache keys.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);   // OutOfRange, LoopEdge

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    bool edgeless() const { return edges_.empty(); }

    const std::map<int, std::string>& labels() const { return labels_; }
    void set_label(int v, std::string name);

    /// Neighborhood as a bitmask; graph must have at most 64 vertices.
    std::uint64_t neighbor_bits(int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::map<int, std::string> labels_;
};

Graph build_graph(int n, const std::vector<Edge>& edges);

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);   // K_{1,leaves}, center 0
Graph disjoint_union(const Graph& a, const Graph& b);

/// Spider S(lambda): torso is vertex 0; leg i occupies a contiguous block of
/// lambda[i] vertices numbered torso-outward, legs in lambda order. The
/// numbering is part of the public contract: the verifier's injection breaks
/// ties by leg index.
struct SpiderShape {
    std::vector<int> lambda;   // weakly decreasing, all parts >= 1

    explicit SpiderShape(std::vector<int> parts);   // NotAPartition

    int leg_count() const { return static_cast<int>(lambda.size()); }
    int vertex_count() const;
    int leg_vertex(int leg, int depth) const;   // depth in 1..lambda[leg]
    int leg_start(int leg) const { return leg_vertex(leg, 1); }
    /// torso -> (-1, 0); otherwise (leg, depth)
    std::pair<int, int> locate(int v) const;
};

Graph make_spider(const SpiderShape& shape);
Graph make_spider(const std::vector<int>& lambda);

/// Pineapple Pi(n, lambda): K_n with one vertex identified with the torso of
/// S(lambda). The torso keeps id 0; the other n-1 clique vertices are
/// appended after the spider block.
struct Pineapple {
    Graph graph;
    int clique_size;                  // n
    SpiderShape shape;
    std::vector<int> clique_vertices; // ids of v_1..v_{n-1}
};
Pineapple make_pineapple(int n, const std::vector<int>& lambda);   // ZeroClique, NotAPartition

/// alpha: V(G) -> N, indexed by vertex id; the domain is exactly V(G).
using WeightMap = std::vector<int>;
long weight_total(const WeightMap& alpha);

/// Clan graph G^alpha: vertex v becomes a clique of size alpha(v), cliques of
/// adjacent vertices fully joined. Weight 0 deletes the vertex. New vertices
/// are numbered by original vertex order, copies contiguous.
struct ClanGraph {
    Graph graph;
    std::vector<int> block_of;                // new vertex -> original vertex
    std::vector<std::vector<int>> copies_of;  // original vertex -> new vertices
};
ClanGraph clan_graph(const Graph& g, const WeightMap& alpha);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> new_to_old;
    std::vector<int> old_to_new;   // -1 for removed vertices
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);
InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& remove);   // OutOfRange

std::vector<int> closed_neighborhood(const Graph& g, int v);   // N[v], sorted

/// Components ordered by smallest original vertex label.
std::vector<InducedSubgraph> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
    std::array<std::vector<int>, 2> parts;   // parts[0].size() >= parts[1].size()
    std::pair<int, int> type() const {
        return {static_cast<int>(parts[0].size()), static_cast<int>(parts[1].size())};
    }
};
struct BipartitionResult {
    std::optional<Bipartition> bipartition;
    std::vector<int> odd_cycle;   // witness cycle when not bipartite
};
/// The unique bipartition of a connected graph, or an odd-cycle witness.
BipartitionResult find_bipartition(const Graph& g);   // NotConnected

struct ClawCheck {
    bool claw_free = true;
    std::array<int, 4> witness{};   // center followed by three pairwise nonadjacent leaves
};
ClawCheck is_claw_free(const Graph& g);

} // namespace schurlc
