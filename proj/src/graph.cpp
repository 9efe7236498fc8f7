#include "schurlc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace schurlc {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 0) fail(ErrorCode::OutOfRange, "negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorCode::OutOfRange,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") against n=" + std::to_string(n));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::set_label(int v, std::string name) {
    if (v < 0 || v >= n_) fail(ErrorCode::OutOfRange, "label target " + std::to_string(v));
    labels_[v] = std::move(name);
}

std::uint64_t Graph::neighbor_bits(int v) const {
    std::uint64_t bits = 0;
    for (int w : adj_[v]) bits |= std::uint64_t{1} << w;
    return bits;
}

Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

Graph empty_graph(int n) { return Graph(n, {}); }

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(0, n - 1);
    return Graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    int off = a.vertex_count();
    for (auto [u, v] : b.edges()) e.emplace_back(u + off, v + off);
    return Graph(a.vertex_count() + b.vertex_count(), e);
}

SpiderShape::SpiderShape(std::vector<int> parts) : lambda(std::move(parts)) {
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1) fail(ErrorCode::NotAPartition, "part " + std::to_string(lambda[i]));
        if (i > 0 && lambda[i] > lambda[i - 1])
            fail(ErrorCode::NotAPartition, "parts not weakly decreasing");
    }
}

int SpiderShape::vertex_count() const {
    return 1 + std::accumulate(lambda.begin(), lambda.end(), 0);
}

int SpiderShape::leg_vertex(int leg, int depth) const {
    int base = 1;
    for (int i = 0; i < leg; ++i) base += lambda[i];
    return base + depth - 1;
}

std::pair<int, int> SpiderShape::locate(int v) const {
    if (v == 0) return {-1, 0};
    int base = 1;
    for (int leg = 0; leg < leg_count(); ++leg) {
        if (v < base + lambda[leg]) return {leg, v - base + 1};
        base += lambda[leg];
    }
    fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
}

Graph make_spider(const SpiderShape& shape) {
    std::vector<Edge> e;
    for (int leg = 0; leg < shape.leg_count(); ++leg) {
        e.emplace_back(0, shape.leg_vertex(leg, 1));
        for (int d = 1; d < shape.lambda[leg]; ++d)
            e.emplace_back(shape.leg_vertex(leg, d), shape.leg_vertex(leg, d + 1));
    }
    Graph g(shape.vertex_count(), e);
    g.set_label(0, "v0");
    for (int leg = 0; leg < shape.leg_count(); ++leg)
        g.set_label(shape.leg_start(leg), "v" + std::to_string(leg + 1));
    return g;
}

Graph make_spider(const std::vector<int>& lambda) { return make_spider(SpiderShape(lambda)); }

Pineapple make_pineapple(int n, const std::vector<int>& lambda) {
    if (n < 1) fail(ErrorCode::ZeroClique, "clique size " + std::to_string(n));
    SpiderShape shape(lambda);
    Graph spider = make_spider(shape);
    int sv = spider.vertex_count();
    std::vector<Edge> e = spider.edges();
    std::vector<int> clique;
    for (int i = 0; i < n - 1; ++i) {
        int id = sv + i;
        clique.push_back(id);
        e.emplace_back(0, id);
        for (int j = 0; j < i; ++j) e.emplace_back(clique[j], id);
    }
    Graph g(sv + n - 1, e);
    g.set_label(0, "u");
    for (int i = 0; i < n - 1; ++i) g.set_label(clique[i], "v" + std::to_string(i + 1));
    return Pineapple{std::move(g), n, std::move(shape), std::move(clique)};
}

long weight_total(const WeightMap& alpha) {
    long t = 0;
    for (int w : alpha) t += w;
    return t;
}

ClanGraph clan_graph(const Graph& g, const WeightMap& alpha) {
    if (static_cast<int>(alpha.size()) != g.vertex_count())
        fail(ErrorCode::OutOfRange, "weight map domain mismatch");
    for (int w : alpha)
        if (w < 0) fail(ErrorCode::OutOfRange, "negative weight");

    ClanGraph out;
    out.copies_of.assign(g.vertex_count(), {});
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int c = 0; c < alpha[v]; ++c) {
            out.copies_of[v].push_back(next);
            out.block_of.push_back(v);
            ++next;
        }
    std::vector<Edge> e;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& copies = out.copies_of[v];
        for (size_t i = 0; i < copies.size(); ++i)
            for (size_t j = i + 1; j < copies.size(); ++j) e.emplace_back(copies[i], copies[j]);
    }
    for (auto [u, v] : g.edges())
        for (int a : out.copies_of[u])
            for (int b : out.copies_of[v]) e.emplace_back(a, b);
    out.graph = Graph(next, e);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> verts = keep;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= g.vertex_count()) fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v));

    InducedSubgraph out;
    out.new_to_old = verts;
    out.old_to_new.assign(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) out.old_to_new[verts[i]] = static_cast<int>(i);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        if (out.old_to_new[u] >= 0 && out.old_to_new[v] >= 0)
            e.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    out.graph = Graph(static_cast<int>(verts.size()), e);
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, const std::vector<int>& remove) {
    std::vector<bool> gone(g.vertex_count(), false);
    for (int v : remove) {
        if (v < 0 || v >= g.vertex_count()) fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
        gone[v] = true;
    }
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
    std::vector<int> out = g.neighbors(v);
    out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<InducedSubgraph> connected_components(const Graph& g) {
    std::vector<InducedSubgraph> out;
    std::vector<bool> seen(g.vertex_count(), false);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    q.push(w);
                }
        }
        out.push_back(induced_subgraph(g, comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() == 0 || connected_components(g).size() == 1;
}

BipartitionResult find_bipartition(const Graph& g) {
    if (!is_connected(g)) fail(ErrorCode::NotConnected, "bipartition needs a connected graph");
    BipartitionResult out;
    int n = g.vertex_count();
    if (n == 0) {
        out.bipartition = Bipartition{};
        return out;
    }
    std::vector<int> color(n, -1), parent(n, -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                parent[w] = v;
                q.push(w);
            } else if (color[w] == color[v]) {
                // odd cycle: walk both endpoints up to their common ancestor
                std::vector<int> pv{v}, pw{w};
                auto depth = [&](int x) {
                    int d = 0;
                    while (parent[x] != -1) {
                        x = parent[x];
                        ++d;
                    }
                    return d;
                };
                int a = v, b = w, da = depth(v), db = depth(w);
                while (da > db) { a = parent[a]; pv.push_back(a); --da; }
                while (db > da) { b = parent[b]; pw.push_back(b); --db; }
                while (a != b) {
                    a = parent[a]; pv.push_back(a);
                    b = parent[b]; pw.push_back(b);
                }
                out.odd_cycle = pv;
                for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) out.odd_cycle.push_back(*it);
                return out;
            }
        }
    }
    Bipartition bp;
    for (int v = 0; v < n; ++v) bp.parts[color[v]].push_back(v);
    if (bp.parts[0].size() < bp.parts[1].size()) std::swap(bp.parts[0], bp.parts[1]);
    out.bipartition = std::move(bp);
    return out;
}

ClawCheck is_claw_free(const Graph& g) {
    for (int c = 0; c < g.vertex_count(); ++c) {
        const auto& nb = g.neighbors(c);
        int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.adjacent(nb[i], nb[j])) continue;
                for (int k = j + 1; k < d; ++k) {
                    if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
                    return ClawCheck{false, {c, nb[i], nb[j], nb[k]}};
                }
            }
    }
    return ClawCheck{};
}

} // namespace schurlc
