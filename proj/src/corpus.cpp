#include "schurlc/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

namespace schurlc {

namespace {

// one round of color refinement by sorted neighbor-color multisets
std::vector<int> refine_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[v]};
            for (int w : g.neighbors(v)) s.push_back(color[w]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int c = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
            next[sorted[i].second] = c;
        }
        if (next == color) return color;
        color = std::move(next);
    }
}

std::string encode_under(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    std::string key;
    key.push_back(static_cast<char>(n));
    int bits = 0, acc = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = (acc << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
            if (++bits == 8) {
                key.push_back(static_cast<char>(acc));
                bits = 0;
                acc = 0;
            }
        }
    if (bits) key.push_back(static_cast<char>(acc << (8 - bits)));
    return key;
}

} // namespace

std::string canonical_key(const Graph& g) {
    int n = g.vertex_count();
    if (n > 12) fail(ErrorCode::TooLarge, "canonical form guard at 12 vertices");
    if (n == 0) return std::string(1, '\0');

    std::vector<int> color = refine_colors(g);
    // cells ordered by refined color; the coloring is isomorphism-invariant
    std::vector<std::vector<int>> cells(*std::max_element(color.begin(), color.end()) + 1);
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);

    std::vector<int> perm;
    for (auto& cell : cells) {
        std::sort(cell.begin(), cell.end());
        perm.insert(perm.end(), cell.begin(), cell.end());
    }

    std::string best = encode_under(g, perm);
    // walk the product of per-cell permutations like an odometer
    std::vector<std::vector<int>> work = cells;
    for (;;) {
        size_t i = 0;
        while (i < work.size() && !std::next_permutation(work[i].begin(), work[i].end())) ++i;
        if (i == work.size()) break;
        perm.clear();
        for (const auto& cell : work) perm.insert(perm.end(), cell.begin(), cell.end());
        std::string key = encode_under(g, perm);
        if (key < best) best = std::move(key);
    }
    return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

namespace {

Graph extend_with_vertex(const Graph& g, std::uint32_t mask) {
    std::vector<Edge> e = g.edges();
    int v = g.vertex_count();
    for (int u = 0; u < v; ++u)
        if ((mask >> u) & 1) e.emplace_back(u, v);
    return Graph(v + 1, e);
}

// claws created by the new vertex only; the parent is claw-free already
bool new_vertex_keeps_clawfree(const Graph& g, int v) {
    const auto& nb = g.neighbors(v);
    int d = static_cast<int>(nb.size());
    // v as the center
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            if (g.adjacent(nb[i], nb[j])) continue;
            for (int k = j + 1; k < d; ++k)
                if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
        }
    // v as a leaf of a claw centered at a neighbor
    for (int c : nb) {
        const auto& cn = g.neighbors(c);
        int cd = static_cast<int>(cn.size());
        for (int i = 0; i < cd; ++i) {
            if (cn[i] == v || g.adjacent(cn[i], v)) continue;
            for (int j = i + 1; j < cd; ++j) {
                if (cn[j] == v || g.adjacent(cn[j], v)) continue;
                if (!g.adjacent(cn[i], cn[j])) return false;
            }
        }
    }
    return true;
}

std::vector<Graph> build_connected(int n, bool clawfree_only) {
    if (n < 1) return {};
    if (n == 1) return {empty_graph(1)};
    const std::vector<Graph>& parents =
        clawfree_only ? connected_clawfree_graphs(n - 1) : connected_graphs(n - 1);
    std::map<std::string, Graph> seen;
    std::uint32_t top = std::uint32_t{1} << (n - 1);
    for (const Graph& p : parents) {
        for (std::uint32_t mask = 1; mask < top; ++mask) {
            Graph child = extend_with_vertex(p, mask);
            if (clawfree_only && !new_vertex_keeps_clawfree(child, n - 1)) continue;
            std::string key = canonical_key(child);
            seen.try_emplace(std::move(key), std::move(child));
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [key, g] : seen) out.push_back(std::move(g));
    return out;
}

// builds recurse into smaller catalogs, hence the recursive mutex
std::recursive_mutex catalog_mutex;

} // namespace

const std::vector<Graph>& connected_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard lock(catalog_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.try_emplace(n, build_connected(n, false)).first;
    return it->second;
}

const std::vector<Graph>& connected_clawfree_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard lock(catalog_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.try_emplace(n, build_connected(n, true)).first;
    return it->second;
}

namespace {

// rooted trees on n vertices as preorder parent vectors, children generated
// as weakly decreasing (size, index) multisets so each shape appears once
struct RootedTreeTable {
    std::vector<std::vector<std::vector<int>>> by_size;   // [k] -> parent vectors

    explicit RootedTreeTable(int nmax) {
        by_size.assign(nmax + 1, {});
        if (nmax >= 1) by_size[1] = {{-1}};
        for (int k = 2; k <= nmax; ++k) {
            std::vector<int> tree{-1};
            emit(k, k - 1, k - 1, std::numeric_limits<int>::max(), tree);
        }
    }

    void emit(int k, int budget, int max_size, int max_index, std::vector<int>& tree) {
        if (budget == 0) {
            by_size[k].push_back(tree);
            return;
        }
        for (int s = std::min(budget, max_size); s >= 1; --s) {
            int idx_cap = (s == max_size) ? max_index : std::numeric_limits<int>::max();
            const auto& shapes = by_size[s];
            int hi = std::min<int>(static_cast<int>(shapes.size()) - 1, idx_cap);
            for (int i = hi; i >= 0; --i) {
                size_t base = tree.size();
                for (size_t t = 0; t < shapes[i].size(); ++t) {
                    int par = shapes[i][t];
                    tree.push_back(par < 0 ? 0 : static_cast<int>(base) + par);
                }
                emit(k, budget - s, s, i, tree);
                tree.resize(base);
            }
        }
    }
};

Graph graph_from_parents(const std::vector<int>& parent) {
    std::vector<Edge> e;
    for (size_t v = 1; v < parent.size(); ++v) e.emplace_back(parent[v], static_cast<int>(v));
    return Graph(static_cast<int>(parent.size()), e);
}

std::string ahu_encode(const Graph& g, int v, int from) {
    std::vector<std::string> kids;
    for (int w : g.neighbors(v))
        if (w != from) kids.push_back(ahu_encode(g, w, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    out += ")";
    return out;
}

std::vector<int> tree_centroids(const Graph& g) {
    int n = g.vertex_count();
    if (n == 1) return {0};
    std::vector<int> size(n, 0), order, parent(n, -1);
    order.reserve(n);
    std::vector<int> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        size[*it] += 1;
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    }
    std::vector<int> centroids;
    for (int v = 0; v < n; ++v) {
        int heaviest = n - size[v];
        for (int w : g.neighbors(v))
            if (parent[w] == v) heaviest = std::max(heaviest, size[w]);
        if (heaviest <= n / 2) centroids.push_back(v);
    }
    return centroids;
}

std::string free_tree_key(const Graph& g) {
    std::string best;
    for (int c : tree_centroids(g)) {
        std::string enc = ahu_encode(g, c, -1);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

} // namespace

const std::vector<Graph>& free_trees(int n) {
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard lock(catalog_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Graph> out;
    if (n >= 1) {
        RootedTreeTable table(n);
        std::map<std::string, Graph> seen;
        for (const auto& parent : table.by_size[n]) {
            Graph g = graph_from_parents(parent);
            std::string key = free_tree_key(g);
            seen.try_emplace(std::move(key), std::move(g));
        }
        for (auto& [key, g] : seen) out.push_back(std::move(g));
    }
    return cache.try_emplace(n, std::move(out)).first->second;
}

Graph tree_from_pruefer(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n, 1);
    for (int v : seq) {
        if (v < 0 || v >= n) fail(ErrorCode::OutOfRange, "pruefer symbol");
        ++deg[v];
    }
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<Edge> e;
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        e.emplace_back(leaf, v);
        if (--deg[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *leaves.rbegin();
    e.emplace_back(a, b);
    return Graph(n, e);
}

Graph random_graph(int n, std::mt19937_64& rng) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1) e.emplace_back(i, j);
    return Graph(n, e);
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        emit_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> partitions_up_to(int max_sum) {
    std::vector<std::vector<int>> out{{}};
    std::vector<int> acc;
    for (int s = 1; s <= max_sum; ++s) emit_partitions(s, s, acc, out);
    return out;
}

} // namespace schurlc
