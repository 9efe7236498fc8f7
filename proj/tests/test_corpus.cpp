#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "schurlc/corpus.hpp"
#include "schurlc/graph.hpp"

using namespace schurlc;

TEST_CASE("canonical keys are relabeling-invariant and separating") {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 60; ++round) {
        int n = 1 + static_cast<int>(rng() % 9);
        Graph g = random_graph(n, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Edge> relabeled;
        for (auto [u, v] : g.edges()) relabeled.emplace_back(perm[u], perm[v]);
        CHECK(canonical_key(g) == canonical_key(Graph(n, relabeled)));
    }

    CHECK(canonical_key(path_graph(4)) != canonical_key(star_graph(3)));
    CHECK(canonical_key(cycle_graph(6)) != canonical_key(disjoint_union(complete_graph(3), complete_graph(3))));
    CHECK(isomorphic(make_spider({2, 1}), path_graph(4)));
    CHECK(!isomorphic(path_graph(5), cycle_graph(5)));
}

namespace {

// every connected graph on n labeled vertices, deduplicated: the slow route
std::set<std::string> connected_keys_by_bruteforce(int n) {
    std::set<std::string> keys;
    int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if ((mask >> bit) & 1) edges.emplace_back(i, j);
        Graph g(n, edges);
        if (is_connected(g)) keys.insert(canonical_key(g));
    }
    return keys;
}

} // namespace

TEST_CASE("connected catalogs match labeled brute force on small orders") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> brute = connected_keys_by_bruteforce(n);
        std::set<std::string> catalog;
        for (const Graph& g : connected_graphs(n)) catalog.insert(canonical_key(g));
        CHECK(catalog == brute);
    }
    CHECK(connected_graphs(1).size() == 1);
    CHECK(connected_graphs(2).size() == 1);
    CHECK(connected_graphs(3).size() == 2);
    CHECK(connected_graphs(4).size() == 6);
    CHECK(connected_graphs(5).size() == 21);
    CHECK(connected_graphs(6).size() == 112);
    CHECK(connected_graphs(7).size() == 853);
}

TEST_CASE("claw-free catalog equals the filtered catalog") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> filtered;
        for (const Graph& g : connected_graphs(n))
            if (is_claw_free(g).claw_free) filtered.insert(canonical_key(g));
        std::set<std::string> pruned;
        for (const Graph& g : connected_clawfree_graphs(n)) {
            CHECK(is_claw_free(g).claw_free);
            CHECK(is_connected(g));
            pruned.insert(canonical_key(g));
        }
        CHECK(pruned == filtered);
    }
}

namespace {

std::set<std::string> tree_keys_by_pruefer(int n) {
    std::set<std::string> keys;
    if (n == 1) return {canonical_key(empty_graph(1))};
    if (n == 2) return {canonical_key(path_graph(2))};
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        keys.insert(canonical_key(tree_from_pruefer(seq)));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return keys;
}

} // namespace

TEST_CASE("free tree generation matches the Pruefer route") {
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> pruefer = tree_keys_by_pruefer(n);
        std::set<std::string> generated;
        for (const Graph& t : free_trees(n)) {
            CHECK(t.edge_count() == n - 1);
            CHECK(is_connected(t));
            generated.insert(canonical_key(t));
        }
        CHECK(generated == pruefer);
    }
}

TEST_CASE("free tree counts through twelve vertices") {
    // regression freeze; the generator is cross-validated above
    const std::vector<size_t> counts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n) CHECK(free_trees(n).size() == counts[n - 1]);
}

TEST_CASE("pruefer decoding") {
    Graph t = tree_from_pruefer({3, 3});   // star centered at 3 on 4 vertices
    CHECK(t.edge_count() == 3);
    CHECK(t.degree(3) == 3);
    CHECK(isomorphic(t, star_graph(3)));
}

TEST_CASE("random graphs are reproducible") {
    std::mt19937_64 a(42), b(42);
    for (int round = 0; round < 10; ++round) {
        Graph ga = random_graph(9, a);
        Graph gb = random_graph(9, b);
        CHECK(ga == gb);
    }
    std::mt19937_64 c(43);
    bool any_different = false;
    std::mt19937_64 a2(42);
    for (int round = 0; round < 10; ++round)
        any_different |= !(random_graph(9, a2) == random_graph(9, c));
    CHECK(any_different);
}

TEST_CASE("partition enumeration") {
    auto parts = partitions_up_to(8);
    // p(0..8) = 1,1,2,3,5,7,11,15,22
    std::map<int, int> by_sum;
    for (const auto& lambda : parts) {
        int s = 0;
        for (size_t i = 0; i < lambda.size(); ++i) {
            CHECK(lambda[i] >= 1);
            if (i > 0) CHECK(lambda[i] <= lambda[i - 1]);
            s += lambda[i];
        }
        by_sum[s] += 1;
    }
    const std::vector<int> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int s = 0; s <= 8; ++s) CHECK(by_sum[s] == p[s]);
}
