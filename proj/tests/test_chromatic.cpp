#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "schurlc/chromatic.hpp"
#include "schurlc/corpus.hpp"
#include "support/test_oracles.hpp"

using namespace schurlc;

namespace {

TwoRowProfile single(long k, long l, long num = 1, long den = 1) {
    TwoRowProfile p;
    Rat c(num, den);
    c.canonicalize();
    p.set({k, l}, c);
    return p;
}

} // namespace

TEST_CASE("semi-ordered stable partition counts") {
    StableTypeCounts claw = stable_two_block_counts(star_graph(3));
    CHECK(claw.at({3, 1}) == 1);
    CHECK(claw.at({2, 2}) == 0);
    CHECK(claw.whole_count == 0);

    StableTypeCounts p4 = stable_two_block_counts(path_graph(4));
    CHECK(p4.at({2, 2}) == 2);
    CHECK(p4.at({3, 1}) == 0);

    StableTypeCounts e2 = stable_two_block_counts(empty_graph(2));
    CHECK(e2.at({1, 1}) == 2);
    CHECK(e2.whole_count == 1);

    // counts at (k,k) are always even
    std::mt19937_64 rng(5);
    for (int round = 0; round < 40; ++round) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 8), rng);
        for (const auto& [type, count] : stable_two_block_counts(g).counts)
            if (type.k == type.l) CHECK(count % 2 == 0);
    }

    CHECK_THROWS_AS(stable_two_block_counts(empty_graph(26)), Error);
}

TEST_CASE("two-row chromatic content of the anchors") {
    CHECK(two_row_X(star_graph(3)) == profile_add(single(3, 1), single(2, 2, -1)));
    CHECK(two_row_X(empty_graph(2)) == profile_add(single(2, 0), single(1, 1)));
    CHECK(two_row_X(path_graph(4)) == single(2, 2, 2));
    CHECK(two_row_X(empty_graph(0)) == TwoRowProfile::unit());
    CHECK(two_row_X(complete_graph(3)).is_zero());
}

TEST_CASE("stable count route equals the proper-coloring oracle") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            CHECK(two_row_X(g) == testing::two_row_x_by_coloring(g));

    std::mt19937_64 rng(21);
    for (int round = 0; round < 50; ++round) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 8), rng);
        CHECK(two_row_X(g) == testing::two_row_x_by_coloring(g));
    }
}

TEST_CASE("component fast path equals the enumeration route") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n)) CHECK(two_row_x_fast(g) == two_row_X(g));

    std::mt19937_64 rng(22);
    for (int round = 0; round < 80; ++round) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 10), rng);   // often disconnected
        CHECK(two_row_x_fast(g) == two_row_X(g));
    }
    CHECK(two_row_x_fast(empty_graph(0)) == TwoRowProfile::unit());
}

TEST_CASE("disjoint unions multiply") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 40; ++round) {
        Graph a = random_graph(1 + static_cast<int>(rng() % 4), rng);
        Graph b = random_graph(1 + static_cast<int>(rng() % 4), rng);
        CHECK(two_row_X(disjoint_union(a, b)) == profile_product(two_row_X(a), two_row_X(b)));
    }
}

TEST_CASE("bipartite positivity is balancedness; non-bipartite content vanishes") {
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : connected_graphs(n)) {
            auto bp = find_bipartition(g);
            TwoRowProfile x = two_row_X(g);
            CHECK(x == two_row_x_fast(g));
            if (!bp.bipartition.has_value()) {
                CHECK(x.is_zero());
            } else {
                auto [k, l] = bp.bipartition->type();
                CHECK(is_2s_positive(x).positive == (k <= l + 1));
            }
        }
}

TEST_CASE("normalized clan content") {
    Graph claw = star_graph(3);
    WeightMap unit(4, 1);
    CHECK(two_row_X_alpha(claw, unit) == two_row_X(claw));

    CHECK(two_row_X_alpha(empty_graph(1), {2}) == single(1, 1));

    // the case-(i) image of the unit weighting on the claw: clan K2 + 2K1,
    // counts 2 and 4, normalized by 2!
    CHECK(two_row_X_alpha(claw, {0, 2, 1, 1}) == profile_add(single(3, 1), single(2, 2)));

    std::mt19937_64 rng(31);
    for (int round = 0; round < 50; ++round) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 5), rng);
        WeightMap alpha(g.vertex_count());
        for (auto& w : alpha) w = static_cast<int>(rng() % 3);
        CHECK(two_row_x_alpha_fast(g, alpha) == two_row_X_alpha(g, alpha));
    }

    CHECK_THROWS_AS(two_row_X_alpha(empty_graph(1), {26}), Error);
}

TEST_CASE("fast Y profile on the anchors") {
    TwoRowProfile claw = two_row_Y_fast(star_graph(3));
    CHECK(claw.coeff({2, 2}) == 5);
    CHECK(claw.coeff({2, 1}) == 11);
    CHECK(claw.coeff({3, 1}) == 4);

    TwoRowProfile k1 = two_row_Y_fast(empty_graph(1));
    CHECK(k1.coeff({1, 1}) == 1);
    CHECK(k1.coeff({1, 0}) == 1);
    CHECK(k1.coeff({0, 0}) == 1);

    // entries vanish beyond the independence number plus one
    std::mt19937_64 rng(41);
    for (int round = 0; round < 30; ++round) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 8), rng);
        long alpha_g = indep_poly(g).degree();
        TwoRowProfile y = two_row_Y_fast(g);
        for (const auto& [pt, c] : y.entries()) CHECK(pt.k <= alpha_g + 1);
    }
}

TEST_CASE("weight map enumeration") {
    std::vector<WeightMap> got;
    enumerate_weight_maps(empty_graph(1), 3, [&](const WeightMap& w) { got.push_back(w); });
    CHECK(got == std::vector<WeightMap>{{3}});

    got.clear();
    enumerate_weight_maps(complete_graph(2), 1, [&](const WeightMap& w) { got.push_back(w); });
    CHECK(got == std::vector<WeightMap>{{1, 0}, {0, 1}});

    long long count = 0;
    enumerate_weight_maps(path_graph(3), 2, [&](const WeightMap&) { ++count; });
    CHECK(count == 6);
    CHECK(count_weight_maps(3, 2) == 6);
    CHECK(count_weight_maps(10, 8) == 24310);

    CHECK_THROWS_AS(enumerate_weight_maps(empty_graph(11), 2, [](const WeightMap&) {}), Error);
    CHECK_THROWS_AS(enumerate_weight_maps(empty_graph(2), 13, [](const WeightMap&) {}), Error);
}

TEST_CASE("degree slices of Y: oracle equals fast path") {
    TwoRowProfile d0 = two_row_Y_oracle(star_graph(3), 0);
    CHECK(d0 == TwoRowProfile::unit());

    TwoRowProfile claw4 = two_row_Y_oracle(star_graph(3), 4);
    CHECK(claw4.coeff({2, 2}) == 5);
    CHECK(claw4.coeff({3, 1}) == 4);
    CHECK(claw4 == two_row_Y_fast(star_graph(3)).slice(4));

    TwoRowProfile k2 = two_row_Y_oracle(complete_graph(2), 2);
    CHECK(k2.coeff({1, 1}) == 4);
    CHECK(k2 == two_row_Y_fast(complete_graph(2)).slice(2));

    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : connected_graphs(n))
            for (long d = 0; d <= 5; ++d)
                CHECK(two_row_Y_oracle(g, d) == two_row_Y_fast(g).slice(d));
}

TEST_CASE("positivity of Y tracks log-concavity") {
    std::mt19937_64 rng(55);
    for (int round = 0; round < 50; ++round) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 8), rng);
        IntPolynomial ip = indep_poly(g);
        bool lc = is_log_concave(ip).holds;
        bool slc = is_strongly_log_concave(ip).holds;
        bool pos = is_2s_positive(two_row_Y_fast(g)).positive;
        CHECK(lc == pos);
        CHECK(slc == pos);
    }
}
