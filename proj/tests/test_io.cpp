#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurlc/chromatic.hpp"
#include "schurlc/io.hpp"

using namespace schurlc;

TEST_CASE("graph JSON round-trips byte-exactly") {
    Graph g = make_spider({2, 1});
    std::string text = graph_to_json(g);
    Graph back = graph_from_json(text);
    CHECK(back == g);
    CHECK(back.labels() == g.labels());
    CHECK(graph_to_json(back) == text);

    Graph plain = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(graph_from_json(graph_to_json(plain)) == plain);

    Graph parsed = graph_from_json(R"({"n":3,"edges":[[2,1],[0,1]]})");
    CHECK(parsed == path_graph(3));

    CHECK_THROWS_AS(graph_from_json("{"), Error);
    CHECK_THROWS_AS(graph_from_json(R"({"edges":[]})"), Error);
    CHECK_THROWS_AS(graph_from_json(R"({"n":2,"edges":[[0,5]]})"), Error);
    try {
        graph_from_json(R"({"n":2,"edges":[[0,0]]})");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("edge list round-trips") {
    Graph g = star_graph(3);
    std::string text = graph_to_edge_list(g);
    CHECK(text == "4 3\n0 1\n0 2\n0 3\n");
    CHECK(graph_from_edge_list(text) == g);
    CHECK(graph_to_edge_list(graph_from_edge_list(text)) == text);

    CHECK_THROWS_AS(graph_from_edge_list("junk"), Error);
    CHECK_THROWS_AS(graph_from_edge_list("2 1\n0 1\nextra"), Error);
    CHECK_THROWS_AS(graph_from_edge_list("2 2\n0 1\n"), Error);
    CHECK_THROWS_AS(graph_from_edge_list("2 1\n0 0\n"), Error);

    CHECK(graph_from_text("3 2\n0 1\n1 2\n") == path_graph(3));
    CHECK(graph_from_text(R"(  {"n":1,"edges":[]})") == empty_graph(1));
}

TEST_CASE("polynomial JSON uses decimal strings") {
    IntPolynomial p = indep_poly(star_graph(3));
    std::string text = poly_to_json(p);
    CHECK(text == R"({"coeffs":["1","4","3","1"]})");
    CHECK(poly_from_json(text) == p);

    IntPolynomial big = binomial_poly(70);
    CHECK(poly_from_json(poly_to_json(big)) == big);

    CHECK_THROWS_AS(poly_from_json(R"({"coeffs":[1]})"), Error);
    CHECK_THROWS_AS(poly_from_json(R"({"coeffs":["x"]})"), Error);
}

TEST_CASE("profile JSON is sorted by (degree, k)") {
    TwoRowProfile p = two_row_X(star_graph(3));
    std::string text = profile_to_json(p);
    CHECK(text == R"({"entries":[{"den":"1","k":2,"l":2,"num":"-1"},{"den":"1","k":3,"l":1,"num":"1"}]})");
    CHECK(profile_from_json(text) == p);

    TwoRowProfile q = two_row_X_alpha(empty_graph(1), {2});
    CHECK(profile_from_json(profile_to_json(q)) == q);

    CHECK_THROWS_AS(profile_from_json(R"({"entries":[{"k":1}]})"), Error);
    CHECK_THROWS_AS(profile_from_json(R"({"entries":[{"k":1,"l":0,"num":"1","den":"0"}]})"), Error);
}

TEST_CASE("profile display forms") {
    CHECK(profile_to_display(two_row_X(star_graph(3))) == "s(3,1) - s(2,2)");
    CHECK(profile_to_display(two_row_X(path_graph(4))) == "2 s(2,2)");
    CHECK(profile_to_display(two_row_X(empty_graph(2))) == "s(2) + s(1,1)");
    CHECK(profile_to_display(TwoRowProfile{}) == "0");
    CHECK(profile_to_display(TwoRowProfile::unit()) == "1");

    TwoRowProfile half;
    half.set({1, 1}, Rat(1, 2));
    CHECK(profile_to_display(half) == "1/2 s(1,1)");
}
