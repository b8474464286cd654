#include <doctest.h>

#include <sstream>

#include "stemforge/generators.hpp"
#include "stemforge/graph.hpp"
#include "test_util.hpp"

using namespace stemforge;
using namespace stemforge::testutil;

TEST_CASE("edge list parsing") {
    SUBCASE("smallest path") {
        Graph g = parse_edge_list("3 2\n0 1\n1 2");
        CHECK(g.order() == 3);
        CHECK(g.edge_count() == 2);
        CHECK(g.has_edge(0, 1));
        CHECK(g.has_edge(1, 2));
        CHECK_FALSE(g.has_edge(0, 2));
    }
    SUBCASE("single isolated vertex") {
        Graph g = parse_edge_list("1 0");
        CHECK(g.order() == 1);
        CHECK(g.edge_count() == 0);
    }
    SUBCASE("comments and blank lines are ignored") {
        Graph g = parse_edge_list("# header comment\n\n3 1\n# between\n0 2\n\n# tail\n");
        CHECK(g.order() == 3);
        CHECK(g.has_edge(0, 2));
    }
    SUBCASE("self-loop is rejected with its line") {
        try {
            parse_edge_list("2 1\n0 0");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
        }
    }
    SUBCASE("duplicate edge is rejected, either orientation") {
        CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0"), ParseError);
    }
    SUBCASE("index out of range") {
        try {
            parse_edge_list("2 1\n0 2");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("malformed header") {
        CHECK_THROWS_AS(parse_edge_list("x y\n"), ParseError);
        CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    }
    SUBCASE("missing edges") {
        CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), ParseError);
    }
    SUBCASE("round trip") {
        Graph g = cycle_graph(5);
        Graph h = parse_edge_list(to_edge_list(g));
        CHECK(g == h);
    }
}

TEST_CASE("handshake identity on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_connected_graph(3 + static_cast<int>(seed % 8), 0.4, seed);
        long long total = 0;
        for (int v = 0; v < g.order(); ++v) total += g.degree(v);
        CHECK(total == 2LL * g.edge_count());
    }
}

TEST_CASE("graph6 codec") {
    SUBCASE("known strings") {
        CHECK(to_graph6(path_graph(3)) == "Bg");
        CHECK(to_graph6(complete_graph(3)) == "Bw");
        CHECK(to_graph6(cycle_graph(5)) == "Dhc");
        CHECK(to_graph6(complete_graph(7)) == "F~~~w");
        CHECK(parse_graph6("Bg") == path_graph(3));
        CHECK(parse_graph6("Bw") == complete_graph(3));
        CHECK(parse_graph6("Dhc") == cycle_graph(5));
        CHECK(parse_graph6("F~~~w") == complete_graph(7));
    }
    SUBCASE("header form accepted") {
        CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
    }
    SUBCASE("round trip on random graphs") {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            Graph g = random_connected_graph(2 + static_cast<int>(seed % 12), 0.5,
                                             1000 + seed);
            CHECK(parse_graph6(to_graph6(g)) == g);
        }
    }
    SUBCASE("bad padding rejected") {
        CHECK_THROWS_AS(parse_graph6("B~"), ParseError);
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(path_graph(3)));
    CHECK_FALSE(is_connected(Graph(2, {})));
    CHECK(is_connected(sharpness_graph(1, 1)));
    CHECK(is_connected(Graph(1, {})));
    CHECK(is_connected(Graph(0, {})));
}

TEST_CASE("induced stars") {
    SUBCASE("the forbidden star itself") {
        auto w = find_induced_star(star_graph(4), 4);
        REQUIRE(w.has_value());
        CHECK(w->center == 0);
        CHECK(w->leaves == std::vector<int>{1, 2, 3, 4});
    }
    SUBCASE("five-cycle is claw-free") {
        CHECK(is_k1r_free(cycle_graph(5), 3));
        CHECK(is_k1r_free(cycle_graph(5), 4));
    }
    SUBCASE("sharpness family is K_{1,4}-free") {
        CHECK(is_k1r_free(sharpness_graph(1, 2), 4));
        CHECK(is_k1r_free(sharpness_graph(2, 1), 4));
    }
    SUBCASE("witness verifies and freeness is monotone in r") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            Graph g = random_connected_graph(4 + static_cast<int>(seed % 6), 0.45,
                                             500 + seed);
            bool prev_free = false;
            for (int r = 3; r <= 5; ++r) {
                auto w = find_induced_star(g, r);
                if (w) {
                    CHECK(static_cast<int>(w->leaves.size()) == r);
                    for (std::size_t i = 0; i < w->leaves.size(); ++i) {
                        CHECK(g.has_edge(w->center, w->leaves[i]));
                        for (std::size_t j = i + 1; j < w->leaves.size(); ++j)
                            CHECK_FALSE(g.has_edge(w->leaves[i], w->leaves[j]));
                    }
                } else {
                    CHECK(is_k1r_free(g, r));
                }
                if (prev_free) CHECK(!w.has_value());
                prev_free = !w.has_value();
            }
        }
    }
}

TEST_CASE("independence number") {
    CHECK(independence_number(cycle_graph(5)) == 2);
    CHECK(independence_number(complete_graph(4)) == 1);
    CHECK(independence_number(sharpness_graph(1, 1)) == 4);
    CHECK(independence_number(Graph(0, {})) == 0);
    CHECK(independence_number(Graph(3, {})) == 3);
}

namespace {

// Second enumeration order: descending bitmask subsets.
SigmaValue sigma_by_bitmask(const Graph& g, int p) {
    int n = g.order();
    long long best = -1;
    for (unsigned mask = (1u << n); mask-- > 0;) {
        if (__builtin_popcount(mask) != p) continue;
        std::vector<int> set;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) set.push_back(v);
        bool independent = true;
        long long sum = 0;
        for (std::size_t i = 0; i < set.size() && independent; ++i) {
            sum += g.degree(set[i]);
            for (std::size_t j = i + 1; j < set.size(); ++j)
                if (g.has_edge(set[i], set[j])) independent = false;
        }
        if (independent && (best < 0 || sum < best)) best = sum;
    }
    return best < 0 ? SigmaValue{true, 0} : SigmaValue{false, best};
}

} // namespace

TEST_CASE("sigma_p") {
    SUBCASE("five-cycle") {
        CHECK(sigma_p(cycle_graph(5), 2) == SigmaValue{false, 4});
        CHECK(sigma_p(cycle_graph(5), 3) == SigmaValue{true, 0});
    }
    SUBCASE("sharpness(1,1) hits n-k-1 at p = k+3") {
        Graph g = sharpness_graph(1, 1);
        CHECK(sigma_p(g, 4) == SigmaValue{false, 4});
    }
    SUBCASE("p = 0 rejected") {
        CHECK_THROWS_AS(sigma_p(cycle_graph(5), 0), std::invalid_argument);
    }
    SUBCASE("agrees with an independent enumeration order") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            Graph g = random_connected_graph(4 + static_cast<int>(seed % 7), 0.4,
                                             900 + seed);
            for (int p = 1; p <= 4; ++p) CHECK(sigma_p(g, p) == sigma_by_bitmask(g, p));
        }
    }
    SUBCASE("infinite exactly above the independence number") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Graph g = random_connected_graph(5, 0.5, 2000 + seed);
            int alpha = independence_number(g);
            for (int p = 1; p <= 5; ++p)
                CHECK(sigma_p(g, p).infinite == (p > alpha));
        }
    }
}

TEST_CASE("induced subgraphs") {
    SUBCASE("two adjacent vertices of K4") {
        auto sub = induced(complete_graph(4), {1, 2});
        CHECK(sub.graph.order() == 2);
        CHECK(sub.graph.edge_count() == 1);
        CHECK(sub.vertex_map == std::vector<int>{1, 2});
    }
    SUBCASE("empty set") {
        auto sub = induced(cycle_graph(5), {});
        CHECK(sub.graph.order() == 0);
        CHECK(sub.graph.edge_count() == 0);
    }
    SUBCASE("three consecutive cycle vertices form a path") {
        auto sub = induced(cycle_graph(5), {1, 2, 3});
        CHECK(sub.graph == path_graph(3));
    }
    SUBCASE("out of range vertex") {
        CHECK_THROWS_AS(induced(cycle_graph(5), {7}), std::invalid_argument);
    }
}
