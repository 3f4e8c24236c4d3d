#include "assets.hh"
#include "oracles.hh"

#include "deza/errors.hh"
#include "deza/graph.hh"
#include "deza/graph6.hh"

#include <doctest.h>

using namespace deza;

TEST_CASE("small graph6 strings decode to the expected graphs")
{
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("A_").edge_count() == 1);
    CHECK(parse_graph6("Bw").edge_count() == 3);
    const Graph k4 = parse_graph6("C~");
    CHECK(k4.regular_degree() == 3);
    CHECK(is_complete(k4));
    CHECK(write_graph6(k4) == "C~");
}

TEST_CASE("header and line endings are tolerated")
{
    const Graph g = parse_graph6("IheA@GUAo");
    CHECK(parse_graph6(">>graph6<<IheA@GUAo\n") == g);
    CHECK(parse_graph6("IheA@GUAo\r\n") == g);
    CHECK(g.regular_degree() == 3);
    CHECK(g.edge_count() == 15);
}

TEST_CASE("malformed graph6 is rejected with a byte offset")
{
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
    CHECK_THROWS_AS(parse_graph6("I"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C ~"), ParseError);
    try {
        parse_graph6("Ch\x7f");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("orders above the cap are refused")
{
    CHECK_NOTHROW(write_graph6(Graph(kGraph6MaxOrder)));
    CHECK_THROWS_AS(write_graph6(Graph(kGraph6MaxOrder + 1)), PreconditionError);
    const std::string big = write_graph6(Graph(kGraph6MaxOrder));
    CHECK(big.substr(0, 1) == "~");
    CHECK(parse_graph6(big).order() == kGraph6MaxOrder);
}

TEST_CASE("graph6 round trip on random graphs")
{
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<int> order(1, 40);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const Graph g = oracle::random_graph(rng, order(rng), density(rng));
        const std::string s = write_graph6(g);
        const Graph back = parse_graph6(s);
        REQUIRE(back == g);
        REQUIRE(write_graph6(back) == s);
    }
}

TEST_CASE("edge list construction")
{
    const Edge e[] = {{0, 1}, {1, 2}, {2, 0}, {1, 0}};
    const Graph g(4, e);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(3) == 0);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    const Edge loop[] = {{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), PreconditionError);
    const Edge far[] = {{0, 3}};
    CHECK_THROWS_AS(Graph(3, far), PreconditionError);
    CHECK_THROWS_AS(Graph(0), PreconditionError);
}

TEST_CASE("common neighbours and triangles agree with matrix products")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_graph(rng, 2 + trial % 30, 0.4);
        const auto a2 = oracle::square(oracle::adjacency(g));
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                REQUIRE(common_neighbours(g, u, v) == a2[u][v]);
        CHECK(structural_profile(g).triangle_count == static_cast<std::uint64_t>(oracle::triangles(g)));
    }
}

TEST_CASE("distances agree with breadth-first search")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_graph(rng, 3 + trial, 0.15);
        const auto dd = distance_data(g);
        bool connected = true;
        for (int u = 0; u < g.order(); ++u) {
            const auto ref = oracle::bfs(g, u);
            for (int v = 0; v < g.order(); ++v) {
                REQUIRE(dd.raw(u, v) == ref[v]);
                connected = connected && ref[v] >= 0;
            }
        }
        CHECK(dd.connected() == connected);
    }
}

TEST_CASE("structural profile of named graphs")
{
    const auto p = structural_profile(deza::heawood());
    CHECK(p.regular_degree == 3);
    CHECK(p.bipartite);
    CHECK(p.connected);
    CHECK(p.triangle_count == 0);

    const auto q = structural_profile(deza::disjoint_cliques(3, 4));
    CHECK(q.component_count == 3);
    CHECK_FALSE(q.connected);
    CHECK(q.triangle_count == 12);
}

TEST_CASE("line graph, complement and distance graphs")
{
    const Graph octa_lg = assets::octahedron_line_graph();
    CHECK(octa_lg.order() == 12);
    CHECK(octa_lg.regular_degree() == 6);

    const Graph p = deza::petersen();
    const Graph pc = complement(p);
    CHECK(pc.regular_degree() == 6);
    CHECK(distance_i_graph(p, 2) == pc);
    CHECK_THROWS_AS(distance_i_graph(p, 3), PreconditionError);
    CHECK_THROWS_AS(line_graph(Graph(3)), PreconditionError);
}

TEST_CASE("halved graphs of the cube are two copies of K4")
{
    const auto [h1, h2] = halved_graphs(deza::hamming(3, 2));
    CHECK(h1.order() == 4);
    CHECK(is_complete(h1));
    CHECK(is_complete(h2));
    CHECK_THROWS_AS(halved_graphs(deza::petersen()), PreconditionError);
}

TEST_CASE("components and bipartition")
{
    const Graph g = disjoint_union(deza::cycle_graph(4), deza::cycle_graph(3));
    CHECK(component_labels(g) == std::vector<int>{0, 0, 0, 0, 1, 1, 1});
    CHECK_FALSE(bipartition(g).has_value());
    const auto col = bipartition(deza::cycle_graph(6));
    REQUIRE(col);
    CHECK(*col == std::vector<int>{0, 1, 0, 1, 0, 1});
    const Vertex keep[] = {0, 1, 2};
    CHECK(is_complete(induced_subgraph(deza::complete_graph(5), keep)));
}
