#include "doctest.h"

#include "gsearch/digraph.hpp"
#include "test_util.hpp"

using namespace gsearch;
using testutil::randomDigraph;

TEST_SUITE_BEGIN("digraph");

TEST_CASE("parse accepts singletons and bidirected pairs") {
    Digraph g1 = parseGraph(R"({"vertices":["a"],"edges":[]})");
    CHECK(g1.n() == 1);
    CHECK(g1.edgeCount() == 0);

    Digraph g2 = parseGraph(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})");
    CHECK(g2.n() == 2);
    CHECK(g2.hasEdge(g2.vertexByLabel("a"), g2.vertexByLabel("b")));
    CHECK(g2.hasEdge(g2.vertexByLabel("b"), g2.vertexByLabel("a")));
}

TEST_CASE("parse rejects loops, duplicates and unknown vertices") {
    CHECK_THROWS_AS(parseGraph(R"({"vertices":["a"],"edges":[["a","a"]]})"), InputError);
    CHECK_THROWS_AS(parseGraph(R"({"vertices":["a","b"],"edges":[["a","b"],["a","b"]]})"),
                    InputError);
    CHECK_THROWS_AS(parseGraph(R"({"vertices":["a"],"edges":[["a","b"]]})"), InputError);
    CHECK_THROWS_AS(parseGraph("not json"), InputError);
}

TEST_CASE("serialize/parse round-trip is the identity") {
    Digraph cyc = parseGraph(R"({"vertices":["x","y","z"],"edges":[["x","y"],["y","z"],["z","x"]]})");
    CHECK(parseGraph(serializeGraph(cyc)) == cyc);
    // Canonical form is stable: serializing twice gives identical bytes.
    CHECK(serializeGraph(parseGraph(serializeGraph(cyc))) == serializeGraph(cyc));
}

TEST_CASE("reachFrom on path, empty set and diamond") {
    Digraph path(3);
    path.addEdge(0, 1);
    path.addEdge(1, 2);
    CHECK(path.reachFrom(VertexSet::of(3, {0})) == VertexSet::of(3, {0, 1, 2}));
    CHECK(path.reachFrom(VertexSet(3)) == VertexSet(3));

    Digraph dia(4);  // a=0 -> b=1, a -> c=2, b -> d=3, c -> d
    dia.addEdge(0, 1);
    dia.addEdge(0, 2);
    dia.addEdge(1, 3);
    dia.addEdge(2, 3);
    CHECK(dia.reachFrom(VertexSet::of(4, {1})) == VertexSet::of(4, {1, 3}));
}

TEST_CASE("sccs: cycle, DAG, two 2-cycles joined by an arc") {
    Digraph cyc(3);
    cyc.addEdge(0, 1);
    cyc.addEdge(1, 2);
    cyc.addEdge(2, 0);
    auto comps = cyc.sccs();
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].count() == 3);

    Digraph dag(4);
    dag.addEdge(0, 1);
    dag.addEdge(1, 2);
    dag.addEdge(2, 3);
    CHECK(dag.sccs().size() == 4);

    Digraph two(4);
    two.addEdge(0, 1);
    two.addEdge(1, 0);
    two.addEdge(2, 3);
    two.addEdge(3, 2);
    two.addEdge(1, 2);
    auto cc = two.sccs();
    REQUIRE(cc.size() == 2);
    CHECK(cc[0] == VertexSet::of(4, {0, 1}));
    CHECK(cc[1] == VertexSet::of(4, {2, 3}));
}

TEST_CASE("induced subgraphs") {
    Digraph cyc(3);
    cyc.addEdge(0, 1);
    cyc.addEdge(1, 2);
    cyc.addEdge(2, 0);
    CHECK(cyc.induced(cyc.allVertices()) == cyc);
    CHECK(cyc.induced(cyc.emptySet()).n() == 0);
    Digraph sub = cyc.induced(VertexSet::of(3, {0, 1}));
    CHECK(sub.n() == 2);
    CHECK(sub.edgeCount() == 1);
}

TEST_CASE("random properties: scc partition, reach monotone and idempotent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Digraph g = randomDigraph(rng, 1 + trial % 8, 0.3);
        auto comps = g.sccs();
        VertexSet seen(g.n());
        for (const auto& c : comps) {
            CHECK(!c.intersects(seen));
            seen |= c;
            // Mutual reachability inside a component.
            c.forEach([&](std::size_t u) {
                CHECK(c.subsetOf(g.reachFrom(VertexSet::of(g.n(), {u}))));
            });
        }
        CHECK(seen == g.allVertices());

        VertexSet X = testutil::randomSubset(rng, g.n(), 0.3);
        VertexSet Y = X | testutil::randomSubset(rng, g.n(), 0.3);
        CHECK(g.reachFrom(X).subsetOf(g.reachFrom(Y)));
        CHECK(g.reachFrom(g.reachFrom(X)) == g.reachFrom(X));
    }
}

TEST_CASE("sccOf agrees with the partition") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 7, 0.35);
        VertexSet removed = testutil::randomSubset(rng, g.n(), 0.25);
        auto comps = g.sccsAvoiding(removed);
        for (const auto& c : comps)
            c.forEach([&](std::size_t v) { CHECK(g.sccOf(v, removed) == c); });
    }
}

TEST_CASE("dot export mentions every edge") {
    Digraph g(2);
    g.addEdge(0, 1);
    std::string dot = toDot(g);
    CHECK(dot.find("\"0\" -> \"1\"") != std::string::npos);
}

TEST_SUITE_END();
