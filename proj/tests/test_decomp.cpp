#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "gsearch/decomp.hpp"
#include "gsearch/solver.hpp"
#include "test_util.hpp"

using namespace gsearch;
using testutil::randomDigraph;

TEST_SUITE_BEGIN("decomp");

namespace {

Digraph bidirectedPath(std::size_t n) {
    Digraph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v) {
        g.addEdge(v, v + 1);
        g.addEdge(v + 1, v);
    }
    return g;
}

// Natural rooted path decomposition of the bidirected path: bags of adjacent
// pairs chained left to right.
Decomposition pathDecomp(std::size_t n, const char* kind) {
    Decomposition d;
    d.kind = kind;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        d.tree.names.push_back("b" + std::to_string(i));
        d.bags.push_back(VertexSet::of(n, {i, i + 1}));
        if (i > 0) d.tree.edges.push_back({i - 1, i});
    }
    d.tree.root = 0;
    return d;
}

// Depth-2 bidirected binary tree with arcs from every vertex to each strict
// ancestor.  Vertex 0 is the root; children of v are 2v+1 and 2v+2.
Digraph closureTree() {
    Digraph g(7);
    for (std::size_t v = 1; v < 7; ++v) {
        std::size_t p = (v - 1) / 2;
        g.addEdge(v, p);
        g.addEdge(p, v);
    }
    for (std::size_t v = 3; v < 7; ++v) g.addEdge(v, 0);  // leaf -> grandparent
    return g;
}

Decomposition closureTreeOriented() {
    Decomposition d;
    d.kind = "oriented";
    Digraph g = closureTree();
    for (std::size_t v = 0; v < 7; ++v) {
        d.tree.names.push_back("t" + std::to_string(v));
        VertexSet bag = VertexSet::of(7, {v});
        if (v > 0) bag.add((v - 1) / 2);
        d.bags.push_back(bag);
        if (v > 0) d.tree.edges.push_back({v, (v - 1) / 2});  // oriented upward
    }
    d.tree.root = 0;
    d.covered = coveredEdgePartition(g, d.tree, d.bags).first;
    return d;
}

// Clique-tree construction along a random order: bag(v) = {v} plus its later
// fill-in neighbours in the underlying undirected graph; parent = earliest of
// them.  A standard tree decomposition of the undirected shadow, hence every
// strongly connected set touches a connected subtree.
Decomposition undirectedCliqueTree(const Digraph& g, std::mt19937& rng) {
    std::size_t n = g.n();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t u = 0; u < n; ++u)
        g.outNeighbors(u).forEach([&](std::size_t v) { adj[u][v] = adj[v][u] = true; });
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

    Decomposition d;
    d.kind = "d";
    d.tree.names.resize(n);
    d.bags.assign(n, VertexSet(n));
    std::vector<std::size_t> parent(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t v = order[i];
        d.tree.names[v] = "c" + std::to_string(v);
        std::vector<std::size_t> later;
        for (std::size_t u = 0; u < n; ++u)
            if (adj[v][u] && pos[u] > i) later.push_back(u);
        VertexSet bag = VertexSet::of(n, {v});
        for (std::size_t u : later) bag.add(u);
        d.bags[v] = bag;
        for (std::size_t a : later)
            for (std::size_t b : later)
                if (a != b) adj[a][b] = true;
        if (!later.empty()) {
            std::size_t best = later[0];
            for (std::size_t u : later)
                if (pos[u] < pos[best]) best = u;
            parent[v] = best;
        } else if (i + 1 < n) {
            parent[v] = order[i + 1];  // keep disconnected pieces attached
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (parent[v] != n) d.tree.edges.push_back({parent[v], v});
    d.tree.root = order[n - 1];
    return d;
}

}  // namespace

TEST_CASE("chaser/guard tree: trivial instances") {
    Digraph g(1, {"a"});
    Decomposition d;
    d.kind = "shy";
    d.tree.names = {"r", "t"};
    d.tree.edges = {{0, 1}};
    d.tree.root = 0;
    d.bags = {g.emptySet(), g.allVertices()};
    d.robber = {g.allVertices(), g.allVertices()};
    auto res = validateShyDecomp(g, d);
    CHECK(res.ok);
    CHECK(d.width() == 1);

    // Root space must be everything.
    Decomposition bad = d;
    bad.robber[0] = g.emptySet();
    bad.robber[1] = g.emptySet();
    auto res2 = validateShyDecomp(g, bad);
    CHECK(!res2.ok);
}

TEST_CASE("strategy unfolding round-trips through the tree form") {
    std::mt19937 rng(311);
    int built = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 5, 0.35);
        auto num = copNumber(g, componentWeak(), g.n());
        REQUIRE(num.value.has_value());
        std::size_t k = *num.value;
        auto res = copsWin(g, componentWeak(), k);
        REQUIRE(res.copsWin);

        Decomposition d = strategyToShyDecomp(g, *res.strategy);
        auto val = validateShyDecomp(g, d);
        for (const auto& v : val.violations) MESSAGE(v);
        CHECK(val.ok);
        CHECK(d.width() <= k);

        StrategyProgram back = shyDecompToStrategy(g, d);
        Verdict verdict = verifyCopStrategy(g, componentWeak(), d.width(), back);
        CHECK(verdict.winner == Winner::Cops);
        CHECK(verdict.peakCops <= d.width());
        ++built;
    }
    CHECK(built == 50);
}

TEST_CASE("path decomposition of the bidirected path validates as d and ds") {
    Digraph g = bidirectedPath(5);
    Decomposition d = pathDecomp(5, "d");
    CHECK(validateD(g, d).ok);
    Decomposition ds = pathDecomp(5, "ds");
    CHECK(validateDS(g, ds).ok);

    // Dropping a vertex from all bags breaks the cover.
    Decomposition broken = d;
    for (auto& b : broken.bags) b.remove(0);
    CHECK(!validateD(g, broken).ok);
    Decomposition brokenDs = ds;
    for (auto& b : brokenDs.bags) b.remove(0);
    CHECK(!validateDS(g, brokenDs).ok);
}

TEST_CASE("edge subdivision turns d into ds at twice the width") {
    std::mt19937 rng(313);
    for (int trial = 0; trial < 80; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 5, 0.35);
        Decomposition d = undirectedCliqueTree(g, rng);
        auto dv = validateD(g, d);
        for (const auto& v : dv.violations) MESSAGE(v);
        REQUIRE(dv.ok);
        Decomposition ds = dToDS(g, d);
        auto dsv = validateDS(g, ds);
        for (const auto& v : dsv.violations) MESSAGE(v);
        CHECK(dsv.ok);
        CHECK(ds.width() <= 2 * d.width());
        // Any valid ds decomposition is a valid d decomposition.
        CHECK(validateD(g, ds).ok);
    }
}

TEST_CASE("ds walk wins the component game cop- and robber-monotonically") {
    std::mt19937 rng(317);
    for (int trial = 0; trial < 60; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 5, 0.35);
        Decomposition ds = dToDS(g, undirectedCliqueTree(g, rng));
        REQUIRE(validateDS(g, ds).ok);
        StrategyProgram s = dsToStrategy(g, ds);
        for (GameVariant v :
             {componentCopMono(), GameVariant{MoveRule::Component, Monotonicity::RobberMonoComp}}) {
            Verdict verdict = verifyCopStrategy(g, v, ds.width(), s);
            CHECK(verdict.winner == Winner::Cops);
            CHECK(verdict.monotoneOk);
            CHECK(verdict.peakCops <= ds.width());
        }
    }
}

TEST_CASE("upward-closure tree: oriented decomposition of width 2") {
    Digraph g = closureTree();
    Decomposition d = closureTreeOriented();
    auto res = validateOriented(g, d);
    for (const auto& v : res.violations) MESSAGE(v);
    CHECK(res.ok);
    CHECK(d.width() == 2);

    // Reversing the tree orientation strands the leaf-to-root shortcuts.
    Decomposition rev = d;
    for (auto& [s, t] : rev.tree.edges) std::swap(s, t);
    CHECK(!validateOriented(g, rev).ok);

    // Fully covered graphs need no shortcuts at all.
    Digraph path = bidirectedPath(4);
    Decomposition pd = pathDecomp(4, "oriented");
    auto [treePart, shortcutPart] = coveredEdgePartition(path, pd.tree, pd.bags);
    pd.covered = treePart;
    CHECK(shortcutPart.empty());
    CHECK(validateOriented(path, pd).ok);
}

TEST_CASE("re-rooting an oriented decomposition yields a valid ds form") {
    Digraph g = closureTree();
    Decomposition d = closureTreeOriented();
    Decomposition ds = orientedToDS(d, 0);
    auto res = validateDS(g, ds);
    for (const auto& v : res.violations) MESSAGE(v);
    CHECK(res.ok);
    CHECK(ds.width() == 2);
    // The oriented decomposition doubles as a d decomposition.
    Decomposition asD = d;
    asD.kind = "d";
    CHECK(validateD(g, asD).ok);
}

TEST_CASE("supports and order width on hand examples") {
    Digraph single(1);
    CHECK(suppOf(single, {0}, 0).empty());
    CHECK(eliminationWidth(single, {0}) == 0);
    CHECK(kellyWidthExact(single).kellyWidth() == 1);

    Digraph k4(4);
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = 0; v < 4; ++v)
            if (u != v) k4.addEdge(u, v);
    std::vector<std::size_t> id{0, 1, 2, 3};
    CHECK(suppOf(k4, id, 0).count() == 3);  // first vertex supports the whole clique
    CHECK(eliminationWidth(k4, id) == 3);
    CHECK(kellyWidthExact(k4).kellyWidth() == 4);

    Digraph chain(3);
    chain.addEdge(0, 1);
    chain.addEdge(1, 2);
    CHECK(kellyWidthExact(chain).kellyWidth() == 1);  // acyclic: some order has empty supports

    CHECK_THROWS_AS(eliminationWidth(chain, {0, 0, 2}), InputError);
}

TEST_CASE("exact order search matches permutation brute force") {
    std::mt19937 rng(331);
    for (int trial = 0; trial < 120; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 5, 0.4);
        std::vector<std::size_t> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        std::size_t best = g.n();
        do {
            best = std::min(best, eliminationWidth(g, perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        KellyResult r = kellyWidthExact(g);
        CHECK(r.width == best);
        CHECK(eliminationWidth(g, r.order) == r.width);  // witness really achieves it
    }
}

TEST_CASE("decomposition JSON round-trips") {
    Digraph g = bidirectedPath(3);
    std::vector<std::string> labels{"0", "1", "2"};
    Digraph gl(3, labels);
    gl.addEdge(0, 1);
    gl.addEdge(1, 0);
    gl.addEdge(1, 2);
    gl.addEdge(2, 1);

    Decomposition d = pathDecomp(3, "ds");
    std::string text = serializeDecomp(d, gl);
    Decomposition back = parseDecomp(text, gl);
    CHECK(back.kind == "ds");
    CHECK(back.tree.names == d.tree.names);
    CHECK(back.bags == d.bags);
    CHECK(serializeDecomp(back, gl) == text);  // canonical: stable under reparse

    CHECK_THROWS_AS(parseDecomp("{", gl), InputError);
    CHECK_THROWS_AS(parseDecomp("{\"kind\":\"nope\",\"tree\":{\"nodes\":[]},\"bags\":{}}", gl),
                    InputError);
}

TEST_SUITE_END();
