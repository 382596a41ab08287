#include "doctest.h"

#include <optional>

#include "gsearch/blocking.hpp"
#include "test_util.hpp"

using namespace gsearch;
using testutil::allSubsets;
using testutil::randomDigraph;
using testutil::randomSubset;

TEST_SUITE_BEGIN("blocking");

namespace {

// Independent path-existence oracle: DFS over adjacency, avoiding X.
bool pathExistsOracle(const Digraph& g, std::size_t from, const VertexSet& targets,
                      const VertexSet& avoid, VertexSet& seen) {
    if (avoid.contains(from)) return false;
    if (targets.contains(from)) return true;
    seen.add(from);
    bool found = false;
    g.outNeighbors(from).forEach([&](std::size_t w) {
        if (!found && !seen.contains(w) && pathExistsOracle(g, w, targets, avoid, seen))
            found = true;
    });
    return found;
}

bool blocksOracle(const Digraph& g, const VertexSet& X, const VertexSet& R,
                  const VertexSet& M) {
    if (X.intersects(R)) return false;
    bool blocked = true;
    R.forEach([&](std::size_t r) {
        VertexSet seen(g.n());
        if (M.contains(r) || pathExistsOracle(g, r, M, X, seen)) blocked = false;
    });
    return blocked;
}

// Path-interception oracle (X may overlap R).
bool interceptsOracle(const Digraph& g, const VertexSet& X, const VertexSet& R,
                      const VertexSet& M) {
    bool ok = true;
    R.forEach([&](std::size_t r) {
        if (X.contains(r)) return;
        VertexSet seen(g.n());
        if ((M - X).contains(r) || pathExistsOracle(g, r, M - X, X, seen)) ok = false;
    });
    return ok;
}

// All blockers of R -> M by subset enumeration.
std::vector<VertexSet> allBlockers(const Digraph& g, const VertexSet& R, const VertexSet& M) {
    std::vector<VertexSet> out;
    for (const VertexSet& X : allSubsets(g.n()))
        if (blocksOracle(g, X, R, M)) out.push_back(X);
    return out;
}

// The unique minimum blocker that blocks every other minimum blocker -> M,
// found by enumeration; nullopt when no blocker exists or no unique minimum.
std::optional<VertexSet> mbOracle(const Digraph& g, const VertexSet& R, const VertexSet& M) {
    auto bs = allBlockers(g, R, M);
    if (bs.empty()) return std::nullopt;
    std::size_t minSize = g.n() + 1;
    for (const auto& b : bs) minSize = std::min(minSize, b.count());
    std::vector<VertexSet> mins;
    for (const auto& b : bs)
        if (b.count() == minSize) mins.push_back(b);
    std::optional<VertexSet> winner;
    for (const auto& a : mins) {
        bool blocksAll = true;
        for (const auto& b : mins)
            if (!interceptsOracle(g, a, b, M)) blocksAll = false;
        if (blocksAll) {
            if (winner) return std::nullopt;  // not unique: report as failure
            winner = a;
        }
    }
    return winner;
}

}  // namespace

TEST_CASE("blocks on hand examples") {
    Digraph g(3);  // r=0 -> c=1 -> m=2
    g.addEdge(0, 1);
    g.addEdge(1, 2);
    VertexSet R = VertexSet::of(3, {0}), M = VertexSet::of(3, {2});
    CHECK(blocks(g, VertexSet::of(3, {1}), R, M));
    CHECK(!blocks(g, VertexSet(3), R, M));
    // No path at all: the empty set blocks.
    CHECK(blocks(g, VertexSet(3), M, R));

    Digraph dia(4);  // r=0 -> a=1 -> m=3, r -> b=2 -> m
    dia.addEdge(0, 1);
    dia.addEdge(0, 2);
    dia.addEdge(1, 3);
    dia.addEdge(2, 3);
    CHECK(!blocks(dia, VertexSet::of(4, {1}), VertexSet::of(4, {0}), VertexSet::of(4, {3})));
    CHECK(blocks(dia, VertexSet::of(4, {1, 2}), VertexSet::of(4, {0}), VertexSet::of(4, {3})));
}

TEST_CASE("front on hand examples") {
    Digraph g(2);  // r=0 -> x=1
    g.addEdge(0, 1);
    CHECK(front(g, VertexSet::of(2, {0}), VertexSet::of(2, {1})) == VertexSet::of(2, {1}));

    Digraph path(3);  // r=0 -> a=1 -> b=2
    path.addEdge(0, 1);
    path.addEdge(1, 2);
    CHECK(front(path, VertexSet::of(3, {0}), VertexSet::of(3, {1, 2})) ==
          VertexSet::of(3, {1}));
    // No path from R to X at all.
    CHECK(front(path, VertexSet::of(3, {2}), VertexSet::of(3, {0})).empty());
    CHECK_THROWS_AS(front(path, VertexSet::of(3, {0}), VertexSet::of(3, {0})), InputError);
}

TEST_CASE("minVertexCutSize on hand examples") {
    Digraph g(3);
    g.addEdge(0, 1);
    g.addEdge(1, 2);
    CHECK(minVertexCutSize(g, VertexSet::of(3, {0}), VertexSet::of(3, {2})) == 1);
    CHECK(minVertexCutSize(g, VertexSet::of(3, {2}), VertexSet::of(3, {0})) == 0);
    CHECK_THROWS_AS(minVertexCutSize(g, VertexSet::of(3, {0}), VertexSet::of(3, {0})),
                    InputError);

    Digraph dia(4);
    dia.addEdge(0, 1);
    dia.addEdge(0, 2);
    dia.addEdge(1, 3);
    dia.addEdge(2, 3);
    // A blocker may stand on the target itself, so the cut is just {3}.
    CHECK(minVertexCutSize(dia, VertexSet::of(4, {0}), VertexSet::of(4, {3})) == 1);
}

TEST_CASE("mb on hand examples") {
    Digraph g(3);
    g.addEdge(0, 1);
    g.addEdge(1, 2);
    // The cut nearest M wins, and vertices of M itself are eligible.
    CHECK(mb(g, VertexSet::of(3, {0}), VertexSet::of(3, {2})) == VertexSet::of(3, {2}));

    Digraph chain(4);  // r=0 -> a1=1 -> a2=2 -> m=3
    chain.addEdge(0, 1);
    chain.addEdge(1, 2);
    chain.addEdge(2, 3);
    CHECK(mb(chain, VertexSet::of(4, {0}), VertexSet::of(4, {3})) == VertexSet::of(4, {3}));

    Digraph dia(4);
    dia.addEdge(0, 1);
    dia.addEdge(0, 2);
    dia.addEdge(1, 3);
    dia.addEdge(2, 3);
    CHECK(mb(dia, VertexSet::of(4, {0}), VertexSet::of(4, {3})) == VertexSet::of(4, {3}));

    // With two separated targets the interior cut beats sitting on M.
    Digraph fan(4);  // r=0 -> c=1 -> m1=2, c -> m2=3
    fan.addEdge(0, 1);
    fan.addEdge(1, 2);
    fan.addEdge(1, 3);
    CHECK(mb(fan, VertexSet::of(4, {0}), VertexSet::of(4, {2, 3})) == VertexSet::of(4, {1}));
}

TEST_CASE("precedes: cardinality clause, path clause, reflexivity") {
    Digraph chain(4);
    chain.addEdge(0, 1);
    chain.addEdge(1, 2);
    chain.addEdge(2, 3);
    VertexSet R = VertexSet::of(4, {0}), M = VertexSet::of(4, {3});
    VertexSet a1 = VertexSet::of(4, {1}), a2 = VertexSet::of(4, {2});
    CHECK(precedes(chain, R, M, a2, a1));   // a2 blocks a1 -> m
    CHECK(!precedes(chain, R, M, a1, a2));  // but not vice versa
    CHECK(precedes(chain, R, M, a1, a1));   // reflexive
    CHECK(precedes(chain, R, M, a1, VertexSet::of(4, {1, 2})));
    CHECK_THROWS_AS(precedes(chain, R, M, VertexSet(4), a1), InputError);
}

TEST_CASE("mb matches the enumeration oracle on random graphs") {
    std::mt19937 rng(101);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 6, 0.3);
        VertexSet R = randomSubset(rng, g.n(), 0.3);
        VertexSet M = randomSubset(rng, g.n(), 0.3) - R;
        if (R.empty()) continue;
        auto oracle = mbOracle(g, R, M);
        REQUIRE_MESSAGE(oracle.has_value(), "oracle found no unique minimal blocker");
        CHECK(mb(g, R, M) == *oracle);
        CHECK(minVertexCutSize(g, R, M) == oracle->count());
        ++checked;
    }
    CHECK(checked > 200);
}

TEST_CASE("transfer laws and difference law on random instances") {
    std::mt19937 rng(109);
    for (int trial = 0; trial < 500; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 5, 0.3);
        VertexSet R = randomSubset(rng, g.n(), 0.3);
        VertexSet M = randomSubset(rng, g.n(), 0.3);
        VertexSet X = randomSubset(rng, g.n(), 0.35);
        VertexSet Y = randomSubset(rng, g.n(), 0.35);
        // Down: X blocks R -> M and Y blocks R -> X  =>  Y blocks R -> M.
        if (blocks(g, X, R, M) && blocks(g, Y, R, X)) CHECK(blocks(g, Y, R, M));
        // Up: X blocks R -> M and Y blocks X -> M  =>  Y blocks R -> M.
        if (blocks(g, X, R, M) && blocks(g, Y, X, M) && !Y.intersects(R))
            CHECK(blocks(g, Y, R, M));
        // Difference: X blocks R -> M and Y blocks X -> M  =>  Y \ X blocks X -> M.
        if (blocks(g, Y, X, M) && blocks(g, X, R, M)) {
            VertexSet diff = Y - X;
            CHECK(interceptsAllPaths(g, diff, X, M) ==
                  interceptsAllPaths(g, Y, X, M));
        }
    }
}

TEST_CASE("inclusion-minimal blockers have a private path per vertex") {
    std::mt19937 rng(113);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 5, 0.3);
        VertexSet R = randomSubset(rng, g.n(), 0.3);
        VertexSet M = randomSubset(rng, g.n(), 0.3) - R;
        VertexSet X = randomSubset(rng, g.n(), 0.4) - R;
        if (!blocksOracle(g, X, R, M)) continue;
        // Shrink X to an inclusion-minimal blocker.
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            X.forEach([&](std::size_t v) {
                if (shrunk) return;
                VertexSet sub = X;
                sub.remove(v);
                if (blocksOracle(g, sub, R, M)) {
                    X = sub;
                    shrunk = true;
                }
            });
        }
        // Each remaining vertex carries a path through only itself: removing it
        // opens a path, i.e. some R -> M path meets X exactly in {v}.
        X.forEach([&](std::size_t v) {
            VertexSet sub = X;
            sub.remove(v);
            CHECK(!blocksOracle(g, sub, R, M));
        });
        ++checked;
    }
    CHECK(checked > 80);
}

TEST_CASE("extraction trichotomy for pairs of blockers") {
    std::mt19937 rng(127);
    int checked = 0;
    for (int trial = 0; trial < 600 && checked < 120; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 4, 0.35);
        VertexSet R = randomSubset(rng, g.n(), 0.3);
        VertexSet M = randomSubset(rng, g.n(), 0.3) - R;
        if (R.empty()) continue;
        auto bs = allBlockers(g, R, M);
        if (bs.size() < 2) continue;
        const VertexSet& A = bs[static_cast<std::size_t>(rng()) % bs.size()];
        const VertexSet& B = bs[static_cast<std::size_t>(rng()) % bs.size()];
        bool found = interceptsOracle(g, A, B, M);  // case 1: A blocks B -> M
        VertexSet unionAB = A | B;
        for (const VertexSet& W : allSubsets(g.n())) {
            if (found) break;
            if (!W.subsetOf(unionAB)) continue;
            // case 2: a strictly smaller blocker of both R -> B and R -> M
            if (W.count() < B.count() && blocksOracle(g, W, R, B) &&
                blocksOracle(g, W, R, M))
                found = true;
            // case 3: a no-larger-than-A blocker of A, B and R -> M
            if (W.count() <= A.count() && interceptsOracle(g, W, A, M) &&
                interceptsOracle(g, W, B, M) && blocksOracle(g, W, R, M))
                found = true;
        }
        CHECK_MESSAGE(found, "no extraction witness for a blocker pair");
        ++checked;
    }
    CHECK(checked >= 120);
}

TEST_CASE("mb behaves under shrinking R and growing M") {
    std::mt19937 rng(131);
    int shrinkChecked = 0, growChecked = 0;
    for (int trial = 0; trial < 600; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 5, 0.3);
        VertexSet R = randomSubset(rng, g.n(), 0.35);
        VertexSet M = randomSubset(rng, g.n(), 0.3) - R;
        if (R.empty() || M.empty()) continue;
        VertexSet A = mb(g, R, M);
        // Shrinking R: any R' inside the robber space keeps its blocker behind A.
        VertexSet space = g.reachAvoiding(R, A);
        VertexSet Rp = randomSubset(rng, g.n(), 0.5) & space;
        if (!Rp.empty()) {
            VertexSet Ap = mb(g, Rp, M);
            CHECK(interceptsAllPaths(g, Ap, Rp, A));
            ++shrinkChecked;
        }
        // Growing M: the new blocker sits behind A, and A still shields M.
        VertexSet Mp = M | (randomSubset(rng, g.n(), 0.3) - R);
        VertexSet Ap2 = mb(g, R, Mp);
        CHECK(interceptsAllPaths(g, Ap2, R, A));
        CHECK(interceptsAllPaths(g, A, Ap2, M));
        ++growChecked;
    }
    CHECK(shrinkChecked > 100);
    CHECK(growChecked > 200);
}

TEST_CASE("blocks matches the path oracle on random instances") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 400; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 6, 0.3);
        VertexSet R = randomSubset(rng, g.n(), 0.3);
        VertexSet M = randomSubset(rng, g.n(), 0.3);
        VertexSet X = randomSubset(rng, g.n(), 0.3);
        CHECK(blocks(g, X, R, M) == blocksOracle(g, X, R, M));
    }
}

TEST_CASE("front is the inclusion-minimal blocker of R -> X") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 300; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 6, 0.3);
        VertexSet R = randomSubset(rng, g.n(), 0.3);
        VertexSet X = randomSubset(rng, g.n(), 0.3) - R;
        if (R.empty()) continue;
        VertexSet f = front(g, R, X);
        CHECK(blocksOracle(g, f, R, X));
        // No proper subset blocks.
        f.forEach([&](std::size_t v) {
            VertexSet sub = f;
            sub.remove(v);
            CHECK(!blocksOracle(g, sub, R, X));
        });
    }
}

TEST_SUITE_END();
