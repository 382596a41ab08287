#include "doctest.h"

#include <algorithm>
#include <map>

#include "gsearch/solver.hpp"
#include "test_util.hpp"

using namespace gsearch;
using testutil::randomDigraph;

TEST_SUITE_BEGIN("solver");

namespace {

// Fully independent oracle for the component/none game, written on raw
// bitmasks with its own reachability code.  It enumerates every (cops,
// component) position and grows the cop-win set to a fixpoint, considering
// every announcement of size at most k (no move pruning of any kind).
struct NaiveOracle {
    int n;
    std::vector<std::vector<bool>> adj;

    explicit NaiveOracle(const Digraph& g) : n(static_cast<int>(g.n())) {
        adj.assign(n, std::vector<bool>(n, false));
        for (int u = 0; u < n; ++u)
            g.outNeighbors(u).forEach([&](std::size_t v) { adj[u][static_cast<int>(v)] = true; });
    }

    std::uint32_t reach(int from, std::uint32_t removed) const {
        std::uint32_t seen = 0;
        std::vector<int> stack{from};
        if ((removed >> from) & 1) return 0;
        seen |= 1u << from;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (adj[u][v] && !((removed >> v) & 1) && !((seen >> v) & 1)) {
                    seen |= 1u << v;
                    stack.push_back(v);
                }
        }
        return seen;
    }

    std::vector<std::uint32_t> comps(std::uint32_t removed) const {
        std::vector<std::uint32_t> out;
        std::uint32_t done = removed;
        for (int v = 0; v < n; ++v) {
            if ((done >> v) & 1) continue;
            std::uint32_t fwd = reach(v, removed), comp = 0;
            for (int u = 0; u < n; ++u)
                if (((fwd >> u) & 1) && ((reach(u, removed) >> v) & 1)) comp |= 1u << u;
            out.push_back(comp);
            done |= comp;
        }
        return out;
    }

    std::vector<std::uint32_t> succs(std::uint32_t C, std::uint32_t Cnew,
                                     std::uint32_t R) const {
        std::uint32_t transit = C & Cnew;
        int r0 = __builtin_ctz(R);
        std::uint32_t fwd = reach(r0, transit), scc = 0;
        for (int u = 0; u < n; ++u)
            if (((fwd >> u) & 1) && ((reach(u, transit) >> r0) & 1)) scc |= 1u << u;
        std::vector<std::uint32_t> out;
        for (std::uint32_t comp : comps(Cnew))
            if ((comp & ~scc) == 0) out.push_back(comp);
        return out;
    }

    bool copsWin(int k) const {
        std::map<std::pair<std::uint32_t, std::uint32_t>, bool> won;
        for (std::uint32_t C = 0; C < (1u << n); ++C) {
            if (__builtin_popcount(C) > k) continue;
            for (std::uint32_t R : comps(C)) won[{C, R}] = false;
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& [pos, w] : won) {
                if (w) continue;
                for (std::uint32_t Cnew = 0; Cnew < (1u << n); ++Cnew) {
                    if (__builtin_popcount(Cnew) > k) continue;
                    bool all = true;
                    for (std::uint32_t Rnew : succs(pos.first, Cnew, pos.second))
                        if (!won.at({Cnew, Rnew})) {
                            all = false;
                            break;
                        }
                    if (all) {
                        w = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
        for (std::uint32_t R0 : comps(0))
            if (!won.at({0, R0})) return false;
        return true;
    }
};

// Robber that always flees to the largest available component.
StrategyProgram greedyRobber(const Digraph& g) {
    StrategyProgram s;
    s.role = StrategyProgram::Role::Robber;
    Digraph graph = g;
    s.step = [graph](const MemoryPtr& mem,
                     const AugmentedState& st) -> std::pair<VertexSet, MemoryPtr> {
        std::vector<VertexSet> options;
        if (st.position.robber.empty()) {
            options = graph.sccs();
        } else {
            options = robberSuccessors({MoveRule::Component, Monotonicity::None}, graph,
                                       st.position.cops, *st.position.announced,
                                       st.position.robber);
        }
        VertexSet best;
        for (const auto& o : options)
            if (best.universe() == 0 || o.count() > best.count()) best = o;
        return {best, mem};
    };
    return s;
}

}  // namespace

TEST_CASE("hand examples: cycle, clique, singleton") {
    Digraph cyc(3);
    cyc.addEdge(0, 1);
    cyc.addEdge(1, 2);
    cyc.addEdge(2, 0);
    CHECK(!copsWin(cyc, componentGame(), 1).copsWin);
    CHECK(copsWin(cyc, componentGame(), 2).copsWin);

    Digraph k3(3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            if (u != v) k3.addEdge(u, v);
    CHECK(copNumber(k3, componentGame(), 4).value == 3);

    Digraph single(1);
    for (auto v : {componentGame(), componentCopMono(), reachCopMono(), componentWeak()})
        CHECK(copsWin(single, v, 1).copsWin);
}

TEST_CASE("DAGs have cop number 1 in the component game") {
    std::mt19937 rng(211);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 2 + trial % 4;
        Digraph g(n);
        std::bernoulli_distribution arc(0.4);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (arc(rng)) g.addEdge(u, v);  // edges only forward: acyclic
        CHECK(copNumber(g, componentGame(), 2).value == 1);
    }
}

TEST_CASE("solver matches the naive minimax oracle on random graphs") {
    std::mt19937 rng(223);
    for (int trial = 0; trial < 120; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 3, 0.4);
        NaiveOracle oracle(g);
        for (int k = 1; k <= 3; ++k)
            CHECK(copsWin(g, componentGame(), static_cast<std::size_t>(k)).copsWin ==
                  oracle.copsWin(k));
    }
}

TEST_CASE("cop wins are monotone in k") {
    std::mt19937 rng(227);
    std::vector<GameVariant> variants{componentGame(), componentCopMono(), componentWeak(),
                                      reachCopMono(), componentRobberMonoReach()};
    for (int trial = 0; trial < 60; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 4, 0.35);
        const GameVariant& v = variants[trial % variants.size()];
        bool prev = false;
        for (std::size_t k = 1; k <= 4; ++k) {
            bool now = copsWin(g, v, k).copsWin;
            if (prev) CHECK(now);
            prev = now;
        }
    }
}

TEST_CASE("extracted strategies pass verification at the same k") {
    std::mt19937 rng(229);
    std::vector<GameVariant> variants{componentGame(), componentCopMono(), componentWeak(),
                                      reachCopMono()};
    for (int trial = 0; trial < 60; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 5, 0.35);
        const GameVariant& v = variants[trial % variants.size()];
        for (std::size_t k = 1; k <= g.n(); ++k) {
            auto res = copsWin(g, v, k);
            if (!res.copsWin) continue;
            Verdict verdict = verifyCopStrategy(g, v, k, *res.strategy);
            CHECK(verdict.winner == Winner::Cops);
            CHECK(verdict.monotoneOk);
            CHECK(verdict.peakCops <= k);
            break;
        }
    }
}

TEST_CASE("variant ordering on random graphs") {
    std::mt19937 rng(233);
    for (int trial = 0; trial < 40; ++trial) {
        Digraph g = randomDigraph(rng, 2 + trial % 4, 0.35);
        std::size_t kMax = g.n();
        auto num = [&](const GameVariant& v) {
            auto r = copNumber(g, v, kMax);
            REQUIRE(r.value.has_value());  // n cops always win
            return *r.value;
        };
        std::size_t base = num(componentGame());
        std::size_t weak = num(componentWeak());
        std::size_t shy = num(componentRobberMonoReach());
        std::size_t dag = num(reachCopMono());
        std::size_t cm = num(componentCopMono());
        CHECK(base <= dag);
        CHECK(base <= cm);
        CHECK(weak <= shy);
        CHECK(shy <= dag);
        CHECK(shy <= 3 * weak);
    }
}

TEST_CASE("robber on a bidirected edge beats one cop") {
    Digraph g(2);
    g.addEdge(0, 1);
    g.addEdge(1, 0);
    Verdict v = verifyRobberStrategy(g, componentGame(), 1, greedyRobber(g));
    CHECK(v.winner == Winner::Robber);
    // Full occupation always catches him.
    Verdict v2 = verifyRobberStrategy(g, componentGame(), 2, greedyRobber(g));
    CHECK(v2.winner == Winner::Cops);
}

TEST_SUITE_END();
