#include "gsearch/blocking.hpp"

#include <limits>
#include <queue>
#include <vector>

namespace gsearch {

bool interceptsAllPaths(const Digraph& g, const VertexSet& X, const VertexSet& R,
                        const VertexSet& M) {
    // An unintercepted path exists iff R \ X reaches M while avoiding X.
    return !g.reachAvoiding(R, X).intersects(M);
}

bool blocks(const Digraph& g, const VertexSet& X, const VertexSet& R, const VertexSet& M) {
    if (X.intersects(R)) return false;
    return interceptsAllPaths(g, X, R, M);
}

VertexSet front(const Digraph& g, const VertexSet& R, const VertexSet& X) {
    if (R.intersects(X)) throw InputError("front: R and X overlap");
    VertexSet S = g.reachAvoiding(R, X);
    VertexSet f(g.n());
    X.forEach([&](std::size_t x) {
        if (g.inNeighbors(x).intersects(S)) f.add(x);
    });
    return f;
}

namespace {

// Unit-capacity vertex-split max-flow network for blockers of R -> M.
// Vertex v becomes v_in = 2v and v_out = 2v+1 joined by a capacity-1 edge
// (infinite for v ∈ R, which may never be cut); graph edges and the
// source/sink hookups get infinite capacity.  Flow is injected at r_out for
// r ∈ R and drained at m_out for m ∈ M, so a blocker may sit on M itself.
struct FlowNet {
    static constexpr int INF = std::numeric_limits<int>::max() / 4;

    struct Edge {
        int to, cap;
        std::size_t rev;
    };

    std::vector<std::vector<Edge>> adj;
    int S, T;

    FlowNet(const Digraph& g, const VertexSet& R, const VertexSet& M) {
        int n = static_cast<int>(g.n());
        S = 2 * n;
        T = 2 * n + 1;
        adj.resize(2 * n + 2);
        for (int v = 0; v < n; ++v)
            addEdge(2 * v, 2 * v + 1, R.contains(static_cast<std::size_t>(v)) ? INF : 1);
        for (std::size_t u = 0; u < g.n(); ++u)
            g.outNeighbors(u).forEach(
                [&](std::size_t v) { addEdge(2 * static_cast<int>(u) + 1, 2 * static_cast<int>(v), INF); });
        R.forEach([&](std::size_t r) { addEdge(S, 2 * static_cast<int>(r) + 1, INF); });
        M.forEach([&](std::size_t m) { addEdge(2 * static_cast<int>(m) + 1, T, INF); });
    }

    void addEdge(int a, int b, int cap) {
        adj[a].push_back({b, cap, adj[b].size()});
        adj[b].push_back({a, 0, adj[a].size() - 1});
    }

    int maxflow() {
        int total = 0;
        while (true) {
            // BFS for a shortest augmenting path.
            std::vector<std::pair<int, std::size_t>> parent(adj.size(), {-1, 0});
            std::queue<int> q;
            q.push(S);
            parent[S] = {S, 0};
            while (!q.empty() && parent[T].first < 0) {
                int a = q.front();
                q.pop();
                for (std::size_t i = 0; i < adj[a].size(); ++i) {
                    const Edge& e = adj[a][i];
                    if (e.cap > 0 && parent[e.to].first < 0) {
                        parent[e.to] = {a, i};
                        q.push(e.to);
                    }
                }
            }
            if (parent[T].first < 0) return total;
            int aug = INF;
            for (int v = T; v != S;) {
                auto [p, i] = parent[v];
                aug = std::min(aug, adj[p][i].cap);
                v = p;
            }
            for (int v = T; v != S;) {
                auto [p, i] = parent[v];
                adj[p][i].cap -= aug;
                adj[adj[p][i].to][adj[p][i].rev].cap += aug;
                v = p;
            }
            total += aug;
        }
    }

    // Nodes that can still reach T in the residual network.
    std::vector<bool> sinkSide() const {
        std::vector<bool> reachT(adj.size(), false);
        reachT[T] = true;
        std::queue<int> q;
        q.push(T);
        // (a -> b) is residual iff adj[a][i].cap > 0; walk it backwards from T
        // via the reverse bookkeeping: for node b, any edge (b -> a) whose
        // reverse (a -> b) has cap > 0 means a can reach T through b.
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            for (const Edge& back : adj[b]) {
                int a = back.to;
                if (!reachT[a] && adj[a][back.rev].cap > 0) {
                    reachT[a] = true;
                    q.push(a);
                }
            }
        }
        return reachT;
    }
};

}  // namespace

std::size_t minVertexCutSize(const Digraph& g, const VertexSet& R, const VertexSet& M) {
    if (R.intersects(M)) throw InputError("minVertexCutSize: no finite blocker, R meets M");
    FlowNet net(g, R, M);
    int f = net.maxflow();
    if (f >= FlowNet::INF / 2) throw InputError("minVertexCutSize: no finite blocker");
    return static_cast<std::size_t>(f);
}

bool precedes(const Digraph& g, const VertexSet& R, const VertexSet& M, const VertexSet& A,
              const VertexSet& B) {
    if (!blocks(g, A, R, M) || !blocks(g, B, R, M))
        throw InputError("precedes: arguments must both block R -> M");
    if (A.count() != B.count()) return A.count() < B.count();
    // Second clause: A blocks B -> M in the path sense (A may overlap B; the
    // preorder must be reflexive and compare overlapping minimum blockers).
    return interceptsAllPaths(g, A, B, M);
}

VertexSet mb(const Digraph& g, const VertexSet& R, const VertexSet& M) {
    if (R.intersects(M)) throw InputError("mb: no finite blocker, R meets M");
    FlowNet net(g, R, M);
    int f = net.maxflow();
    if (f >= FlowNet::INF / 2) throw InputError("mb: no finite blocker");
    // The cut closest to M: vertices whose split edge crosses from the
    // cannot-reach-T side to the can-reach-T side.
    std::vector<bool> reachT = net.sinkSide();
    VertexSet cut(g.n());
    for (std::size_t v = 0; v < g.n(); ++v)
        if (!reachT[2 * v] && reachT[2 * v + 1]) cut.add(v);
    return cut;
}

}  // namespace gsearch
