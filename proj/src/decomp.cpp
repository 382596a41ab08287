#include "gsearch/decomp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>

#include <nlohmann/json.hpp>

#include "gsearch/solver.hpp"

namespace gsearch {

using nlohmann::json;

std::vector<std::vector<std::size_t>> DecompTree::childrenOf() const {
    std::vector<std::vector<std::size_t>> ch(n());
    for (auto [s, t] : edges) ch[s].push_back(t);
    return ch;
}

std::vector<std::vector<std::size_t>> DecompTree::undirectedAdj() const {
    std::vector<std::vector<std::size_t>> adj(n());
    for (auto [s, t] : edges) {
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    return adj;
}

void DecompTree::requireTree() const {
    if (n() == 0) throw InputError("decomposition tree has no nodes");
    if (edges.size() + 1 != n())
        throw InputError("decomposition tree must have exactly n-1 edges");
    for (auto [s, t] : edges)
        if (s >= n() || t >= n()) throw InputError("tree edge endpoint out of range");
    // Connectivity of the undirected skeleton.
    auto adj = undirectedAdj();
    std::vector<bool> seen(n(), false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t cnt = 1;
    while (!q.empty()) {
        std::size_t a = q.front();
        q.pop();
        for (std::size_t b : adj[a])
            if (!seen[b]) {
                seen[b] = true;
                ++cnt;
                q.push(b);
            }
    }
    if (cnt != n()) throw InputError("decomposition tree is not connected");
}

std::size_t Decomposition::width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.count());
    return w;
}

namespace {

// Requires edges oriented away from the root: every non-root node has exactly
// one incoming tree edge, the root none.
void requireRooted(const DecompTree& t, ValidationResult& res) {
    std::vector<std::size_t> indeg(t.n(), 0);
    for (auto [s, c] : t.edges) {
        (void)s;
        ++indeg[c];
    }
    if (t.root >= t.n()) throw InputError("root out of range");
    if (indeg[t.root] != 0) {
        res.ok = false;
        res.violations.push_back("root has an incoming tree edge");
    }
    for (std::size_t v = 0; v < t.n(); ++v)
        if (v != t.root && indeg[v] != 1) {
            res.ok = false;
            res.violations.push_back("node " + t.names[v] +
                                     " is not reached by exactly one edge from the root");
        }
}

bool touchedConnected(const DecompTree& t, const std::vector<bool>& touched) {
    auto adj = t.undirectedAdj();
    std::size_t start = t.n(), want = 0;
    for (std::size_t v = 0; v < t.n(); ++v)
        if (touched[v]) {
            if (start == t.n()) start = v;
            ++want;
        }
    if (want <= 1) return true;
    std::vector<bool> seen(t.n(), false);
    std::queue<std::size_t> q;
    q.push(start);
    seen[start] = true;
    std::size_t got = 1;
    while (!q.empty()) {
        std::size_t a = q.front();
        q.pop();
        for (std::size_t b : adj[a])
            if (touched[b] && !seen[b]) {
                seen[b] = true;
                ++got;
                q.push(b);
            }
    }
    return got == want;
}

std::vector<VertexSet> subtreeUnions(const DecompTree& t, const std::vector<VertexSet>& bags,
                                     std::size_t universe) {
    auto ch = t.childrenOf();
    std::vector<VertexSet> acc(t.n(), VertexSet(universe));
    // Iterative post-order from the root.
    std::vector<std::pair<std::size_t, bool>> stack{{t.root, false}};
    while (!stack.empty()) {
        auto [v, done] = stack.back();
        stack.pop_back();
        if (done) {
            acc[v] = bags[v];
            for (std::size_t c : ch[v]) acc[v] = acc[v] | acc[c];
        } else {
            stack.push_back({v, true});
            for (std::size_t c : ch[v]) stack.push_back({c, false});
        }
    }
    return acc;
}

}  // namespace

ValidationResult validateShyDecomp(const Digraph& g, const Decomposition& d) {
    ValidationResult res;
    if (d.kind != "shy") throw InputError("validateShyDecomp expects kind \"shy\"");
    d.tree.requireTree();
    requireRooted(d.tree, res);
    if (d.bags.size() != d.tree.n() || d.robber.size() != d.tree.n())
        throw InputError("shy decomposition needs one cop set and one space per node");
    if (!res.ok) return res;

    const std::size_t n = d.tree.n();
    auto ch = d.tree.childrenOf();
    std::vector<VertexSet> chasers(n, g.emptySet()), above(n, g.emptySet());
    for (std::size_t t = 0; t < n; ++t) chasers[t] = d.bags[t] & d.robber[t];

    if (!(d.robber[d.tree.root] == g.allVertices())) {
        res.ok = false;
        res.violations.push_back("condition 1: root space is not the whole vertex set");
    }

    // Accumulate the chasers along root paths (above[t] includes t itself).
    std::vector<std::size_t> order{d.tree.root};
    above[d.tree.root] = chasers[d.tree.root];
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t c : ch[order[i]]) {
            above[c] = above[order[i]] | chasers[c];
            order.push_back(c);
        }

    for (std::size_t t = 0; t < n; ++t) {
        VertexSet space = d.robber[t] - chasers[t];
        auto comps = g.sccsAvoiding(g.allVertices() - space);
        VertexSet childUnion = g.emptySet();
        for (std::size_t c : ch[t]) {
            if (std::find(comps.begin(), comps.end(), d.robber[c]) == comps.end()) {
                res.ok = false;
                res.violations.push_back(
                    "condition 2: space of node " + d.tree.names[c] +
                    " is not a strong component of the parent space minus its chasers");
            }
            childUnion = childUnion | d.robber[c];
            VertexSet kept = d.bags[t] & d.bags[c];
            if (above[t].intersects(g.reachAvoiding(d.robber[c], kept))) {
                res.ok = false;
                res.violations.push_back("condition 4: space of node " + d.tree.names[c] +
                                         " reaches an ancestor chaser of node " +
                                         d.tree.names[t] + " avoiding the kept cops");
            }
        }
        if (!((chasers[t] | childUnion) == d.robber[t])) {
            res.ok = false;
            res.violations.push_back("condition 3: chasers and child spaces of node " +
                                     d.tree.names[t] + " do not cover its space");
        }
    }
    return res;
}

ValidationResult validateD(const Digraph& g, const Decomposition& d) {
    ValidationResult res;
    d.tree.requireTree();
    if (d.bags.size() != d.tree.n()) throw InputError("one bag per tree node required");
    if (g.n() > 10)
        throw InputError("direct validation enumerates vertex subsets; capped at 10 vertices");

    VertexSet cover = g.emptySet();
    for (const auto& b : d.bags) cover = cover | b;
    if (!(cover == g.allVertices())) {
        res.ok = false;
        res.violations.push_back("cover: some vertex appears in no bag");
    }

    for (std::uint32_t mask = 1; mask < (1u << g.n()); ++mask) {
        VertexSet S(g.n());
        for (std::size_t v = 0; v < g.n(); ++v)
            if ((mask >> v) & 1) S.add(v);
        if (!(g.sccOf(S.first(), g.allVertices() - S) == S)) continue;  // not strongly connected
        std::vector<bool> touched(d.tree.n(), false);
        for (std::size_t t = 0; t < d.tree.n(); ++t) touched[t] = d.bags[t].intersects(S);
        if (!touchedConnected(d.tree, touched)) {
            res.ok = false;
            res.violations.push_back("strongly connected set " + S.str() +
                                     " touches a disconnected part of the tree");
        }
    }
    return res;
}

ValidationResult validateDS(const Digraph& g, const Decomposition& d) {
    ValidationResult res;
    d.tree.requireTree();
    requireRooted(d.tree, res);
    if (d.bags.size() != d.tree.n()) throw InputError("one bag per tree node required");
    if (!res.ok) return res;

    VertexSet cover = g.emptySet();
    for (const auto& b : d.bags) cover = cover | b;
    if (!(cover == g.allVertices())) {
        res.ok = false;
        res.violations.push_back("cover: some vertex appears in no bag");
    }

    for (std::size_t v = 0; v < g.n(); ++v) {
        std::vector<bool> touched(d.tree.n(), false);
        for (std::size_t t = 0; t < d.tree.n(); ++t) touched[t] = d.bags[t].contains(v);
        if (!touchedConnected(d.tree, touched)) {
            res.ok = false;
            res.violations.push_back("connectivity: bags containing " + g.label(v) +
                                     " form a disconnected part of the tree");
        }
    }

    auto unions = subtreeUnions(d.tree, d.bags, g.n());
    for (auto [s, t] : d.tree.edges) {
        VertexSet Y = d.bags[s] & d.bags[t];
        VertexSet A = unions[t] - d.bags[s];
        for (const VertexSet& comp : g.sccsAvoiding(Y)) {
            if (comp.intersects(A) && !comp.subsetOf(A)) {
                res.ok = false;
                res.violations.push_back(
                    "normality: below edge " + d.tree.names[s] + "->" + d.tree.names[t] +
                    " the region cuts through a strong component of the graph minus " +
                    Y.str());
            }
        }
    }
    return res;
}

ValidationResult validateOriented(const Digraph& g, const Decomposition& d) {
    ValidationResult res;
    d.tree.requireTree();
    if (d.bags.size() != d.tree.n()) throw InputError("one bag per tree node required");

    VertexSet cover = g.emptySet();
    for (const auto& b : d.bags) cover = cover | b;
    if (!(cover == g.allVertices())) {
        res.ok = false;
        res.violations.push_back("cover: some vertex appears in no bag");
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
        std::vector<bool> touched(d.tree.n(), false);
        for (std::size_t t = 0; t < d.tree.n(); ++t) touched[t] = d.bags[t].contains(v);
        if (!touchedConnected(d.tree, touched)) {
            res.ok = false;
            res.violations.push_back("connectivity: bags containing " + g.label(v) +
                                     " form a disconnected part of the tree");
        }
    }

    std::set<std::pair<std::size_t, std::size_t>> covered(d.covered.begin(), d.covered.end());
    for (auto [u, v] : covered) {
        if (u >= g.n() || v >= g.n() || !g.hasEdge(u, v)) {
            res.ok = false;
            res.violations.push_back("partition lists a non-edge");
            continue;
        }
        bool inBag = false;
        for (const auto& b : d.bags)
            if (b.contains(u) && b.contains(v)) inBag = true;
        if (!inBag) {
            res.ok = false;
            res.violations.push_back("tree-part edge " + g.label(u) + "->" + g.label(v) +
                                     " is contained in no bag");
        }
    }

    // Directed reachability between tree nodes along the given orientation.
    std::vector<std::vector<bool>> reach(d.tree.n(), std::vector<bool>(d.tree.n(), false));
    for (std::size_t s = 0; s < d.tree.n(); ++s) {
        std::queue<std::size_t> q;
        q.push(s);
        reach[s][s] = true;
        while (!q.empty()) {
            std::size_t a = q.front();
            q.pop();
            for (auto [x, y] : d.tree.edges)
                if (x == a && !reach[s][y]) {
                    reach[s][y] = true;
                    q.push(y);
                }
        }
    }

    for (std::size_t u = 0; u < g.n(); ++u)
        g.outNeighbors(u).forEach([&](std::size_t v) {
            if (covered.count({u, v})) return;
            // A shortcut needs some bag with u and some bag with v joined by a
            // directed tree path.
            bool found = false;
            for (std::size_t s = 0; s < d.tree.n() && !found; ++s) {
                if (!d.bags[s].contains(u)) continue;
                for (std::size_t t = 0; t < d.tree.n() && !found; ++t)
                    if (d.bags[t].contains(v) && reach[s][t]) found = true;
            }
            if (!found) {
                res.ok = false;
                res.violations.push_back("shortcut " + g.label(u) + "->" + g.label(v) +
                                         " has no directed tree path supporting it");
            }
        });
    return res;
}

Decomposition dToDS(const Digraph& g, const Decomposition& d) {
    (void)g;
    Decomposition out;
    out.kind = "ds";
    out.tree.names = d.tree.names;
    out.tree.root = d.tree.root;
    out.bags = d.bags;
    for (auto [s, t] : d.tree.edges) {
        std::size_t mid = out.tree.names.size();
        out.tree.names.push_back(d.tree.names[s] + "_" + d.tree.names[t]);
        out.bags.push_back(d.bags[s] | d.bags[t]);
        out.tree.edges.push_back({s, mid});
        out.tree.edges.push_back({mid, t});
    }
    return out;
}

std::pair<std::vector<std::pair<std::size_t, std::size_t>>,
          std::vector<std::pair<std::size_t, std::size_t>>>
coveredEdgePartition(const Digraph& g, const DecompTree& tree,
                     const std::vector<VertexSet>& bags) {
    (void)tree;
    std::vector<std::pair<std::size_t, std::size_t>> treePart, shortcutPart;
    for (std::size_t u = 0; u < g.n(); ++u)
        g.outNeighbors(u).forEach([&](std::size_t v) {
            bool inBag = false;
            for (const auto& b : bags)
                if (b.contains(u) && b.contains(v)) inBag = true;
            (inBag ? treePart : shortcutPart).push_back({u, v});
        });
    return {treePart, shortcutPart};
}

Decomposition orientedToDS(const Decomposition& d, std::size_t root) {
    if (root >= d.tree.n()) throw InputError("root out of range");
    Decomposition out;
    out.kind = "ds";
    out.tree.names = d.tree.names;
    out.tree.root = root;
    out.bags = d.bags;
    auto adj = d.tree.undirectedAdj();
    std::vector<bool> seen(d.tree.n(), false);
    std::queue<std::size_t> q;
    q.push(root);
    seen[root] = true;
    while (!q.empty()) {
        std::size_t a = q.front();
        q.pop();
        for (std::size_t b : adj[a])
            if (!seen[b]) {
                seen[b] = true;
                out.tree.edges.push_back({a, b});
                q.push(b);
            }
    }
    return out;
}

namespace {

struct TreeNodeMemory final : StrategyMemory {
    std::size_t node;
    explicit TreeNodeMemory(std::size_t n) : node(n) {}
    std::string key() const override { return std::to_string(node); }
};

}  // namespace

Decomposition strategyToShyDecomp(const Digraph& g, const StrategyProgram& s) {
    if (s.role != StrategyProgram::Role::Cop)
        throw InputError("strategyToShyDecomp needs a cop program");
    GameVariant v = componentWeak();
    Decomposition d;
    d.kind = "shy";
    d.tree.root = 0;
    d.tree.names.push_back("n0");
    d.bags.push_back(g.emptySet());
    d.robber.push_back(g.allVertices());
    std::size_t budget = stateBudget();

    std::function<void(const AugmentedState&, const MemoryPtr&, std::size_t)> unfold =
        [&](const AugmentedState& st, const MemoryPtr& mem, std::size_t parent) {
            auto [Cnew, mem2] = s.step(mem, st);
            std::size_t t = d.tree.names.size();
            if (t > budget) throw BudgetExceeded("decomposition unfolding budget exceeded");
            d.tree.names.push_back("n" + std::to_string(t));
            d.bags.push_back(Cnew);
            d.robber.push_back(st.position.robber);
            d.tree.edges.push_back({parent, t});
            MonStepResult ann = copAnnounce(v, g, st, Cnew);
            if (!ann.ok)
                throw InputError("strategy is not weakly monotone: " + ann.violation);
            for (const VertexSet& Rnew :
                 robberSuccessors(v, g, st.position.cops, Cnew, st.position.robber)) {
                MonStepResult mv = robberMove(v, g, ann.next, Rnew);
                if (!mv.ok) throw InputError("robber reply rejected: " + mv.violation);
                unfold(mv.next, mem2, t);
            }
        };

    for (const VertexSet& R0 : g.sccs()) unfold(initialState(g, R0), s.memoryInit, 0);
    return d;
}

StrategyProgram shyDecompToStrategy(const Digraph& g, const Decomposition& d) {
    if (d.kind != "shy") throw InputError("shyDecompToStrategy expects kind \"shy\"");
    d.tree.requireTree();
    StrategyProgram s;
    s.role = StrategyProgram::Role::Cop;
    s.declaredCopBound = d.width();
    s.memoryInit = std::make_shared<TreeNodeMemory>(d.tree.root);
    auto children = d.tree.childrenOf();
    Decomposition dec = d;
    Digraph graph = g;
    s.step = [dec, graph, children](const MemoryPtr& mem, const AugmentedState& st)
        -> std::pair<VertexSet, MemoryPtr> {
        auto cur = std::dynamic_pointer_cast<const TreeNodeMemory>(mem);
        if (!cur) throw InputError("foreign memory passed to a tree-walking strategy");
        for (std::size_t c : children[cur->node])
            if (dec.robber[c] == st.position.robber)
                return {dec.bags[c], std::make_shared<TreeNodeMemory>(c)};
        // The robber left the unfolded tree; stall (an honest loss under
        // verification) rather than guessing.
        return {st.position.cops, mem};
    };
    return s;
}

StrategyProgram dsToStrategy(const Digraph& g, const Decomposition& d) {
    if (d.kind != "ds") throw InputError("dsToStrategy expects kind \"ds\"");
    d.tree.requireTree();
    StrategyProgram s;
    s.role = StrategyProgram::Role::Cop;
    s.declaredCopBound = d.width();
    auto children = d.tree.childrenOf();
    auto unions = subtreeUnions(d.tree, d.bags, g.n());
    struct Init final : StrategyMemory {
        std::string key() const override { return "i"; }
    };
    s.memoryInit = std::make_shared<Init>();
    Decomposition dec = d;
    s.step = [dec, children, unions](const MemoryPtr& mem, const AugmentedState& st)
        -> std::pair<VertexSet, MemoryPtr> {
        if (std::dynamic_pointer_cast<const Init>(mem))
            return {dec.bags[dec.tree.root], std::make_shared<TreeNodeMemory>(dec.tree.root)};
        auto cur = std::dynamic_pointer_cast<const TreeNodeMemory>(mem);
        if (!cur) throw InputError("foreign memory passed to a tree-walking strategy");
        for (std::size_t c : children[cur->node])
            if (st.position.robber.subsetOf(unions[c] - dec.bags[cur->node]))
                return {dec.bags[c], std::make_shared<TreeNodeMemory>(c)};
        return {st.position.cops, mem};  // stalls; an honest loss under verification
    };
    return s;
}

VertexSet suppOf(const Digraph& g, const std::vector<std::size_t>& order, std::size_t v) {
    if (order.size() != g.n()) throw InputError("order must list every vertex exactly once");
    std::vector<std::size_t> pos(g.n(), g.n());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= g.n() || pos[order[i]] != g.n())
            throw InputError("order must list every vertex exactly once");
        pos[order[i]] = i;
    }
    VertexSet greater(g.n());
    for (std::size_t u = 0; u < g.n(); ++u)
        if (pos[u] > pos[v]) greater.add(u);
    VertexSet reach = g.reachAvoiding(VertexSet::of(g.n(), {v}), greater);
    VertexSet supp(g.n());
    reach.forEach([&](std::size_t r) { supp = supp | (g.outNeighbors(r) & greater); });
    return supp;
}

std::size_t eliminationWidth(const Digraph& g, const std::vector<std::size_t>& order) {
    std::size_t w = 0;
    for (std::size_t v = 0; v < g.n(); ++v) w = std::max(w, suppOf(g, order, v).count());
    return w;
}

KellyResult kellyWidthExact(const Digraph& g) {
    const std::size_t n = g.n();
    if (n > 20) throw InputError("exact width search capped at 20 vertices");
    KellyResult res;
    if (n == 0) return res;

    std::vector<std::uint32_t> outm(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        g.outNeighbors(u).forEach([&](std::size_t v) { outm[u] |= 1u << v; });

    auto suppSize = [&](std::size_t v, std::uint32_t placed) {
        // Reach of v avoiding the already-placed (greater) vertices.
        std::uint32_t reach = 1u << v, frontier = reach;
        while (frontier) {
            std::uint32_t nxt = 0;
            for (std::uint32_t f = frontier; f;) {
                std::uint32_t b = f & (~f + 1);
                f ^= b;
                nxt |= outm[static_cast<std::size_t>(__builtin_ctz(b))];
            }
            frontier = nxt & ~placed & ~reach;
            reach |= frontier;
        }
        std::uint32_t adj = 0;
        for (std::uint32_t r = reach; r;) {
            std::uint32_t b = r & (~r + 1);
            r ^= b;
            adj |= outm[static_cast<std::size_t>(__builtin_ctz(b))];
        }
        return static_cast<std::size_t>(__builtin_popcount(adj & placed));
    };

    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<std::uint8_t> dp(full + 1, 0), choice(full + 1, 0);
    for (std::uint32_t mask = full; mask-- > 0;) {
        std::size_t best = n + 1, bestV = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if ((mask >> v) & 1) continue;
            std::size_t val =
                std::max(suppSize(v, mask), static_cast<std::size_t>(dp[mask | (1u << v)]));
            if (val < best) {
                best = val;
                bestV = v;
            }
        }
        dp[mask] = static_cast<std::uint8_t>(best);
        choice[mask] = static_cast<std::uint8_t>(bestV);
    }

    res.width = dp[0];
    std::uint32_t mask = 0;
    std::vector<std::size_t> rev;  // greatest vertex first
    while (mask != full) {
        std::size_t v = choice[mask];
        rev.push_back(v);
        mask |= 1u << v;
    }
    res.order.assign(rev.rbegin(), rev.rend());
    return res;
}

namespace {

VertexSet setFromLabels(const json& arr, const Digraph& g) {
    VertexSet s(g.n());
    for (const auto& l : arr) s.add(g.vertexByLabel(l.get<std::string>()));
    return s;
}

json labelsOf(const VertexSet& s, const Digraph& g) {
    std::vector<std::string> out;
    s.forEach([&](std::size_t v) { out.push_back(g.label(v)); });
    std::sort(out.begin(), out.end());
    return json(out);
}

}  // namespace

Decomposition parseDecomp(const std::string& text, const Digraph& g) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid decomposition JSON: ") + e.what());
    }
    try {
        Decomposition d;
        d.kind = j.at("kind").get<std::string>();
        if (d.kind != "shy" && d.kind != "d" && d.kind != "ds" && d.kind != "oriented")
            throw InputError("unknown decomposition kind: " + d.kind);
        const json& jt = j.at("tree");
        std::map<std::string, std::size_t> idx;
        for (const auto& name : jt.at("nodes")) {
            std::string s = name.get<std::string>();
            if (idx.count(s)) throw InputError("duplicate tree node name: " + s);
            idx[s] = d.tree.names.size();
            d.tree.names.push_back(s);
        }
        for (const auto& e : jt.at("edges"))
            d.tree.edges.push_back(
                {idx.at(e.at(0).get<std::string>()), idx.at(e.at(1).get<std::string>())});
        if (jt.contains("root")) d.tree.root = idx.at(jt.at("root").get<std::string>());
        d.bags.assign(d.tree.n(), g.emptySet());
        for (const auto& [name, arr] : j.at("bags").items())
            d.bags.at(idx.at(name)) = setFromLabels(arr, g);
        if (d.kind == "shy") {
            d.robber.assign(d.tree.n(), g.emptySet());
            for (const auto& [name, arr] : j.at("R").items())
                d.robber.at(idx.at(name)) = setFromLabels(arr, g);
        }
        if (d.kind == "oriented" && j.contains("partitionT"))
            for (const auto& e : j.at("partitionT"))
                d.covered.push_back({g.vertexByLabel(e.at(0).get<std::string>()),
                                     g.vertexByLabel(e.at(1).get<std::string>())});
        return d;
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid decomposition JSON: ") + e.what());
    } catch (const std::out_of_range&) {
        throw InputError("decomposition JSON references an unknown tree node");
    }
}

std::string serializeDecomp(const Decomposition& d, const Digraph& g) {
    json j;
    j["kind"] = d.kind;
    j["tree"]["nodes"] = d.tree.names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [s, t] : d.tree.edges) edges.push_back({d.tree.names[s], d.tree.names[t]});
    std::sort(edges.begin(), edges.end());
    j["tree"]["edges"] = json::array();
    for (const auto& [s, t] : edges) j["tree"]["edges"].push_back({s, t});
    j["tree"]["root"] = d.tree.names[d.tree.root];
    j["bags"] = json::object();
    for (std::size_t t = 0; t < d.tree.n(); ++t)
        j["bags"][d.tree.names[t]] = labelsOf(d.bags[t], g);
    if (d.kind == "shy") {
        j["R"] = json::object();
        for (std::size_t t = 0; t < d.tree.n(); ++t)
            j["R"][d.tree.names[t]] = labelsOf(d.robber[t], g);
    }
    if (d.kind == "oriented") {
        std::vector<std::pair<std::string, std::string>> cov;
        for (auto [u, v] : d.covered) cov.push_back({g.label(u), g.label(v)});
        std::sort(cov.begin(), cov.end());
        j["partitionT"] = json::array();
        for (const auto& [u, v] : cov) j["partitionT"].push_back({u, v});
    }
    return j.dump(2) + "\n";
}

}  // namespace gsearch
