#include "gsearch/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gsearch {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Deduplicating graph assembler shared by all generators.
struct Builder {
    std::vector<std::string> labels;
    std::set<std::pair<std::size_t, std::size_t>> edges;

    std::size_t vertex(std::string label) {
        labels.push_back(std::move(label));
        return labels.size() - 1;
    }
    void arc(std::size_t u, std::size_t v) {
        if (u != v) edges.insert({u, v});
    }
    void biArc(std::size_t u, std::size_t v) {
        arc(u, v);
        arc(v, u);
    }
    void clique(const std::vector<std::size_t>& vs) {
        for (auto u : vs)
            for (auto v : vs) arc(u, v);
    }
    Digraph build() const {
        Digraph g(labels.size(), labels);
        for (auto& [u, v] : edges) g.addEdge(u, v);
        return g;
    }
};

std::size_t sizeCap(std::size_t vertices) {
    constexpr std::size_t kCap = 2000000;
    if (vertices > kCap)
        throw InputError("family instance exceeds the generator cap of 2000000 vertices");
    return vertices;
}

// ---------------------------------------------------------------------------
// DtwOtw: recursive bidirected tree, each child points to all leaves of its
// smaller siblings.
// ---------------------------------------------------------------------------

struct DtwOtwLayout {
    Builder b;
    std::vector<std::size_t> parent;  // recursion-tree parent, kNone at root
    std::vector<std::size_t> depth;

    std::size_t rec(std::size_t levels, std::size_t m, const std::string& path, std::size_t dep,
                    std::vector<std::size_t>& leavesOut) {
        std::size_t r = b.vertex(path);
        parent.push_back(kNone);
        depth.push_back(dep);
        if (levels == 1) {
            leavesOut.push_back(r);
            return r;
        }
        std::vector<std::size_t> earlierLeaves;
        for (std::size_t i = 1; i <= m; ++i) {
            std::vector<std::size_t> childLeaves;
            std::size_t c =
                rec(levels - 1, m, path + "." + std::to_string(i), dep + 1, childLeaves);
            parent[c] = r;
            b.biArc(r, c);
            for (auto l : earlierLeaves) b.arc(c, l);
            earlierLeaves.insert(earlierLeaves.end(), childLeaves.begin(), childLeaves.end());
        }
        leavesOut.insert(leavesOut.end(), earlierLeaves.begin(), earlierLeaves.end());
        return r;
    }
};

DtwOtwLayout buildDtwOtw(std::size_t m, std::size_t depth) {
    if (m < 1 || depth < 1) throw InputError("dtwOtw: branching and depth must be at least 1");
    // size s(i) = 1 + m*s(i-1)
    std::size_t s = 1;
    for (std::size_t i = 1; i < depth; ++i) s = sizeCap(1 + m * s);
    DtwOtwLayout L;
    std::vector<std::size_t> leaves;
    L.rec(depth, m, "r", 0, leaves);
    return L;
}

Digraph buildDtwOtwFormal(std::size_t n) {
    // Word-set reading: vertices [n]^{<=n}; bidirected tree edges; arcs from
    // each child wa to every maximal-length word below a smaller sibling wb.
    if (n < 1) throw InputError("dtwOtw: depth must be at least 1");
    Builder b;
    std::map<std::vector<std::size_t>, std::size_t> id;
    std::vector<std::vector<std::size_t>> words;
    std::vector<std::vector<std::size_t>> frontier{{}};
    for (std::size_t len = 0; len <= n; ++len) {
        std::vector<std::vector<std::size_t>> next;
        for (auto& w : frontier) {
            std::string label = "w";
            for (auto d : w) label += "." + std::to_string(d + 1);
            id[w] = b.vertex(label);
            words.push_back(w);
            if (len < n)
                for (std::size_t a = 0; a < n; ++a) {
                    auto w2 = w;
                    w2.push_back(a);
                    next.push_back(std::move(w2));
                }
        }
        frontier = std::move(next);
    }
    for (auto& w : words) {
        if (w.empty()) continue;
        auto p = w;
        p.pop_back();
        b.biArc(id[p], id[w]);
    }
    // Arcs: for every non-root word ua (|ua| <= n) and every leaf ubx with
    // b < a: ua -> ubx.
    for (auto& wa : words) {
        if (wa.empty()) continue;
        std::size_t a = wa.back();
        for (auto& leaf : words) {
            if (leaf.size() != n || leaf.size() < wa.size()) continue;
            bool prefixOk = std::equal(wa.begin(), wa.end() - 1, leaf.begin());
            if (!prefixOk) continue;
            if (leaf[wa.size() - 1] < a) b.arc(id[wa], id[leaf]);
        }
    }
    return b.build();
}

// ---------------------------------------------------------------------------
// DwGameFails: big transitive tree over alphabet n^2, one-way-up tree over
// alphabet n, quotient cross arcs.
// ---------------------------------------------------------------------------

struct DwLayout {
    Builder b;
    std::map<std::vector<std::size_t>, std::size_t> big, small;
    std::vector<std::size_t> bigParent;  // per graph vertex; kNone elsewhere
    std::vector<std::size_t> bigDepth;   // kNone for small vertices
    std::size_t bigRoot = kNone;
    std::vector<std::size_t> bigDepth1;  // depth-1 big vertices
};

std::vector<std::vector<std::size_t>> allWords(std::size_t alphabet, std::size_t maxLen) {
    std::vector<std::vector<std::size_t>> out{{}};
    std::vector<std::vector<std::size_t>> frontier{{}};
    for (std::size_t len = 0; len < maxLen; ++len) {
        std::vector<std::vector<std::size_t>> next;
        for (auto& w : frontier)
            for (std::size_t a = 0; a < alphabet; ++a) {
                auto w2 = w;
                w2.push_back(a);
                out.push_back(w2);
                next.push_back(std::move(w2));
            }
        frontier = std::move(next);
    }
    return out;
}

std::string wordLabel(const std::string& prefix, const std::vector<std::size_t>& w) {
    std::string out = prefix;
    for (auto d : w) out += "." + std::to_string(d);
    return out;
}

DwLayout buildDwGameFails(std::size_t n) {
    if (n < 2) throw InputError("dwGameFails: n must be at least 2");
    DwLayout L;
    auto bigWords = allWords(n * n, n);
    auto smallWords = allWords(n, n);
    sizeCap(bigWords.size() + smallWords.size());
    for (auto& w : bigWords) L.big[w] = L.b.vertex(wordLabel("b", w));
    for (auto& w : smallWords) L.small[w] = L.b.vertex(wordLabel("s", w));
    L.bigParent.assign(L.b.labels.size(), kNone);
    L.bigDepth.assign(L.b.labels.size(), kNone);
    L.bigRoot = L.big[{}];
    for (auto& w : bigWords) {
        std::size_t v = L.big[w];
        L.bigDepth[v] = w.size();
        if (w.size() == 1) L.bigDepth1.push_back(v);
        if (!w.empty()) {
            auto p = w;
            p.pop_back();
            L.bigParent[v] = L.big[p];
            L.b.biArc(L.big[p], v);
        }
        // downward transitive closure: every proper ancestor -> w
        for (std::size_t cut = 0; cut + 1 < w.size(); ++cut) {
            std::vector<std::size_t> anc(w.begin(), w.begin() + cut);
            L.b.arc(L.big[anc], v);
        }
        // cross arcs via the digit quotient
        if (!w.empty()) {
            std::vector<std::size_t> q;
            for (auto d : w) q.push_back(d / n);
            auto p = w;
            p.pop_back();
            L.b.arc(v, L.small[q]);
            L.b.arc(L.small[q], L.big[p]);
        }
    }
    for (auto& w : smallWords) {
        if (w.empty()) continue;
        auto p = w;
        p.pop_back();
        L.b.arc(L.small[w], L.small[p]);  // child -> parent only
    }
    return L;
}

// ---------------------------------------------------------------------------
// GuardingSeq
// ---------------------------------------------------------------------------

struct GuardLayout {
    Builder b;
    std::size_t c0 = 0;
    struct Pocket {
        std::vector<std::size_t> R;   // 3-clique
        std::size_t g0 = 0;           // single vertex
        std::vector<std::size_t> g1;  // 2-clique
    };
    struct Part {
        std::vector<std::size_t> c1;  // 2-clique
        std::vector<std::size_t> c2;  // 3-clique
        std::vector<Pocket> pockets;
    };
    std::vector<Part> parts;
};

GuardLayout buildGuardingSeq(std::size_t n) {
    if (n < 2) throw InputError("guardingSeq: n must be at least 2");
    sizeCap(1 + n * (5 + 6 * n));
    GuardLayout L;
    L.c0 = L.b.vertex("c0");
    for (std::size_t i = 0; i < n; ++i) {
        GuardLayout::Part part;
        std::string ai = "A" + std::to_string(i);
        for (std::size_t t = 0; t < 2; ++t) part.c1.push_back(L.b.vertex(ai + ".c1." + std::to_string(t)));
        for (std::size_t t = 0; t < 3; ++t) part.c2.push_back(L.b.vertex(ai + ".c2." + std::to_string(t)));
        L.b.clique(part.c1);
        L.b.clique(part.c2);
        for (auto u : part.c1)
            for (auto v : part.c2) L.b.biArc(u, v);
        for (auto u : part.c1) L.b.biArc(L.c0, u);
        for (auto u : part.c2) L.b.biArc(L.c0, u);
        for (std::size_t j = 0; j < n; ++j) {
            GuardLayout::Pocket p;
            std::string bj = ai + ".B" + std::to_string(j);
            for (std::size_t t = 0; t < 3; ++t) p.R.push_back(L.b.vertex(bj + ".R." + std::to_string(t)));
            p.g0 = L.b.vertex(bj + ".g0");
            for (std::size_t t = 0; t < 2; ++t) p.g1.push_back(L.b.vertex(bj + ".g1." + std::to_string(t)));
            L.b.clique(p.R);
            L.b.clique(p.g1);
            for (auto u : part.c1) L.b.arc(p.g0, u);   // g0 -> c1
            for (auto u : p.g1)
                for (auto v : part.c2) L.b.arc(u, v);  // g1 -> c2
            for (auto u : p.R) {
                for (auto v : p.g1) L.b.arc(u, v);     // R -> g1
                L.b.arc(u, p.g0);                      // R -> g0
            }
            for (auto u : part.c1)
                for (auto v : p.R) L.b.arc(u, v);      // c1 -> R
            for (auto u : part.c2)
                for (auto v : p.R) L.b.arc(u, v);      // c2 -> R
            part.pockets.push_back(std::move(p));
        }
        L.parts.push_back(std::move(part));
    }
    return L;
}

// ---------------------------------------------------------------------------
// LeavingCops
// ---------------------------------------------------------------------------

struct LcLayout {
    Builder b;
    std::vector<std::vector<std::size_t>> C, R, A;  // per level, 0-based
};

LcLayout buildLeavingCops(std::size_t n, std::size_t m) {
    if (n < 1 || m < 1) throw InputError("leavingCops: n and m must be at least 1");
    sizeCap(6 * m * n);
    LcLayout L;
    for (std::size_t i = 0; i < n; ++i) {
        std::string li = std::to_string(i + 1);
        std::vector<std::size_t> c, r, a;
        for (std::size_t t = 0; t < 2 * m; ++t) c.push_back(L.b.vertex("C" + li + "." + std::to_string(t)));
        for (std::size_t t = 0; t < 3 * m; ++t) r.push_back(L.b.vertex("R" + li + "." + std::to_string(t)));
        for (std::size_t t = 0; t < m; ++t) a.push_back(L.b.vertex("A" + li + "." + std::to_string(t)));
        L.b.clique(c);
        L.b.clique(r);
        L.C.push_back(c);
        L.R.push_back(r);
        L.A.push_back(a);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0)
            for (auto u : L.C[i])
                for (auto v : L.C[i - 1]) L.b.arc(u, v);  // C_i -> C_{i-1}
        for (auto u : L.C[i])
            for (auto v : L.R[i]) L.b.arc(u, v);          // C_i -> R_i
        for (auto u : L.R[i])
            for (auto v : L.A[i]) L.b.arc(u, v);          // R_i -> A_i
        for (auto u : L.A[i])
            for (auto v : L.C[n - 1]) L.b.arc(u, v);      // A_i -> C_n
        for (std::size_t j = 0; j < i; ++j)
            for (auto u : L.A[i])
                for (auto v : L.A[j]) L.b.arc(u, v);      // A_i -> A_j, j < i
    }
    return L;
}

// ---------------------------------------------------------------------------
// DoubleTree
// ---------------------------------------------------------------------------

struct DoubleTreeLayout {
    Builder b;
    std::vector<std::size_t> parent0;  // within the bidirected tree
    std::vector<std::size_t> depth;    // tree depth for both halves
    std::vector<std::size_t> copyOf;   // T0 vertex -> its T1 copy (kNone on T1)
    std::vector<std::size_t> origOf;   // T1 vertex -> its T0 original (kNone on T0)
    std::size_t root0 = kNone, root1 = kNone;
    VertexSet t0{0};
};

DoubleTreeLayout buildDoubleTree(std::size_t n, std::size_t m) {
    if (n < 1 || m < 1) throw InputError("doubleTree: n and m must be at least 1");
    auto words = allWords(n, m);
    sizeCap(2 * words.size());
    DoubleTreeLayout L;
    std::map<std::vector<std::size_t>, std::size_t> id0, id1;
    for (auto& w : words) id0[w] = L.b.vertex(wordLabel("a", w));
    for (auto& w : words) id1[w] = L.b.vertex(wordLabel("b", w));
    std::size_t total = L.b.labels.size();
    L.parent0.assign(total, kNone);
    L.depth.assign(total, 0);
    L.copyOf.assign(total, kNone);
    L.origOf.assign(total, kNone);
    L.root0 = id0[{}];
    L.root1 = id1[{}];
    L.t0 = VertexSet(total);
    for (auto& w : words) {
        std::size_t v0 = id0[w], v1 = id1[w];
        L.t0.add(v0);
        L.depth[v0] = L.depth[v1] = w.size();
        L.copyOf[v0] = v1;
        L.origOf[v1] = v0;
        L.b.arc(v0, v1);  // v -> v'
        if (!w.empty()) {
            auto p = w;
            p.pop_back();
            L.parent0[v0] = id0[p];
            L.b.biArc(id0[p], v0);  // T0 bidirected
            L.b.arc(v1, id1[p]);    // T1 child -> parent
            L.b.arc(v1, id0[p]);    // v' -> parent of v in T0
        }
    }
    return L;
}

// ---------------------------------------------------------------------------
// NonCopMon
// ---------------------------------------------------------------------------

struct NcmLayout {
    Builder b;
    struct Copy {
        std::size_t level = 1;
        std::size_t parentCopy = kNone;
        std::size_t hostLeaf = kNone;  // leaf of the parent tree carrying this copy
        std::size_t xIn = kNone;       // guard vertex on the parent root->leaf path
        std::size_t treeRoot = kNone;
        std::vector<std::size_t> treeLeaves;
        VertexSet tree{0};
        VertexSet verts{0};  // tree plus everything below
    };
    std::vector<Copy> copies;
    std::vector<std::size_t> ownerCopy;     // copy whose tree holds the vertex
    std::vector<std::size_t> treeParent;    // parent within the owner tree
    std::vector<std::size_t> treeDepth;

    void noteVertex(std::size_t v, std::size_t copy, std::size_t parent, std::size_t depth) {
        if (ownerCopy.size() <= v) {
            ownerCopy.resize(v + 1, kNone);
            treeParent.resize(v + 1, kNone);
            treeDepth.resize(v + 1, 0);
        }
        ownerCopy[v] = copy;
        treeParent[v] = parent;
        treeDepth[v] = depth;
    }
};

// Builds one copy of the level-`level` graph; returns its copy index.
std::size_t buildNcmCopy(NcmLayout& L, std::size_t level, std::size_t n, std::size_t branching,
                         std::size_t depth, std::size_t parentCopy, std::size_t hostLeaf,
                         std::size_t xIn, const std::string& tag) {
    std::size_t ci = L.copies.size();
    L.copies.emplace_back();
    {
        auto& c = L.copies[ci];
        c.level = level;
        c.parentCopy = parentCopy;
        c.hostLeaf = hostLeaf;
        c.xIn = xIn;
    }
    std::vector<std::size_t> treeVerts;
    std::vector<std::size_t> leaves;
    std::size_t root;
    if (level == 1) {
        root = L.b.vertex(tag);
        L.noteVertex(root, ci, kNone, 0);
        treeVerts.push_back(root);
        leaves.push_back(root);
    } else {
        // complete bidirected tree of the given branching and depth
        struct Node {
            std::size_t id, depth;
        };
        root = L.b.vertex(tag + "/t");
        L.noteVertex(root, ci, kNone, 0);
        treeVerts.push_back(root);
        std::vector<Node> frontier{{root, 0}};
        std::size_t counter = 0;
        while (!frontier.empty()) {
            std::vector<Node> next;
            for (auto& nd : frontier) {
                if (nd.depth == depth) {
                    leaves.push_back(nd.id);
                    continue;
                }
                for (std::size_t b = 0; b < branching; ++b) {
                    std::size_t ch = L.b.vertex(tag + "/t" + std::to_string(counter++));
                    L.noteVertex(ch, ci, nd.id, nd.depth + 1);
                    L.b.biArc(nd.id, ch);
                    treeVerts.push_back(ch);
                    next.push_back({ch, nd.depth + 1});
                }
            }
            frontier = std::move(next);
        }
    }
    {
        auto& c = L.copies[ci];
        c.treeRoot = root;
        c.treeLeaves = leaves;
    }
    std::vector<std::size_t> allVerts = treeVerts;
    if (level > 1) {
        for (std::size_t li = 0; li < leaves.size(); ++li) {
            std::size_t v = leaves[li];
            // path from the root to v, root first
            std::vector<std::size_t> path;
            for (std::size_t u = v; u != kNone; u = L.treeParent[u]) path.push_back(u);
            std::reverse(path.begin(), path.end());
            for (std::size_t j = 1; j <= n; ++j) {
                std::size_t x = path[std::min(j, path.size()) - 1];
                std::size_t sub = buildNcmCopy(L, level - 1, n, branching, depth, ci, v, x,
                                               tag + "/L" + std::to_string(li) + "H" +
                                                   std::to_string(j));
                const auto& sc = L.copies[sub];
                L.b.biArc(v, sc.treeRoot);
                // x -> all marked vertices of the sub-copy (its tree)
                sc.tree.forEach([&](std::size_t mvert) { L.b.arc(x, mvert); });
                for (auto sl : sc.treeLeaves) L.b.arc(sl, v);
                sc.verts.forEach([&](std::size_t u) { allVerts.push_back(u); });
            }
        }
    }
    std::size_t total = L.b.labels.size();
    auto& c = L.copies[ci];
    c.tree = VertexSet(total);
    for (auto v : treeVerts) c.tree.add(v);
    c.verts = VertexSet(total);
    for (auto v : allVerts) c.verts.add(v);
    return ci;
}

NcmLayout buildNonCopMon(std::size_t n, std::optional<std::size_t> branchingOv,
                         std::optional<std::size_t> depthOv) {
    if (n < 1) throw InputError("nonCopMon: n must be at least 1");
    std::size_t branching = branchingOv.value_or(n + 1);
    std::size_t depth = depthOv.value_or(n + 2);
    if (branching < 1 || depth < 1)
        throw InputError("nonCopMon: branching and depth must be at least 1");
    // tree size and total size, with the cap enforced before allocation
    std::size_t treeSize = 1, leafCount = 1, pw = 1;
    for (std::size_t d = 0; d < depth; ++d) {
        pw = sizeCap(pw * branching);
        treeSize = sizeCap(treeSize + pw);
    }
    leafCount = pw;
    std::size_t total = 1;
    for (std::size_t level = 2; level <= n + 1; ++level)
        total = sizeCap(treeSize + n * leafCount * total);
    NcmLayout L;
    buildNcmCopy(L, n + 1, n, branching, depth, kNone, kNone, kNone, "g");
    // normalize the universes of the per-copy sets
    std::size_t nv = L.b.labels.size();
    for (auto& c : L.copies) {
        VertexSet tree(nv), verts(nv);
        c.tree.forEach([&](std::size_t v) { tree.add(v); });
        c.verts.forEach([&](std::size_t v) { verts.add(v); });
        c.tree = tree;
        c.verts = verts;
    }
    return L;
}

std::vector<std::size_t> sortedMembers(const VertexSet& s) { return s.toVector(); }

VertexSet setOf(std::size_t universe, std::initializer_list<std::size_t> vs) {
    VertexSet s(universe);
    for (auto v : vs)
        if (v != kNone) s.add(v);
    return s;
}

[[noreturn]] void unexpectedPosition(const std::string& who, const AugmentedState& st) {
    throw InputError(who + ": unexpected position cops=" + st.position.cops.str() +
                     " robber=" + st.position.robber.str());
}

StrategyProgram positionalCopProgram(
    std::size_t bound,
    std::function<VertexSet(const AugmentedState&)> rule) {
    StrategyProgram p;
    p.role = StrategyProgram::Role::Cop;
    p.declaredCopBound = bound;
    p.step = [rule = std::move(rule)](const MemoryPtr& mem,
                                      const AugmentedState& st) -> std::pair<VertexSet, MemoryPtr> {
        return {rule(st), mem};
    };
    return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// public generators
// ---------------------------------------------------------------------------

Digraph genNonCopMon(std::size_t n, std::optional<std::size_t> branching,
                     std::optional<std::size_t> depth) {
    return buildNonCopMon(n, branching, depth).b.build();
}

Digraph genGuardingSeq(std::size_t n) { return buildGuardingSeq(n).b.build(); }

Digraph genLeavingCops(std::size_t n, std::size_t m) { return buildLeavingCops(n, m).b.build(); }

Digraph genDoubleTree(std::size_t n, std::size_t m) { return buildDoubleTree(n, m).b.build(); }

Digraph genDwGameFails(std::size_t n) { return buildDwGameFails(n).b.build(); }

Digraph genDtwOtw(std::size_t branching, std::size_t depth, bool formal) {
    if (formal) return buildDtwOtwFormal(depth);
    return buildDtwOtw(branching, depth).b.build();
}

FamilyId parseFamilyId(const std::string& name) {
    if (name == "nonCopMon") return FamilyId::NonCopMon;
    if (name == "guardingSeq") return FamilyId::GuardingSeq;
    if (name == "leavingCops") return FamilyId::LeavingCops;
    if (name == "doubleTree") return FamilyId::DoubleTree;
    if (name == "dwGameFails") return FamilyId::DwGameFails;
    if (name == "dtwOtw") return FamilyId::DtwOtw;
    throw InputError("unknown family: " + name);
}

std::string familyName(FamilyId id) {
    switch (id) {
        case FamilyId::NonCopMon: return "nonCopMon";
        case FamilyId::GuardingSeq: return "guardingSeq";
        case FamilyId::LeavingCops: return "leavingCops";
        case FamilyId::DoubleTree: return "doubleTree";
        case FamilyId::DwGameFails: return "dwGameFails";
        case FamilyId::DtwOtw: return "dtwOtw";
    }
    throw InputError("unknown family id");
}

Digraph genFamily(const FamilySpec& spec) {
    switch (spec.id) {
        case FamilyId::NonCopMon: return genNonCopMon(spec.n, spec.branching, spec.depth);
        case FamilyId::GuardingSeq: return genGuardingSeq(spec.n);
        case FamilyId::LeavingCops: return genLeavingCops(spec.n, spec.m);
        case FamilyId::DoubleTree: return genDoubleTree(spec.n, spec.m);
        case FamilyId::DwGameFails: return genDwGameFails(spec.n);
        case FamilyId::DtwOtw: return genDtwOtw(spec.m, spec.n, spec.formal);
    }
    throw InputError("unknown family id");
}

// ---------------------------------------------------------------------------
// scripted programs
// ---------------------------------------------------------------------------

namespace {

StrategyProgram dtwOtwTwoCop(std::size_t m, std::size_t depth) {
    auto L = std::make_shared<DtwOtwLayout>(buildDtwOtw(m, depth));
    std::size_t nv = L->b.labels.size();
    return positionalCopProgram(2, [L, nv](const AugmentedState& st) {
        const VertexSet& R = st.position.robber;
        std::size_t best = kNone;
        R.forEach([&](std::size_t v) {
            if (best == kNone || L->depth[v] < L->depth[best]) best = v;
        });
        if (best == kNone) unexpectedPosition("two-cop", st);
        std::size_t p = L->parent[best];
        return p == kNone ? setOf(nv, {best}) : setOf(nv, {p, best});
    });
}

StrategyProgram dwParallelDescent(std::size_t n) {
    auto L = std::make_shared<DwLayout>(buildDwGameFails(n));
    std::size_t nv = L->b.labels.size();
    return positionalCopProgram(3, [L, nv](const AugmentedState& st) {
        const VertexSet& C = st.position.cops;
        const VertexSet& R = st.position.robber;
        if (C.empty()) return setOf(nv, {L->bigRoot});
        if (R.count() == 1) return R;
        std::size_t d1 = kNone;
        for (auto v : L->bigDepth1)
            if (R.contains(v) && (d1 == kNone || v < d1)) d1 = v;
        if (d1 != kNone) return setOf(nv, {L->bigRoot, d1});
        std::size_t best = kNone;
        R.forEach([&](std::size_t v) {
            if (L->bigDepth[v] == kNone) return;
            if (best == kNone || L->bigDepth[v] < L->bigDepth[best]) best = v;
        });
        if (best == kNone || L->bigParent[best] == kNone)
            unexpectedPosition("parallel-descent", st);
        return setOf(nv, {L->bigParent[best], best});
    });
}

StrategyProgram guardMultiGuard(std::size_t n) {
    auto L = std::make_shared<GuardLayout>(buildGuardingSeq(n));
    std::size_t nv = L->b.labels.size();
    return positionalCopProgram(6, [L, nv](const AugmentedState& st) {
        const VertexSet& C = st.position.cops;
        const VertexSet& R = st.position.robber;
        auto mk = [&](std::initializer_list<const std::vector<std::size_t>*> groups,
                      std::initializer_list<std::size_t> singles) {
            VertexSet out(nv);
            for (auto* g : groups)
                for (auto v : *g) out.add(v);
            for (auto v : singles) out.add(v);
            return out;
        };
        if (C.empty()) return setOf(nv, {L->c0});
        // locate the robber's part and pocket, if any
        const GuardLayout::Part* part = nullptr;
        const GuardLayout::Pocket* pocket = nullptr;
        auto touches = [&](const std::vector<std::size_t>& vs) {
            for (auto v : vs)
                if (R.contains(v)) return true;
            return false;
        };
        bool inPartClique = false;
        for (auto& p : L->parts) {
            if (touches(p.c1) || touches(p.c2)) {
                part = &p;
                inPartClique = true;
            }
            for (auto& q : p.pockets)
                if (touches(q.R) || R.contains(q.g0) || touches(q.g1)) {
                    if (!part) part = &p;
                    if (part == &p) pocket = &q;
                }
        }
        if (!part) unexpectedPosition("multi-guard", st);
        if (!inPartClique && pocket && !touches(pocket->R)) {
            if (R.contains(pocket->g0))
                return mk({&part->c1}, {pocket->g0});     // corner the lone watcher
            return mk({&part->c2, &pocket->g1}, {});      // corner the guard pair
        }
        if (inPartClique) pocket = nullptr;
        bool haveG1 = pocket && C.contains(pocket->g1[0]);
        bool haveG0 = pocket && C.contains(pocket->g0);
        if (haveG1) return mk({&pocket->g1, &pocket->R}, {pocket->g0});  // capture
        if (haveG0) return mk({&part->c2, &pocket->g1}, {pocket->g0});   // second guard move
        if (C.contains(L->c0) && C.count() == 1)
            return mk({&part->c1, &part->c2}, {L->c0});  // chase into the 5-clique
        if (C.contains(L->c0) && pocket)
            return mk({&part->c1, &part->c2}, {pocket->g0});  // first guard move
        unexpectedPosition("multi-guard", st);
    });
}

// Robber for the guarding-sequence family: camps on c0, flees to a cop-free
// part, then to a cop-free pocket, and then sits in its 3-clique.
StrategyProgram guardAntiSingleGuard(std::size_t n) {
    auto L = std::make_shared<GuardLayout>(buildGuardingSeq(n));
    StrategyProgram p;
    p.role = StrategyProgram::Role::Robber;
    p.declaredCopBound = 0;
    auto gp = std::make_shared<Digraph>(L->b.build());
    p.step = [L, gp](const MemoryPtr& mem,
                     const AugmentedState& st) -> std::pair<VertexSet, MemoryPtr> {
        const Digraph& g = *gp;
        std::size_t nv = L->b.labels.size();
        if (st.position.robber.empty())
            return {g.sccOf(L->c0, g.emptySet()), mem};  // initial component
        if (!st.position.announced) unexpectedPosition("anti-single-guard", st);
        auto opts = robberSuccessors(GameVariant{}, g, st.position.cops,
                                     *st.position.announced, st.position.robber);
        (void)nv;
        if (opts.empty()) return {g.emptySet(), mem};  // captured; nothing to choose
        // 1: stay with c0 while free; 2: a component holding a cop-free part's
        // 5-clique; 3: a cop-free pocket's 3-clique; otherwise stay put.
        const VertexSet& Cnew = *st.position.announced;
        for (auto& o : opts)
            if (o.contains(L->c0)) return {o, mem};
        for (auto& part : L->parts) {
            bool partFree = true;
            for (auto v : part.c1)
                if (Cnew.contains(v)) partFree = false;
            for (auto v : part.c2)
                if (Cnew.contains(v)) partFree = false;
            bool pocketsFree = true;
            for (auto& q : part.pockets) {
                for (auto v : q.R)
                    if (Cnew.contains(v)) pocketsFree = false;
            }
            if (!partFree || !pocketsFree) continue;
            for (auto& o : opts)
                if (o.contains(part.c1[0])) return {o, mem};
        }
        for (auto& part : L->parts)
            for (auto& q : part.pockets) {
                bool free = true;
                for (auto v : q.R)
                    if (Cnew.contains(v)) free = false;
                if (!free) continue;
                for (auto& o : opts)
                    if (o.contains(q.R[0]) && o.count() == 3) return {o, mem};
            }
        // fall back: the largest remaining option
        std::size_t best = 0;
        for (std::size_t i = 1; i < opts.size(); ++i)
            if (opts[i].count() > opts[best].count()) best = i;
        return {opts[best], mem};
    };
    return p;
}

StrategyProgram lcSigmaN(std::size_t n, std::size_t m) {
    auto L = std::make_shared<LcLayout>(buildLeavingCops(n, m));
    std::size_t nv = L->b.labels.size();
    return positionalCopProgram(4 * m, [L, nv, n, m](const AugmentedState& st) {
        const VertexSet& C = st.position.cops;
        const VertexSet& R = st.position.robber;
        auto groupSet = [&](const std::vector<std::size_t>& vs) {
            VertexSet s(nv);
            for (auto v : vs) s.add(v);
            return s;
        };
        if (C.empty()) return groupSet(L->C[0]);
        // robber inside some R_i clique?
        for (std::size_t i = 0; i < n; ++i) {
            VertexSet ri = groupSet(L->R[i]);
            if (R.subsetOf(ri) && R.intersects(ri)) {
                VertexSet ai = groupSet(L->A[i]);
                if (ai.subsetOf(C)) return ai | ri;  // capture
                VertexSet out = ai | groupSet(L->C[i]);
                if (i > 0) {
                    std::size_t kept = 0;
                    for (auto v : L->C[i - 1]) {
                        if (kept == m) break;
                        if (C.contains(v)) {
                            out.add(v);
                            ++kept;
                        }
                    }
                }
                return out;
            }
        }
        // robber holds a component containing clique vertices: move to the
        // lowest such level, keeping the previous clique
        for (std::size_t i = 0; i < n; ++i) {
            VertexSet ci = groupSet(L->C[i]);
            if (R.intersects(ci)) {
                VertexSet out = ci;
                if (i > 0) out |= groupSet(L->C[i - 1]) & C;
                return out;
            }
        }
        // endgame: robber on a lone A vertex; chase down the chain
        if (R.count() == 1) return (groupSet(L->C[n - 1]) & C) | R;
        unexpectedPosition("sigma-n", st);
    });
}

// Robber for the leaving-cops family: always switches to the component with
// the lowest-level free clique, reproducing the blow-up line.
StrategyProgram lcSwitchComponents(std::size_t n, std::size_t m) {
    auto L = std::make_shared<LcLayout>(buildLeavingCops(n, m));
    StrategyProgram p;
    p.role = StrategyProgram::Role::Robber;
    p.declaredCopBound = 0;
    auto gp = std::make_shared<Digraph>(L->b.build());
    p.step = [L, n, gp](const MemoryPtr& mem,
                        const AugmentedState& st) -> std::pair<VertexSet, MemoryPtr> {
        const Digraph& g = *gp;
        if (st.position.robber.empty()) return {g.sccOf(L->R[0][0], g.emptySet()), mem};
        if (!st.position.announced) unexpectedPosition("switch-components", st);
        auto opts = robberSuccessors(GameVariant{MoveRule::Reachability, Monotonicity::Weak}, g,
                                     st.position.cops, *st.position.announced,
                                     st.position.robber);
        if (opts.empty()) return {g.emptySet(), mem};
        const VertexSet& Cnew = *st.position.announced;
        // prefer the R clique of the lowest level whose guard is still free
        for (std::size_t i = 0; i < n; ++i) {
            bool guardFree = true;
            for (auto v : L->A[i])
                if (Cnew.contains(v)) guardFree = false;
            if (!guardFree) continue;
            for (auto& o : opts)
                if (o.contains(L->R[i][0]) && !o.contains(L->C[i][0])) return {o, mem};
        }
        // otherwise the component holding the lowest-level free clique
        for (std::size_t i = 0; i < n; ++i)
            for (auto& o : opts)
                if (o.contains(L->C[i][0])) return {o, mem};
        // otherwise the A vertex with the highest index
        for (std::size_t i = n; i-- > 0;)
            for (auto& o : opts)
                for (auto v : L->A[i])
                    if (o.contains(v)) return {o, mem};
        return {opts.front(), mem};
    };
    return p;
}

StrategyProgram doubleTreeFourCop(std::size_t n, std::size_t m) {
    auto L = std::make_shared<DoubleTreeLayout>(buildDoubleTree(n, m));
    std::size_t nv = L->b.labels.size();
    return positionalCopProgram(4, [L, nv](const AugmentedState& st) {
        const VertexSet& R = st.position.robber;
        std::size_t r = kNone;
        R.forEach([&](std::size_t v) {
            if (!L->t0.contains(v)) return;
            if (r == kNone || L->depth[v] < L->depth[r]) r = v;
        });
        if (r == kNone) {
            // a lone T1 vertex: keep its two exits blocked while capturing
            std::size_t x1 = R.first();
            if (x1 >= nv || L->origOf[x1] == kNone) unexpectedPosition("four-cop", st);
            std::size_t x0 = L->origOf[x1];
            if (x0 == L->root0) return setOf(nv, {x1});
            std::size_t p = L->parent0[x0];
            return setOf(nv, {p, L->copyOf[p], x1});
        }
        if (r == L->root0) return setOf(nv, {L->root0, L->root1});
        std::size_t p = L->parent0[r];
        return setOf(nv, {p, L->copyOf[p], r, L->copyOf[r]});
    });
}

// Robber for the double tree under component-restricted cop placement:
// clings to the shallowest free T0 vertex, leftmost branch first.
StrategyProgram doubleTreeStayLeft(std::size_t n, std::size_t m) {
    auto L = std::make_shared<DoubleTreeLayout>(buildDoubleTree(n, m));
    StrategyProgram p;
    p.role = StrategyProgram::Role::Robber;
    p.declaredCopBound = 0;
    auto gp = std::make_shared<Digraph>(L->b.build());
    p.step = [L, gp](const MemoryPtr& mem,
                     const AugmentedState& st) -> std::pair<VertexSet, MemoryPtr> {
        const Digraph& g = *gp;
        if (st.position.robber.empty()) return {g.sccOf(L->root0, g.emptySet()), mem};
        if (!st.position.announced) unexpectedPosition("stay-left", st);
        GameVariant v{MoveRule::Reachability, Monotonicity::None,
                      PlacementRestriction::RobberComponentOnly};
        auto opts = robberSuccessors(v, g, st.position.cops, *st.position.announced,
                                     st.position.robber);
        if (opts.empty()) return {g.emptySet(), mem};
        auto key = [&](const VertexSet& o) {
            // (shallowest T0 depth, least id) — smaller is better
            std::size_t bestDepth = kNone, bestId = kNone;
            o.forEach([&](std::size_t x) {
                if (!L->t0.contains(x)) return;
                if (bestDepth == kNone || L->depth[x] < bestDepth ||
                    (L->depth[x] == bestDepth && x < bestId)) {
                    bestDepth = L->depth[x];
                    bestId = x;
                }
            });
            return std::make_pair(bestDepth, bestId);
        };
        std::size_t best = 0;
        for (std::size_t i = 1; i < opts.size(); ++i)
            if (key(opts[i]) < key(opts[best])) best = i;
        return {opts[best], mem};
    };
    return p;
}

StrategyProgram ncmFourCop(std::size_t n, std::optional<std::size_t> branching,
                           std::optional<std::size_t> depth) {
    auto L = std::make_shared<NcmLayout>(buildNonCopMon(n, branching, depth));
    std::size_t nv = L->b.labels.size();
    return positionalCopProgram(4, [L, nv](const AugmentedState& st) {
        const VertexSet& C = st.position.cops;
        const VertexSet& R = st.position.robber;
        if (R.count() == 1) return R;  // capture a cornered robber
        // the innermost copy whose vertex set contains the whole component
        std::size_t ci = L->ownerCopy[R.first()];
        while (ci != kNone && !R.subsetOf(L->copies[ci].verts)) ci = L->copies[ci].parentCopy;
        if (ci == kNone) unexpectedPosition("four-cop", st);
        const auto& K = L->copies[ci];
        auto entry = [&](const NcmLayout::Copy& c) {
            return setOf(nv, {c.treeRoot, c.xIn});
        };
        if (!C.contains(K.treeRoot)) {
            if (K.parentCopy == kNone) return setOf(nv, {K.treeRoot});
            return entry(L->copies[K.parentCopy]) | setOf(nv, {K.hostLeaf, K.treeRoot});
        }
        if (K.parentCopy != kNone && !C.contains(K.xIn))
            return entry(L->copies[K.parentCopy]) | setOf(nv, {K.treeRoot, K.xIn});
        // chase down the tree of K towards the robber's branch
        std::size_t rTop = kNone;
        R.forEach([&](std::size_t v) {
            if (L->ownerCopy[v] != ci) return;
            if (rTop == kNone || L->treeDepth[v] < L->treeDepth[rTop]) rTop = v;
        });
        if (rTop == kNone || L->treeParent[rTop] == kNone)
            unexpectedPosition("four-cop", st);
        return entry(K) | setOf(nv, {L->treeParent[rTop], rTop});
    });
}

// Robber against cop-monotone cops on the recursive family: keeps as much
// room as possible, preferring the shallowest free vertex of the current tree.
StrategyProgram ncmAntiCopMono(std::size_t n, std::optional<std::size_t> branching,
                               std::optional<std::size_t> depth) {
    auto L = std::make_shared<NcmLayout>(buildNonCopMon(n, branching, depth));
    StrategyProgram p;
    p.role = StrategyProgram::Role::Robber;
    p.declaredCopBound = 0;
    auto gp = std::make_shared<Digraph>(L->b.build());
    p.step = [L, gp](const MemoryPtr& mem,
                     const AugmentedState& st) -> std::pair<VertexSet, MemoryPtr> {
        const Digraph& g = *gp;
        if (st.position.robber.empty())
            return {g.sccOf(L->copies[0].treeRoot, g.emptySet()), mem};
        if (!st.position.announced) unexpectedPosition("anti-copmono", st);
        GameVariant v{MoveRule::Component, Monotonicity::CopMonoReach};
        auto opts = robberSuccessors(v, g, st.position.cops, *st.position.announced,
                                     st.position.robber);
        if (opts.empty()) return {g.emptySet(), mem};
        std::size_t best = 0;
        for (std::size_t i = 1; i < opts.size(); ++i)
            if (opts[i].count() > opts[best].count() ||
                (opts[i].count() == opts[best].count() &&
                 opts[i].first() < opts[best].first()))
                best = i;
        return {opts[best], mem};
    };
    return p;
}

}  // namespace

StrategyProgram scriptedStrategy(const FamilySpec& spec, StrategyProgram::Role role,
                                 const std::string& strategyId) {
    using Role = StrategyProgram::Role;
    switch (spec.id) {
        case FamilyId::DtwOtw:
            if (role == Role::Cop && strategyId == "two-cop" && !spec.formal)
                return dtwOtwTwoCop(spec.m, spec.n);
            break;
        case FamilyId::DwGameFails:
            if (role == Role::Cop && strategyId == "parallel-descent")
                return dwParallelDescent(spec.n);
            break;
        case FamilyId::GuardingSeq:
            if (role == Role::Cop && strategyId == "multi-guard") return guardMultiGuard(spec.n);
            if (role == Role::Robber && strategyId == "anti-single-guard")
                return guardAntiSingleGuard(spec.n);
            break;
        case FamilyId::LeavingCops:
            if (role == Role::Cop && strategyId == "sigma-n") return lcSigmaN(spec.n, spec.m);
            if (role == Role::Robber && strategyId == "switch-components")
                return lcSwitchComponents(spec.n, spec.m);
            break;
        case FamilyId::DoubleTree:
            if (role == Role::Cop && strategyId == "four-cop")
                return doubleTreeFourCop(spec.n, spec.m);
            if (role == Role::Robber && strategyId == "stay-left")
                return doubleTreeStayLeft(spec.n, spec.m);
            break;
        case FamilyId::NonCopMon:
            if (role == Role::Cop && strategyId == "four-cop")
                return ncmFourCop(spec.n, spec.branching, spec.depth);
            if (role == Role::Robber && strategyId == "anti-copmono")
                return ncmAntiCopMono(spec.n, spec.branching, spec.depth);
            break;
    }
    throw InputError("scriptedStrategy: unsupported combination " + familyName(spec.id) + "/" +
                     strategyId);
}

}  // namespace gsearch
