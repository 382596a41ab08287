#include "gsearch/digraph.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace gsearch {

Digraph::Digraph(std::size_t n, std::vector<std::string> labels)
    : out_(n, VertexSet(n)), in_(n, VertexSet(n)), labels_(std::move(labels)) {
    if (labels_.empty()) {
        labels_.reserve(n);
        for (std::size_t v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
    }
    if (labels_.size() != n) throw InputError("label count does not match vertex count");
}

void Digraph::addEdge(std::size_t u, std::size_t v) {
    if (u >= n() || v >= n()) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("loop edge (" + labels_[u] + "," + labels_[v] + ") not allowed");
    if (out_[u].contains(v))
        throw InputError("duplicate edge (" + labels_[u] + "," + labels_[v] + ")");
    out_[u].add(v);
    in_[v].add(u);
    ++edgeCount_;
}

std::size_t Digraph::vertexByLabel(const std::string& label) const {
    for (std::size_t v = 0; v < n(); ++v)
        if (labels_[v] == label) return v;
    throw InputError("unknown vertex label: " + label);
}

VertexSet Digraph::reachFrom(const VertexSet& X) const {
    return reachAvoiding(X, emptySet());
}

VertexSet Digraph::reachAvoiding(const VertexSet& X, const VertexSet& removed) const {
    if (!X.subsetOf(allVertices())) throw InputError("source set exceeds vertex range");
    VertexSet seen = X - removed;
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(n());
        frontier.forEach([&](std::size_t v) { next |= out_[v]; });
        next -= removed;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

namespace {

// Iterative Tarjan over the subgraph G - removed.
struct TarjanState {
    const Digraph& g;
    const VertexSet& removed;
    std::vector<int> index, low;
    std::vector<bool> onStack;
    std::vector<std::size_t> stack;
    int counter = 0;
    std::vector<VertexSet> comps;

    TarjanState(const Digraph& g, const VertexSet& removed)
        : g(g), removed(removed), index(g.n(), -1), low(g.n(), 0), onStack(g.n(), false) {}

    void run(std::size_t root) {
        struct Frame {
            std::size_t v;
            std::vector<std::size_t> succ;
            std::size_t next = 0;
        };
        std::vector<Frame> frames;
        frames.push_back({root, (g.outNeighbors(root) - removed).toVector()});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        onStack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < f.succ.size()) {
                std::size_t w = f.succ[f.next++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    onStack[w] = true;
                    frames.push_back({w, (g.outNeighbors(w) - removed).toVector()});
                } else if (onStack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    VertexSet comp(g.n());
                    std::size_t w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        onStack[w] = false;
                        comp.add(w);
                    } while (w != f.v);
                    comps.push_back(comp);
                }
                std::size_t v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
};

}  // namespace

std::vector<VertexSet> Digraph::sccsAvoiding(const VertexSet& removed) const {
    TarjanState t(*this, removed);
    for (std::size_t v = 0; v < n(); ++v)
        if (!removed.contains(v) && t.index[v] < 0) t.run(v);
    std::sort(t.comps.begin(), t.comps.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    return t.comps;
}

VertexSet Digraph::sccOf(std::size_t v, const VertexSet& removed) const {
    if (removed.contains(v)) return emptySet();
    // v's strong component = (forward reach of v) ∩ (backward reach of v).
    VertexSet fwd = reachAvoiding(VertexSet::of(n(), {v}), removed);
    VertexSet bwd = VertexSet::of(n(), {v});
    VertexSet frontier = bwd;
    while (!frontier.empty()) {
        VertexSet next(n());
        frontier.forEach([&](std::size_t u) { next |= in_[u]; });
        next -= removed;
        next -= bwd;
        bwd |= next;
        frontier = next;
    }
    return fwd & bwd;
}

Digraph Digraph::induced(const VertexSet& X) const {
    if (!X.subsetOf(allVertices())) throw InputError("induced set exceeds vertex range");
    std::vector<std::size_t> keep = X.toVector();
    std::vector<std::string> labels;
    std::map<std::size_t, std::size_t> remap;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        remap[keep[i]] = i;
        labels.push_back(labels_[keep[i]]);
    }
    Digraph h(keep.size(), labels);
    for (std::size_t u : keep)
        (out_[u] & X).forEach([&](std::size_t v) { h.addEdge(remap[u], remap[v]); });
    return h;
}

bool Digraph::operator==(const Digraph& o) const {
    // Structural equality on labels: id assignment is an internal detail, so
    // graphs are equal when their labeled vertex and edge sets coincide.
    if (n() != o.n() || edgeCount_ != o.edgeCount_) return false;
    auto mine = labels_;
    auto theirs = o.labels_;
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    if (mine != theirs) return false;
    for (std::size_t u = 0; u < n(); ++u) {
        bool ok = true;
        out_[u].forEach([&](std::size_t v) {
            if (!o.hasEdge(o.vertexByLabel(labels_[u]), o.vertexByLabel(labels_[v]))) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

Digraph parseGraph(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw InputError("graph JSON must be an object with 'vertices' and 'edges'");
    std::vector<std::string> labels;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw InputError("vertex names must be strings");
        labels.push_back(v.get<std::string>());
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t k = i + 1; k < labels.size(); ++k)
            if (labels[i] == labels[k]) throw InputError("duplicate vertex name: " + labels[i]);
    Digraph g(labels.size(), labels);
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair");
        g.addEdge(g.vertexByLabel(e[0].get<std::string>()),
                  g.vertexByLabel(e[1].get<std::string>()));
    }
    return g;
}

std::string serializeGraph(const Digraph& g) {
    std::vector<std::size_t> order(g.n());
    for (std::size_t v = 0; v < g.n(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.label(a) < g.label(b);
    });
    nlohmann::json verts = nlohmann::json::array();
    for (std::size_t v : order) verts.push_back(g.label(v));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t u = 0; u < g.n(); ++u)
        g.outNeighbors(u).forEach(
            [&](std::size_t v) { edges.emplace_back(g.label(u), g.label(v)); });
    std::sort(edges.begin(), edges.end());
    nlohmann::json es = nlohmann::json::array();
    for (const auto& [a, b] : edges) es.push_back({a, b});
    nlohmann::json j;
    j["vertices"] = verts;
    j["edges"] = es;
    return j.dump();
}

std::string toDot(const Digraph& g) {
    std::string out = "digraph G {\n";
    for (std::size_t v = 0; v < g.n(); ++v)
        out += "  \"" + g.label(v) + "\";\n";
    for (std::size_t u = 0; u < g.n(); ++u)
        g.outNeighbors(u).forEach([&](std::size_t v) {
            out += "  \"" + g.label(u) + "\" -> \"" + g.label(v) + "\";\n";
        });
    return out + "}\n";
}

}  // namespace gsearch
