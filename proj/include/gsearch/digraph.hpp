#ifndef GSEARCH_DIGRAPH_HPP
#define GSEARCH_DIGRAPH_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsearch/vertexset.hpp"

namespace gsearch {

// Raised on malformed input (bad JSON, loops, duplicate edges, unknown
// vertices, invalid decompositions, ...).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite simple directed graph.  Vertices are dense ids 0..n-1; the optional
// string labels are only consulted at the I/O boundary.  Immutable once
// built; all queries are pure.
class Digraph {
public:
    Digraph() = default;

    explicit Digraph(std::size_t n, std::vector<std::string> labels = {});

    // Throws InputError on loops and duplicate edges.
    void addEdge(std::size_t u, std::size_t v);

    std::size_t n() const { return out_.size(); }
    std::size_t edgeCount() const { return edgeCount_; }

    const VertexSet& outNeighbors(std::size_t v) const { return out_[v]; }
    const VertexSet& inNeighbors(std::size_t v) const { return in_[v]; }
    bool hasEdge(std::size_t u, std::size_t v) const { return out_[u].contains(v); }

    const std::string& label(std::size_t v) const { return labels_[v]; }
    // Id of the vertex with the given label; throws InputError when unknown.
    std::size_t vertexByLabel(const std::string& label) const;

    VertexSet allVertices() const { return VertexSet::full(n()); }
    VertexSet emptySet() const { return VertexSet(n()); }

    // All vertices reachable from X along directed paths, including X itself.
    VertexSet reachFrom(const VertexSet& X) const;

    // Reachability in the induced subgraph G - removed.  Sources in `removed`
    // are dropped before the sweep.
    VertexSet reachAvoiding(const VertexSet& X, const VertexSet& removed) const;

    // Strongly connected components of G - removed, restricted to `within`
    // when given; deterministic order by least vertex id.
    std::vector<VertexSet> sccsAvoiding(const VertexSet& removed) const;
    std::vector<VertexSet> sccs() const { return sccsAvoiding(emptySet()); }

    // Strong component of G - removed containing v; empty set when v is
    // removed.
    VertexSet sccOf(std::size_t v, const VertexSet& removed) const;

    // Induced subgraph G[X].  Vertices are renumbered densely in ascending
    // id order; labels carried over.
    Digraph induced(const VertexSet& X) const;

    bool operator==(const Digraph& o) const;

private:
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
    std::vector<std::string> labels_;
    std::size_t edgeCount_ = 0;
};

// graph-JSON codec:
//   {"vertices":["a","b",...],"edges":[["a","b"],...]}
// Vertices keep their listed order for id assignment; serialization emits a
// canonical form (sorted labels, sorted edges) so equal graphs serialize
// byte-identically.
Digraph parseGraph(const std::string& text);
std::string serializeGraph(const Digraph& g);

// DOT export, one arrow per directed edge, for eyeballing instances.
std::string toDot(const Digraph& g);

}  // namespace gsearch

#endif  // GSEARCH_DIGRAPH_HPP
