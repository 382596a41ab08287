#ifndef GSEARCH_DECOMP_HPP
#define GSEARCH_DECOMP_HPP

#include <string>
#include <utility>
#include <vector>

#include "gsearch/digraph.hpp"
#include "gsearch/strategy.hpp"

namespace gsearch {

// Rooted/oriented tree skeleton shared by all decomposition kinds.  Edges are
// directed; for the rooted kinds they point away from the root.
struct DecompTree {
    std::vector<std::string> names;  // node index -> display name
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::size_t root = 0;

    std::size_t n() const { return names.size(); }
    std::vector<std::vector<std::size_t>> childrenOf() const;
    std::vector<std::vector<std::size_t>> undirectedAdj() const;
    // Throws InputError unless the undirected skeleton is a tree.
    void requireTree() const;
};

// A tree plus one bag per node.  `kind` selects which invariants apply:
//  - "shy":      bags = cop placements, `robber` = robber spaces (both per node)
//  - "d", "ds":  bags only, tree rooted
//  - "oriented": bags plus `covered`, the graph edges assigned to the tree part
struct Decomposition {
    std::string kind;
    DecompTree tree;
    std::vector<VertexSet> bags;
    std::vector<VertexSet> robber;                             // "shy" only
    std::vector<std::pair<std::size_t, std::size_t>> covered;  // "oriented" only

    std::size_t width() const;
};

struct ValidationResult {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks the four defining conditions of the chaser/guard tree decomposition:
// the root space is all of V; each child space is a strong component of the
// parent space minus its chasers; the spaces of the children together with the
// chasers cover the parent space; and no child space reaches a chaser of an
// ancestor while avoiding the cops kept in place across the edge.
ValidationResult validateShyDecomp(const Digraph& g, const Decomposition& d);

// Every strongly connected vertex set must touch a connected part of the
// undirected tree skeleton.  Exponential in |V| (subset enumeration); capped.
ValidationResult validateD(const Digraph& g, const Decomposition& d);

// Cover, per-vertex connectivity, and for each tree edge (s,t) the set
// X_{>=t} \ X_s must be a union of strong components of G - (X_s ∩ X_t).
ValidationResult validateDS(const Digraph& g, const Decomposition& d);

// The undirected skeleton with the bags must be a tree decomposition of the
// covered edges, and every uncovered (shortcut) edge (u,v) needs a directed
// tree path from every bag containing u to every bag containing v.
ValidationResult validateOriented(const Digraph& g, const Decomposition& d);

// Subdivide every tree edge (s,t) with a fresh node carrying X_s ∪ X_t.
// Turns a valid "d" decomposition into a valid "ds" one of at most twice
// the width.
Decomposition dToDS(const Digraph& g, const Decomposition& d);

// Canonical maximal assignment: an edge is covered iff both endpoints share a
// bag; everything else is a shortcut.
std::pair<std::vector<std::pair<std::size_t, std::size_t>>,
          std::vector<std::pair<std::size_t, std::size_t>>>
coveredEdgePartition(const Digraph& g, const DecompTree& tree,
                     const std::vector<VertexSet>& bags);

// Re-root an oriented decomposition: orient all tree edges away from `root`
// and reinterpret it as a "ds" decomposition with the same bags and width.
Decomposition orientedToDS(const Decomposition& d, std::size_t root);

// Unfold a winning cop program for the weakly monotone component game into a
// "shy" decomposition: one node per announcement, children per robber reply.
Decomposition strategyToShyDecomp(const Digraph& g, const StrategyProgram& s);

// Play back a "shy" decomposition: walk the tree, announcing the child bag
// that matches the robber's chosen space.
StrategyProgram shyDecompToStrategy(const Digraph& g, const Decomposition& d);

// Walk a "ds" decomposition top-down, always occupying one bag in full; wins
// the component game both cop- and robber-monotonically with `width` cops.
StrategyProgram dsToStrategy(const Digraph& g, const Decomposition& d);

// `order` lists vertex ids from least to greatest.  The support of v is the
// set of greater vertices with an in-edge from the part of the graph v can
// reach using only vertices not greater than v.
VertexSet suppOf(const Digraph& g, const std::vector<std::size_t>& order, std::size_t v);

// max |supp| over all vertices; the elimination-style width of the order.
std::size_t eliminationWidth(const Digraph& g, const std::vector<std::size_t>& order);

struct KellyResult {
    std::size_t width = 0;                // minimum eliminationWidth
    std::vector<std::size_t> order;       // witness order, least first
    std::size_t kellyWidth() const { return width + 1; }
};

// Exact minimum over all orders by dynamic programming over the set of
// already-placed greater vertices.  Capped at 20 vertices.
KellyResult kellyWidthExact(const Digraph& g);

Decomposition parseDecomp(const std::string& text, const Digraph& g);
std::string serializeDecomp(const Decomposition& d, const Digraph& g);

}  // namespace gsearch

#endif  // GSEARCH_DECOMP_HPP
