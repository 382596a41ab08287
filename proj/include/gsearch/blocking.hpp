#ifndef GSEARCH_BLOCKING_HPP
#define GSEARCH_BLOCKING_HPP

#include "gsearch/digraph.hpp"

namespace gsearch {

// Every directed path from R to M (including length-0 paths) contains a
// vertex of X.  Unlike blocks() this allows X to overlap R: a path starting
// inside X counts as intercepted at its first vertex.
bool interceptsAllPaths(const Digraph& g, const VertexSet& X, const VertexSet& R,
                        const VertexSet& M);

// X blocks R -> M: X ∩ R = ∅ and every directed path from R to M meets X.
// When R ∩ M ≠ ∅ the length-0 path cannot be blocked, so the answer is false.
bool blocks(const Digraph& g, const VertexSet& X, const VertexSet& R, const VertexSet& M);

// The unique inclusion-minimal subset of X blocking R -> X: the X-vertices
// reachable from R by paths internally avoiding X.  Requires R ∩ X = ∅.
VertexSet front(const Digraph& g, const VertexSet& R, const VertexSet& X);

// Minimum cardinality over all X with blocks(X, R, M); 0 when no path exists.
// Throws InputError when no finite blocker exists (R ∩ M ≠ ∅).
std::size_t minVertexCutSize(const Digraph& g, const VertexSet& R, const VertexSet& M);

// Blocker preorder: A precedes B iff |A| < |B|, or |A| = |B| and A blocks
// B -> M.  Both arguments must block R -> M.
bool precedes(const Digraph& g, const VertexSet& R, const VertexSet& M, const VertexSet& A,
              const VertexSet& B);

// The unique minimal blocker of R -> M under the preorder: minimum
// cardinality, and it blocks every other minimum-cardinality blocker -> M.
// Computed as the minimum vertex cut closest to M (vertex-split max-flow,
// cut read off the sink side of the residual network).
VertexSet mb(const Digraph& g, const VertexSet& R, const VertexSet& M);

}  // namespace gsearch

#endif  // GSEARCH_BLOCKING_HPP
