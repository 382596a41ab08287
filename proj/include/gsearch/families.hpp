#ifndef GSEARCH_FAMILIES_HPP
#define GSEARCH_FAMILIES_HPP

#include <optional>
#include <string>

#include "gsearch/strategy.hpp"

namespace gsearch {

// Counterexample graph families.  All generators are deterministic: the same
// spec always yields the same graph with the same canonical vertex labels.
enum class FamilyId { NonCopMon, GuardingSeq, LeavingCops, DoubleTree, DwGameFails, DtwOtw };

struct FamilySpec {
    FamilyId id = FamilyId::DtwOtw;
    std::size_t n = 1;
    std::size_t m = 1;
    // NonCopMon: override the branching degree / depth of the internal trees
    // (the defaults grow with n and are astronomically large).
    std::optional<std::size_t> branching;
    std::optional<std::size_t> depth;
    // DtwOtw: use the word-set definition instead of the recursion (the two
    // disagree; both are useful).
    bool formal = false;
};

FamilyId parseFamilyId(const std::string& name);
std::string familyName(FamilyId id);

Digraph genFamily(const FamilySpec& spec);

// Recursive family where four cops win the component game but cop-monotone
// cops need unboundedly many: a hierarchy of bidirected trees whose leaves
// carry n sub-copies, entered from the i-th vertex of the root-to-leaf path
// and leaving back to the leaf.  branching/depth shrink the trees; the
// defaults are n+1 / n+2.
Digraph genNonCopMon(std::size_t n, std::optional<std::size_t> branching = {},
                     std::optional<std::size_t> depth = {});

// Family where winning with the least cops requires two guard moves in a
// row: a hub c0 over n parts, each a 5-clique (2+3) over n pockets holding a
// 3-clique R, a single g0 and a 2-clique g1 with one-way escapes upward.
Digraph genGuardingSeq(std::size_t n);

// Family where retaining every robber-reachable cop blows the cop count up:
// n levels of cliques C_i (2m) over R_i (3m) over independent sets A_i (m),
// with A_i feeding back into the top clique C_n and all lower A_j.
Digraph genLeavingCops(std::size_t n, std::size_t m);

// Double tree: a bidirected tree and a one-way-up copy, with arcs from every
// vertex to its copy and from every copy back to the original's parent.
// Four unrestricted cops win; cops confined to the robber's component need
// at least branching+1.  Trees have branching n and m+1 levels.
Digraph genDoubleTree(std::size_t n, std::size_t m);

// Family separating the component-game measures from D-width: a bidirected
// tree over alphabet n^2 with downward transitive closure, a one-way-up tree
// over alphabet n, and cross arcs from each big word to its digit-quotient
// copy and from that copy back to the word's parent.
Digraph genDwGameFails(std::size_t n);

// Recursive bidirected tree with arcs from each child to all leaves of its
// smaller siblings; two cops win every component-game variant but oriented
// tree width grows.  formal = the word-set definition [depth]^{<=depth}
// (only depth is used there).
Digraph genDtwOtw(std::size_t branching, std::size_t depth, bool formal = false);

// Deterministic programs transcribed from the families' correctness
// arguments.  Supported ids:
//   NonCopMon:   cop "four-cop", robber "anti-copmono"
//   GuardingSeq: cop "multi-guard", robber "anti-single-guard"
//   LeavingCops: cop "sigma-n",   robber "switch-components"
//   DoubleTree:  cop "four-cop",  robber "stay-left"
//   DwGameFails: cop "parallel-descent"
//   DtwOtw:      cop "two-cop"
// Throws InputError on unsupported combinations.
StrategyProgram scriptedStrategy(const FamilySpec& spec, StrategyProgram::Role role,
                                 const std::string& strategyId);

}  // namespace gsearch

#endif  // GSEARCH_FAMILIES_HPP
