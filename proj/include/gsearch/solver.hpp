#ifndef GSEARCH_SOLVER_HPP
#define GSEARCH_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "gsearch/strategy.hpp"

namespace gsearch {

// Raised when the arena exploration exceeds the configured state budget.
// Never downgraded to an approximate answer.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Default 50 million augmented states, overridable via GSL_STATE_BUDGET.
std::size_t stateBudget();

// Exact decision: do k cops win variant v on g?  On a cop win the second
// member carries a positional strategy on the augmented arena (lexicographic
// least winning announcement, by bitset order).
struct SolveResult {
    bool copsWin = false;
    std::optional<StrategyProgram> strategy;
    std::size_t statesExplored = 0;
};
SolveResult copsWin(const Digraph& g, const GameVariant& v, std::size_t k);

// Least k <= kMax with a cop win; nullopt encodes ">kMax".
struct CopNumberResult {
    std::optional<std::size_t> value;
    std::size_t statesExplored = 0;
};
CopNumberResult copNumber(const Digraph& g, const GameVariant& v, std::size_t kMax);

// Runs the deterministic cop program against every robber reply.  Cops win
// iff every branch ends in capture with all monotonicity checks of v passing;
// otherwise the verdict carries a failing trace.  peakCops is the largest
// announced cop set anywhere in the explored tree.
Verdict verifyCopStrategy(const Digraph& g, const GameVariant& v, std::size_t k,
                          const StrategyProgram& s);

// Runs the deterministic robber program against every cop move sequence with
// <= k cops (memoized on augmented state + robber memory).  The robber wins
// iff no cop line captures him.
Verdict verifyRobberStrategy(const Digraph& g, const GameVariant& v, std::size_t k,
                             const StrategyProgram& s);

}  // namespace gsearch

#endif  // GSEARCH_SOLVER_HPP
