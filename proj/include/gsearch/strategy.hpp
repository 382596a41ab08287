#ifndef GSEARCH_STRATEGY_HPP
#define GSEARCH_STRATEGY_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gsearch/arena.hpp"

namespace gsearch {

// Opaque strategy memory.  key() must injectively describe the memory
// content: it is used to detect repeated (position, memory) pairs, i.e.
// infinite plays, during verification.
struct StrategyMemory {
    virtual ~StrategyMemory() = default;
    virtual std::string key() const = 0;
};

using MemoryPtr = std::shared_ptr<const StrategyMemory>;

// Trivial memory for positional strategies.
struct NoMemory final : StrategyMemory {
    std::string key() const override { return ""; }
};

// Deterministic strategy with explicit memory.
//
// Cop programs are stepped on states without a pending announcement and
// return the next cop set C'.  Robber programs are stepped on mid-round
// states (announcement present) and return the next robber component; they
// are additionally stepped once at the very start, on a state whose robber
// set is empty, to pick the initial component.
struct StrategyProgram {
    enum class Role { Cop, Robber };

    Role role = Role::Cop;
    std::size_t declaredCopBound = 0;
    MemoryPtr memoryInit = std::make_shared<NoMemory>();
    std::function<std::pair<VertexSet, MemoryPtr>(const MemoryPtr&, const AugmentedState&)> step;
};

struct TraceStep {
    std::string actor;  // "cops" / "robber" / "note"
    VertexSet move;
    std::string note;
};

enum class Winner { Cops, Robber };

// Outcome of solving or verifying.
struct Verdict {
    Winner winner = Winner::Robber;
    std::size_t peakCops = 0;
    bool monotoneOk = true;
    std::vector<TraceStep> trace;  // non-empty iff robber wins or monotonicity failed
    std::size_t statesExplored = 0;
};

std::string verdictToJson(const Digraph& g, const Verdict& v);

}  // namespace gsearch

#endif  // GSEARCH_STRATEGY_HPP
