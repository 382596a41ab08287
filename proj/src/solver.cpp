#include "gsearch/solver.hpp"

#include <cstdlib>
#include <functional>
#include <memory>
#include <unordered_map>
#include <unordered_set>

namespace gsearch {

std::size_t stateBudget() {
    if (const char* env = std::getenv("GSL_STATE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 50'000'000;
}

namespace {

// Arena node: cop-turn position plus the variant-relevant memory projection
// (vacated set for cop-monotone, past chasers for weak, nothing otherwise).
struct NodeKey {
    VertexSet C, R, mem;
    bool guardFlag = false;
    bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const {
        std::size_t h = k.C.hash();
        h = h * 1000003u ^ k.R.hash();
        h = h * 1000003u ^ k.mem.hash();
        return h * 2u + (k.guardFlag ? 1 : 0);
    }
};

struct TransitKey {
    VertexSet t;
    std::size_t v;
    bool operator==(const TransitKey&) const = default;
};

struct TransitKeyHash {
    std::size_t operator()(const TransitKey& k) const { return k.t.hash() * 1000003u ^ k.v; }
};

// All subsets of {0..n-1} of size <= k, ascending by bitset (word) order.
std::vector<VertexSet> allCopMoves(std::size_t n, std::size_t k, std::size_t budget) {
    std::vector<VertexSet> out;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        VertexSet s(n);
        for (auto v : pick) s.add(v);
        out.push_back(s);
        if (out.size() > budget)
            throw BudgetExceeded("cop move space exceeds the state budget");
        if (pick.size() == k) return;
        for (std::size_t v = start; v < n; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

class Solver {
public:
    Solver(Digraph g, GameVariant v, std::size_t k)
        : g_(std::move(g)), v_(v), k_(k), budget_(stateBudget()) {
        moves_ = allCopMoves(g_.n(), k_, budget_);
        // With remove-only cop moves pruned (dominated: folding a removal
        // into the next placement only shrinks the robber's options), every
        // move adds a vertex outside C ∪ vacated in the cop-monotone games,
        // so those arenas are acyclic and plain memoized DFS is exact.
        acyclic_ = v_.monotonicity == Monotonicity::CopMonoReach;
    }

    const Digraph& graph() const { return g_; }
    std::size_t explored() const { return memo_.size() + marks_.size(); }

    bool copsWinAll() {
        bool all = true;
        for (const VertexSet& R0 : g_.sccs())
            if (!winsFrom(rootKey(R0))) all = false;
        return all;
    }

    NodeKey keyOf(const AugmentedState& s) const {
        NodeKey k;
        k.C = s.position.cops;
        k.R = s.position.robber;
        k.mem = memProjection(s);
        if (v_.noConsecutiveGuardMoves) k.guardFlag = s.lastMoveWasGuardOnly;
        return k;
    }

    // The move recorded when the node was proven won.  Its children were all
    // already proven at that moment, so following witnesses strictly descends
    // in proof order and the play cannot cycle.
    std::optional<VertexSet> winningMove(const AugmentedState& s) {
        NodeKey key = keyOf(s);
        if (!winsFrom(key)) return std::nullopt;
        return witness_.at(key);
    }

    bool winsFrom(const NodeKey& key) {
        if (acyclic_) return dfs(key);
        if (!iterDone_) {
            registerNode(key);
            runIteration();
        }
        auto it = marks_.find(key);
        if (it == marks_.end()) {
            // A node outside the explored region (fresh query): restart the
            // fixpoint with it registered.
            registerNode(key);
            runIteration();
            it = marks_.find(key);
        }
        return it->second == 1;
    }

private:
    VertexSet memProjection(const AugmentedState& s) const {
        switch (v_.monotonicity) {
            case Monotonicity::CopMonoReach: return s.vacated;
            case Monotonicity::Weak: return s.pastChasers;
            default: return g_.emptySet();
        }
    }

    NodeKey rootKey(const VertexSet& R0) const {
        return NodeKey{g_.emptySet(), R0, g_.emptySet(), false};
    }

    const std::vector<VertexSet>& compsOf(const VertexSet& Cnew) {
        auto it = compsCache_.find(Cnew);
        if (it == compsCache_.end())
            it = compsCache_.emplace(Cnew, g_.sccsAvoiding(Cnew)).first;
        return it->second;
    }

    const VertexSet& sccOfCached(const VertexSet& transit, std::size_t v) {
        TransitKey key{transit, v};
        auto it = sccCache_.find(key);
        if (it == sccCache_.end()) it = sccCache_.emplace(key, g_.sccOf(v, transit)).first;
        return it->second;
    }

    // Evaluate a cop node against a child oracle.  Announcements are tried in
    // ascending bitset order, so the first winning one is the canonical
    // extracted move.
    bool evalNode(const NodeKey& key, const std::function<bool(const NodeKey&)>& childWins,
                  std::optional<VertexSet>* chosen) {
        for (const VertexSet& Cnew : moves_) {
            if (Cnew.subsetOf(key.C)) continue;  // dominated remove-only move
            VertexSet added = Cnew - key.C;
            if (v_.placement == PlacementRestriction::RobberComponentOnly &&
                !added.subsetOf(key.R))
                continue;
            if (v_.oneNewCopPerMove && added.count() > 1) continue;
            VertexSet chasers = Cnew & key.R;
            bool guardOnly = chasers.empty() && !(added - chasers).empty();
            if (v_.noConsecutiveGuardMoves && key.guardFlag && guardOnly) continue;
            if (v_.monotonicity == Monotonicity::CopMonoReach && Cnew.intersects(key.mem))
                continue;
            VertexSet transit = key.C & Cnew;
            if (v_.monotonicity == Monotonicity::Weak &&
                key.mem.intersects(g_.reachAvoiding(key.R, transit)))
                continue;

            bool moveWins = true;
            bool any = false;
            if (v_.moveRule == MoveRule::Component) {
                const VertexSet& S = sccOfCached(transit, key.R.first());
                for (const VertexSet& Rnew : compsOf(Cnew)) {
                    if (!Rnew.subsetOf(S)) continue;
                    any = true;
                    if (!childOk(key, Cnew, chasers, guardOnly, transit, Rnew, childWins)) {
                        moveWins = false;
                        break;
                    }
                }
            } else {
                VertexSet area = g_.reachAvoiding(key.R, transit);
                for (const VertexSet& Rnew : compsOf(Cnew)) {
                    if (!Rnew.intersects(area)) continue;
                    any = true;
                    if (!childOk(key, Cnew, chasers, guardOnly, transit, Rnew, childWins)) {
                        moveWins = false;
                        break;
                    }
                }
            }
            if (moveWins) {  // covers capture (no successor at all)
                (void)any;
                if (chosen) *chosen = Cnew;
                return true;
            }
        }
        return false;
    }

    bool childOk(const NodeKey& key, const VertexSet& Cnew, const VertexSet& chasers,
                 bool guardOnly, const VertexSet& transit, const VertexSet& Rnew,
                 const std::function<bool(const NodeKey&)>& childWins) {
        // Robber-side monotonicity: a violating reply is an immediate robber
        // win, so the whole announcement fails.
        if (v_.monotonicity == Monotonicity::RobberMonoComp && !Rnew.subsetOf(key.R))
            return false;
        if (v_.monotonicity == Monotonicity::RobberMonoReach &&
            !g_.reachAvoiding(Rnew, transit).subsetOf(g_.reachAvoiding(key.R, transit)))
            return false;
        NodeKey child;
        child.C = Cnew;
        child.R = Rnew;
        switch (v_.monotonicity) {
            case Monotonicity::CopMonoReach: child.mem = key.mem | (key.C - Cnew); break;
            case Monotonicity::Weak: child.mem = key.mem | chasers; break;
            default: child.mem = g_.emptySet();
        }
        if (v_.noConsecutiveGuardMoves) child.guardFlag = guardOnly;
        return childWins(child);
    }

    bool dfs(const NodeKey& key) {
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        if (explored() > budget_) throw BudgetExceeded("solver state budget exceeded");
        std::optional<VertexSet> chosen;
        bool w = evalNode(key, [&](const NodeKey& child) { return dfs(child); }, &chosen);
        memo_[key] = w;
        if (w) witness_[key] = *chosen;
        return w;
    }

    void registerNode(const NodeKey& key) {
        if (marks_.try_emplace(key, 0).second) {
            registry_.push_back(key);
            if (explored() > budget_) throw BudgetExceeded("solver state budget exceeded");
        }
    }

    // Least-fixpoint value iteration: unknown counts as a robber win until
    // proven otherwise, so the limit is exactly the cop attractor.
    void runIteration() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < registry_.size(); ++i) {
                NodeKey key = registry_[i];
                if (marks_[key] == 1) continue;
                std::optional<VertexSet> chosen;
                bool w = evalNode(
                    key,
                    [&](const NodeKey& child) {
                        auto [it, fresh] = marks_.try_emplace(child, 0);
                        if (fresh) {
                            registry_.push_back(child);
                            changed = true;
                            if (explored() > budget_)
                                throw BudgetExceeded("solver state budget exceeded");
                            return false;
                        }
                        return it->second == 1;
                    },
                    &chosen);
                if (w) {
                    marks_[key] = 1;
                    witness_[key] = *chosen;
                    changed = true;
                }
            }
        }
        iterDone_ = true;
    }

    Digraph g_;
    GameVariant v_;
    std::size_t k_;
    std::size_t budget_;
    bool acyclic_;
    bool iterDone_ = false;
    std::vector<VertexSet> moves_;
    std::unordered_map<VertexSet, std::vector<VertexSet>, VertexSetHash> compsCache_;
    std::unordered_map<TransitKey, VertexSet, TransitKeyHash> sccCache_;
    std::unordered_map<NodeKey, bool, NodeKeyHash> memo_;
    std::unordered_map<NodeKey, char, NodeKeyHash> marks_;
    std::unordered_map<NodeKey, VertexSet, NodeKeyHash> witness_;
    std::vector<NodeKey> registry_;
};

std::string setKey(const VertexSet& s) { return s.str(); }

// Key of the state projected to the fields the variant's rules can read, so
// memoization identifies states with identical futures.
std::string stateKey(const GameVariant& v, const AugmentedState& s) {
    std::string k = setKey(s.position.cops) + "/" + setKey(s.position.robber);
    if (v.monotonicity == Monotonicity::CopMonoReach) k += "/" + setKey(s.vacated);
    if (v.monotonicity == Monotonicity::Weak) k += "/" + setKey(s.pastChasers);
    if (v.noConsecutiveGuardMoves && s.lastMoveWasGuardOnly) k += "/g";
    return k;
}

}  // namespace

SolveResult copsWin(const Digraph& g, const GameVariant& v, std::size_t k) {
    if (g.n() > 64) throw InputError("solver handles at most 64 vertices");
    auto solver = std::make_shared<Solver>(g, v, k);
    SolveResult res;
    res.copsWin = solver->copsWinAll();
    res.statesExplored = solver->explored();
    if (res.copsWin) {
        StrategyProgram s;
        s.role = StrategyProgram::Role::Cop;
        s.declaredCopBound = k;
        s.step = [solver](const MemoryPtr& mem,
                          const AugmentedState& st) -> std::pair<VertexSet, MemoryPtr> {
            auto mv = solver->winningMove(st);
            if (!mv)
                throw InputError("extracted strategy queried on a losing position " +
                                 st.position.cops.str() + "/" + st.position.robber.str());
            return {*mv, mem};
        };
        res.strategy = std::move(s);
    }
    return res;
}

CopNumberResult copNumber(const Digraph& g, const GameVariant& v, std::size_t kMax) {
    CopNumberResult out;
    for (std::size_t k = 1; k <= kMax; ++k) {
        SolveResult r = copsWin(g, v, k);
        out.statesExplored += r.statesExplored;
        if (r.copsWin) {
            out.value = k;
            return out;
        }
    }
    return out;
}

Verdict verifyCopStrategy(const Digraph& g, const GameVariant& v, std::size_t k,
                          const StrategyProgram& s) {
    if (s.role != StrategyProgram::Role::Cop)
        throw InputError("verifyCopStrategy needs a cop program");
    Verdict verdict;
    verdict.winner = Winner::Cops;
    std::size_t budget = stateBudget();
    std::unordered_map<std::string, bool> memo;  // only capture-subtrees cached
    std::unordered_set<std::string> onPath;
    std::vector<TraceStep>& trace = verdict.trace;

    std::function<bool(const AugmentedState&, const MemoryPtr&)> go =
        [&](const AugmentedState& st, const MemoryPtr& mem) -> bool {
        std::string key = stateKey(v, st) + "|" + mem->key();
        if (memo.count(key)) return true;
        if (!onPath.insert(key).second) {
            trace.push_back({"note", st.position.robber, "position repeats: infinite play"});
            return false;
        }
        if (++verdict.statesExplored > budget)
            throw BudgetExceeded("verification state budget exceeded");
        auto [Cnew, mem2] = s.step(mem, st);
        verdict.peakCops = std::max(verdict.peakCops, Cnew.count());
        trace.push_back({"cops", Cnew, ""});
        if (Cnew.count() > k) {
            trace.push_back({"note", Cnew, "announcement exceeds the cop bound"});
            return false;
        }
        MonStepResult ann = copAnnounce(v, g, st, Cnew);
        if (!ann.ok) {
            verdict.monotoneOk = false;
            trace.push_back({"note", Cnew, ann.violation});
            return false;
        }
        auto succs = robberSuccessors(v, g, st.position.cops, Cnew, st.position.robber);
        for (const VertexSet& Rnew : succs) {
            trace.push_back({"robber", Rnew, ""});
            MonStepResult mv = robberMove(v, g, ann.next, Rnew);
            if (!mv.ok) {
                verdict.monotoneOk = false;
                trace.push_back({"note", Rnew, mv.violation});
                return false;
            }
            if (!go(mv.next, mem2)) return false;
            trace.pop_back();
        }
        trace.pop_back();
        onPath.erase(key);
        memo[key] = true;
        return true;
    };

    for (const VertexSet& R0 : g.sccs()) {
        trace.push_back({"robber", R0, "initial component"});
        if (!go(initialState(g, R0), s.memoryInit)) {
            verdict.winner = Winner::Robber;
            return verdict;
        }
        trace.pop_back();
    }
    verdict.trace.clear();
    return verdict;
}

Verdict verifyRobberStrategy(const Digraph& g, const GameVariant& v, std::size_t k,
                             const StrategyProgram& s) {
    if (s.role != StrategyProgram::Role::Robber)
        throw InputError("verifyRobberStrategy needs a robber program");
    Verdict verdict;
    verdict.winner = Winner::Robber;
    verdict.peakCops = k;
    std::size_t budget = stateBudget();
    std::vector<VertexSet> moves = allCopMoves(g.n(), k, budget);
    std::unordered_map<std::string, bool> memo;  // robber-win subtrees
    std::unordered_set<std::string> onPath;
    std::vector<TraceStep>& trace = verdict.trace;

    std::function<bool(const AugmentedState&, const MemoryPtr&)> go =
        [&](const AugmentedState& st, const MemoryPtr& mem) -> bool {
        std::string key = stateKey(v, st) + "|" + mem->key();
        if (memo.count(key)) return true;
        if (onPath.count(key)) return true;  // cop line loops: robber survives
        onPath.insert(key);
        if (++verdict.statesExplored > budget)
            throw BudgetExceeded("verification state budget exceeded");
        for (const VertexSet& Cnew : moves) {
            if (Cnew.subsetOf(st.position.cops)) continue;  // dominated cop move
            MonStepResult ann = copAnnounce(v, g, st, Cnew);
            if (!ann.ok) continue;  // cops lose this line outright
            auto succs = robberSuccessors(v, g, st.position.cops, Cnew, st.position.robber);
            if (succs.empty()) {
                trace.push_back({"cops", Cnew, "capture"});
                return false;
            }
            auto [Rnew, mem2] = s.step(mem, ann.next);
            MonStepResult mv = robberMove(v, g, ann.next, Rnew);
            if (!mv.ok) continue;  // play left the monotone set: robber wins
            trace.push_back({"cops", Cnew, ""});
            trace.push_back({"robber", Rnew, ""});
            if (!go(mv.next, mem2)) return false;
            trace.pop_back();
            trace.pop_back();
        }
        onPath.erase(key);
        memo[key] = true;
        return true;
    };

    // The robber picks the starting component: signalled by an empty robber set.
    AugmentedState pre = initialState(g, g.emptySet());
    auto [R0, mem0] = s.step(s.memoryInit, pre);
    bool legal = false;
    for (const VertexSet& comp : g.sccs())
        if (comp == R0) legal = true;
    if (!legal) throw InputError("robber program chose an invalid initial component");
    trace.push_back({"robber", R0, "initial component"});
    if (go(initialState(g, R0), mem0)) {
        verdict.trace.clear();
        return verdict;  // robber survives everything
    }
    verdict.winner = Winner::Cops;
    return verdict;
}

}  // namespace gsearch
