#include "gsearch/transforms.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gsearch/decomp.hpp"

namespace gsearch {

namespace {

const GameVariant kWeakReach{MoveRule::Reachability, Monotonicity::Weak};

std::string stKey(const AugmentedState& s) {
    std::string k = s.position.cops.str() + "/" + s.position.robber.str();
    if (s.position.announced) k += "/a" + s.position.announced->str();
    k += "/" + s.vacated.str() + "/" + s.pastChasers.str();
    if (s.lastMoveWasGuardOnly) k += "/g";
    return k;
}

// One step of a simulated play of the wrapped program: the arena state plus
// the wrapped program's memory at that point.
struct Shadow {
    AugmentedState state;
    MemoryPtr mem;

    std::string key() const { return stKey(state) + "#" + mem->key(); }
};

// Applies a robber move to a mid-round state, or nullopt when the move is not
// available (or rejected) there.
std::optional<AugmentedState> tryRobberMove(const GameVariant& v, const Digraph& g,
                                            const AugmentedState& mid, const VertexSet& Rnew) {
    auto succs = robberSuccessors(v, g, mid.position.cops, *mid.position.announced,
                                  mid.position.robber);
    if (std::find(succs.begin(), succs.end(), Rnew) == succs.end()) return std::nullopt;
    MonStepResult r = robberMove(v, g, mid, Rnew);
    if (!r.ok) return std::nullopt;
    return r.next;
}

AugmentedState mustAnnounce(const GameVariant& v, const Digraph& g, const AugmentedState& s,
                            const VertexSet& Cnew, const char* who) {
    MonStepResult r = copAnnounce(v, g, s, Cnew);
    if (!r.ok)
        throw InputError(std::string(who) + ": simulated move rejected: " + r.violation);
    return r.next;
}

AugmentedState mustRobberMove(const GameVariant& v, const Digraph& g, const AugmentedState& mid,
                              const VertexSet& Rnew, const char* who) {
    auto next = tryRobberMove(v, g, mid, Rnew);
    if (!next)
        throw InputError(std::string(who) + ": robber component " + Rnew.str() +
                         " has no counterpart in the simulated play");
    return *next;
}

std::string setsKey(const std::vector<VertexSet>& sets) {
    std::string k;
    for (const auto& s : sets) k += s.str() + ";";
    return k;
}

// ---------------------------------------------------------------------------
// minimallyBlocking

struct MbMemory final : StrategyMemory {
    bool started = false;
    Shadow shadow;  // mid-round when started (announcement pending)
    VertexSet prevBlocker;

    std::string key() const override {
        if (!started) return "mb:init";
        return "mb:" + shadow.key() + "|" + prevBlocker.str();
    }
};

// ---------------------------------------------------------------------------
// purify

struct PurifyMemory final : StrategyMemory {
    bool started = false;
    // Mid-round of the simulated play to which the next robber reply attaches;
    // absent before the first simulated announcement.
    std::optional<Shadow> mid;
    // Set while the guard half of a split announcement stands.
    bool guardPending = false;
    VertexSet pendingFull;            // the full mixed announcement
    VertexSet pendingRobber;          // robber component when the split began
    std::optional<Shadow> pendingPre;  // simulated state after that robber move, pre-announcement

    std::string key() const override {
        std::string k = "pf:";
        if (!started) return k + "init";
        k += mid ? mid->key() : "-";
        if (guardPending)
            k += "|G" + pendingFull.str() + "," + pendingRobber.str() + "," +
                 (pendingPre ? pendingPre->key() : "-");
        return k;
    }
};

// ---------------------------------------------------------------------------
// shySim

struct ShySimMemory final : StrategyMemory {
    bool started = false;
    // Mid-rounds of the simulated component-game play, in play order; the
    // last entry is the one the current real cop set derives from.
    std::vector<Shadow> hist;
    bool jumpPlaced = false;  // a target cop set stands on top of the old one
    VertexSet jumpTarget;     // the component the robber is being walled into

    std::string key() const override {
        if (!started) return "ss:init";
        std::string k = "ss:";
        for (const auto& h : hist) k += h.key() + ";";
        if (jumpPlaced) k += "|J" + jumpTarget.str();
        return k;
    }
};

// ---------------------------------------------------------------------------
// leavingCops / freezeContext / combineLcFreeze share the placement-shadow.

struct PlacementMemory final : StrategyMemory {
    std::string tag;
    bool started = false;
    Shadow shadow;  // mid-round of the simulated play
    std::vector<VertexSet> stack;

    std::string key() const override {
        if (!started) return tag + ":init";
        return tag + ":" + shadow.key() + "|" + setsKey(stack);
    }
};

// The robber set the wrapped program sees: the union of the components of
// G - P touched by the real robber set (on the simulated board the robber
// would roam that whole region).
VertexSet shadowRobber(const Digraph& g, const VertexSet& P, const VertexSet& Rreal) {
    VertexSet out(g.n());
    VertexSet free = Rreal - P;
    while (!free.empty()) {
        VertexSet comp = g.sccOf(free.first(), P);
        out |= comp;
        free -= comp;
    }
    return out.empty() ? Rreal : out;
}

// Queries the wrapped program on the simulated placement paired with the real
// robber position, then rolls the shadow forward to the returned placement.
std::pair<VertexSet, Shadow> placementQuery(const Digraph& g, const StrategyProgram& sigma,
                                            const Shadow& shadow, bool started,
                                            const VertexSet& Rreal) {
    AugmentedState cur = started ? shadow.state : initialState(g, Rreal);
    cur.position.robber = shadowRobber(g, cur.position.cops, Rreal);
    cur.position.announced.reset();
    MemoryPtr sm = started ? shadow.mem : sigma.memoryInit;
    auto [Csigma, sm2] = sigma.step(sm, cur);
    AugmentedState next = cur;
    next.vacated |= cur.position.cops - Csigma;
    next.pastChasers |= (Csigma - cur.position.cops) & cur.position.robber;
    next.position.cops = Csigma;
    return {Csigma, Shadow{next, sm2}};
}

// ---------------------------------------------------------------------------
// kellyToWeakStrategy

struct KellyMemory final : StrategyMemory {
    bool started = false;
    bool chasing = false;
    VertexSet blockers;
    std::size_t chaseTop = 0;  // greatest vertex of the walled component while chasing

    std::string key() const override {
        if (!started) return "kw:init";
        return "kw:" + blockers.str() + (chasing ? "|c" + std::to_string(chaseTop) : "");
    }
};

}  // namespace

VertexSet flapOf(const Digraph& g, const VertexSet& robber, const VertexSet& cops,
                 FlapMode mode) {
    if (mode == FlapMode::Component) return robber;
    return g.reachAvoiding(robber, cops);
}

StrategyProgram minimallyBlocking(const Digraph& g, const StrategyProgram& sigma) {
    if (sigma.role != StrategyProgram::Role::Cop)
        throw InputError("minimallyBlocking needs a cop program");
    StrategyProgram out;
    out.role = StrategyProgram::Role::Cop;
    out.declaredCopBound = 3 * sigma.declaredCopBound;
    out.memoryInit = std::make_shared<MbMemory>();
    GameVariant weakShy = componentWeak();
    out.step = [&g, sigma, weakShy](const MemoryPtr& mem, const AugmentedState& st)
        -> std::pair<VertexSet, MemoryPtr> {
        const auto& m = static_cast<const MbMemory&>(*mem);
        const VertexSet& R = st.position.robber;

        AugmentedState shadowPos;  // simulated state with the robber's reply applied
        MemoryPtr sm;
        VertexSet prevBlocker = g.emptySet();
        if (!m.started) {
            shadowPos = initialState(g, R);
            sm = sigma.memoryInit;
        } else {
            // The real component need not be a component of the simulated cop
            // set; follow the component of the simulated board containing it.
            const VertexSet& Csim = *m.shadow.state.position.announced;
            auto exact = tryRobberMove(weakShy, g, m.shadow.state, R);
            if (exact) {
                shadowPos = *exact;
            } else {
                VertexSet comp = g.sccOf(R.first(), Csim);
                if (!R.subsetOf(comp))
                    throw InputError("minimallyBlocking: robber left the simulated component");
                shadowPos = mustRobberMove(weakShy, g, m.shadow.state, comp, "minimallyBlocking");
            }
            sm = m.shadow.mem;
            prevBlocker = m.prevBlocker;
        }

        VertexSet pastM = shadowPos.pastChasers;
        auto [Csigma, sm2] = sigma.step(sm, shadowPos);
        VertexSet chasers = Csigma & shadowPos.position.robber;
        VertexSet blocker = mb(g, R, pastM);
        VertexSet announce = chasers | blocker | prevBlocker;

        auto m2 = std::make_shared<MbMemory>();
        m2->started = true;
        m2->shadow = {mustAnnounce(weakShy, g, shadowPos, Csigma, "minimallyBlocking"), sm2};
        m2->prevBlocker = blocker;
        return {announce, m2};
    };
    return out;
}

StrategyProgram purify(const Digraph& g, const StrategyProgram& sigma, const GameVariant& v) {
    if (sigma.role != StrategyProgram::Role::Cop)
        throw InputError("purify needs a cop program");
    StrategyProgram out;
    out.role = StrategyProgram::Role::Cop;
    out.declaredCopBound = sigma.declaredCopBound;
    out.memoryInit = std::make_shared<PurifyMemory>();
    out.step = [&g, sigma, v](const MemoryPtr& mem, const AugmentedState& st)
        -> std::pair<VertexSet, MemoryPtr> {
        const auto& m = static_cast<const PurifyMemory&>(*mem);
        const VertexSet& R = st.position.robber;

        // Resolve a standing guard half first.
        if (m.guardPending) {
            auto m2 = std::make_shared<PurifyMemory>(m);
            m2->guardPending = false;
            if (R.subsetOf(m.pendingRobber)) {
                // Robber stayed: complete the move with its chasing half.
                m2->mid = Shadow{mustAnnounce(v, g, m.pendingPre->state, m.pendingFull, "purify"),
                                 m.pendingPre->mem};
                return {m.pendingFull, m2};
            }
            // Robber changed component: retract the guards and replay his move
            // as if it had happened before the split.
            VertexSet retract = m.mid ? *m.mid->state.position.announced : g.emptySet();
            return {retract, m2};
        }

        // Attach the robber's position to the simulated play.
        AugmentedState pos;
        MemoryPtr sm;
        if (!m.started || !m.mid) {
            pos = initialState(g, R);
            sm = !m.started ? sigma.memoryInit : m.mid ? m.mid->mem : sigma.memoryInit;
        } else {
            pos = mustRobberMove(v, g, m.mid->state, R, "purify");
            sm = m.mid->mem;
        }

        auto [Csigma, sm2] = sigma.step(sm, pos);
        ChaserSplit cs = chaserSplit(g, pos.position.cops, Csigma, R);
        auto m2 = std::make_shared<PurifyMemory>();
        m2->started = true;
        m2->mid = m.mid;
        if (cs.chasers.empty() || cs.guards.empty()) {
            // Already pure; play it unchanged.
            m2->mid = Shadow{mustAnnounce(v, g, pos, Csigma, "purify"), sm2};
            return {Csigma, m2};
        }
        // Mixed: play everything except the new chasers first.  Relative to
        // the standing cops this places only guards (and removes cops).
        VertexSet guardHalf = Csigma - cs.chasers;
        m2->guardPending = true;
        m2->pendingFull = Csigma;
        m2->pendingRobber = R;
        m2->pendingPre = Shadow{pos, sm2};
        return {guardHalf, m2};
    };
    return out;
}

StrategyProgram shySim(const Digraph& g, const StrategyProgram& sigma) {
    if (sigma.role != StrategyProgram::Role::Cop)
        throw InputError("shySim needs a cop program");
    StrategyProgram out;
    out.role = StrategyProgram::Role::Cop;
    out.declaredCopBound = 2 * sigma.declaredCopBound;
    out.memoryInit = std::make_shared<ShySimMemory>();
    GameVariant shy = componentRobberMonoReach();

    // Advance the simulated component-game play one round: apply the robber's
    // reply, query the wrapped program, and append the new mid-round.
    auto advance = [&g, sigma, shy](std::vector<Shadow>& hist, const AugmentedState& pre,
                                    const MemoryPtr& sm) {
        auto [Csigma, sm2] = sigma.step(sm, pre);
        hist.push_back({mustAnnounce(shy, g, pre, Csigma, "shySim"), sm2});
    };

    // Walk the simulated play towards the component R, taking at each step
    // the reply that still contains R.  Terminates when R itself is on offer,
    // or when the pending announcement already reaches into R (the simulated
    // cops capture the region without R ever becoming a robber position).
    auto walk = [&g, shy, advance](std::vector<Shadow>& hist, const VertexSet& R) -> bool {
        std::size_t guardSteps = 0;
        for (;;) {
            const Shadow& cur = hist.back();
            auto opts = robberSuccessors(shy, g, cur.state.position.cops,
                                         *cur.state.position.announced,
                                         cur.state.position.robber);
            if (std::find(opts.begin(), opts.end(), R) != opts.end()) return true;
            if (cur.state.position.announced->intersects(R)) return true;
            const VertexSet* enclosing = nullptr;
            for (const auto& o : opts)
                if (R.subsetOf(o)) enclosing = &o;
            if (!enclosing) return false;
            AugmentedState pre = mustRobberMove(shy, g, cur.state, *enclosing, "shySim");
            advance(hist, pre, cur.mem);
            if (++guardSteps > 4 * g.n() * g.n() + 16)
                throw InputError("shySim: simulated play does not converge");
        }
    };

    // Rewind the simulated play to the last point whose robber component
    // contains R and walk towards R; failing that, restart the simulation
    // from scratch on the strong component enclosing R.
    auto steer = [&g, sigma, shy, walk](std::vector<Shadow>& hist, const VertexSet& R) {
        std::size_t base = hist.size();
        while (base > 0 && !R.subsetOf(hist[base - 1].state.position.robber)) --base;
        if (base > 0) {
            auto rewound = hist;
            rewound.resize(base);
            if (walk(rewound, R)) {
                hist = std::move(rewound);
                return;
            }
        }
        std::vector<Shadow> fresh;
        VertexSet comp = g.sccOf(R.first(), g.emptySet());
        AugmentedState st0 = initialState(g, comp);
        auto [Csigma, sm2] = sigma.step(sigma.memoryInit, st0);
        fresh.push_back({mustAnnounce(shy, g, st0, Csigma, "shySim"), sm2});
        if (!walk(fresh, R))
            throw InputError("shySim: component " + R.str() +
                             " is not realizable in the simulated play");
        hist = std::move(fresh);
    };

    out.step = [&g, sigma, shy, steer](const MemoryPtr& mem, const AugmentedState& st)
        -> std::pair<VertexSet, MemoryPtr> {
        const auto& m = static_cast<const ShySimMemory&>(*mem);
        const VertexSet& R = st.position.robber;

        if (!m.started) {
            auto m2 = std::make_shared<ShySimMemory>();
            m2->started = true;
            AugmentedState st0 = initialState(g, R);
            auto [Csigma, sm2] = sigma.step(sigma.memoryInit, st0);
            m2->hist.push_back({mustAnnounce(shy, g, st0, Csigma, "shySim"), sm2});
            return {Csigma, m2};
        }

        auto m2 = std::make_shared<ShySimMemory>(m);
        if (m.jumpPlaced) {
            m2->jumpPlaced = false;
            if (R == m.jumpTarget) {
                // The robber is walled in; release the stale cops, reaching
                // exactly the simulated position for his component.
                return {*m2->hist.back().state.position.announced, m2};
            }
            // He dodged during the wall-building move: re-target from the
            // released position, never stacking more than two cop sets.
            VertexSet held = *m2->hist.back().state.position.announced;
            steer(m2->hist, R);
            m2->jumpPlaced = true;
            m2->jumpTarget = R;
            return {held | *m2->hist.back().state.position.announced, m2};
        }

        // Aligned: the real cop set equals the last simulated announcement.
        auto direct = tryRobberMove(shy, g, m.hist.back().state, R);
        if (direct) {
            auto [Csigma, sm2] = sigma.step(m.hist.back().mem, *direct);
            m2->hist.push_back({mustAnnounce(shy, g, *direct, Csigma, "shySim"), sm2});
            return {Csigma, m2};
        }
        // The robber escaped his component: wall him in on top of the
        // standing cops, then release on the next move.
        VertexSet held = st.position.cops;
        steer(m2->hist, R);
        m2->jumpPlaced = true;
        m2->jumpTarget = R;
        return {held | *m2->hist.back().state.position.announced, m2};
    };
    return out;
}

StrategyProgram leavingCops(const Digraph& g, const StrategyProgram& sigma) {
    if (sigma.role != StrategyProgram::Role::Cop)
        throw InputError("leavingCops needs a cop program");
    StrategyProgram out;
    out.role = StrategyProgram::Role::Cop;
    out.declaredCopBound = sigma.declaredCopBound;
    auto init = std::make_shared<PlacementMemory>();
    init->tag = "lc";
    out.memoryInit = init;
    out.step = [&g, sigma](const MemoryPtr& mem, const AugmentedState& st)
        -> std::pair<VertexSet, MemoryPtr> {
        const auto& m = static_cast<const PlacementMemory&>(*mem);
        const VertexSet& R = st.position.robber;
        auto [Csigma, shadow2] = placementQuery(g, sigma, m.shadow, m.started, R);
        // Keep every cop still reachable from the robber; add the simulated
        // placement's cops lazily, only once they enter the front.
        VertexSet pool = (st.position.cops | Csigma) - R;
        VertexSet announce = front(g, R, pool) | (Csigma & R);

        auto m2 = std::make_shared<PlacementMemory>();
        m2->tag = "lc";
        m2->started = true;
        m2->shadow = shadow2;
        return {announce, m2};
    };
    return out;
}

StrategyProgram freezeContext(const Digraph& g, const StrategyProgram& sigma, FlapMode mode) {
    if (sigma.role != StrategyProgram::Role::Cop)
        throw InputError("freezeContext needs a cop program");
    StrategyProgram out;
    out.role = StrategyProgram::Role::Cop;
    out.declaredCopBound = sigma.declaredCopBound;
    auto init = std::make_shared<PlacementMemory>();
    init->tag = "fz";
    out.memoryInit = init;
    out.step = [&g, sigma, mode](const MemoryPtr& mem, const AugmentedState& st)
        -> std::pair<VertexSet, MemoryPtr> {
        const auto& m = static_cast<const PlacementMemory&>(*mem);
        const VertexSet& R = st.position.robber;

        auto m2 = std::make_shared<PlacementMemory>();
        m2->tag = "fz";
        m2->started = true;
        m2->stack = m.stack;
        while (!m2->stack.empty() && !R.subsetOf(m2->stack.back())) m2->stack.pop_back();

        auto [Csigma, shadow2] = placementQuery(g, sigma, m.shadow, m.started, R);
        VertexSet flap = flapOf(g, R, st.position.cops, mode);
        VertexSet announce = (st.position.cops - flap) | (Csigma & flap);
        VertexSet top = m2->stack.empty() ? g.allVertices() : m2->stack.back();
        if (!((Csigma & top) - flap).empty()) m2->stack.push_back(flap);
        m2->shadow = shadow2;
        return {announce, m2};
    };
    return out;
}

StrategyProgram combineLcFreeze(const Digraph& g, const StrategyProgram& sigma, FlapMode mode) {
    if (sigma.role != StrategyProgram::Role::Cop)
        throw InputError("combineLcFreeze needs a cop program");
    StrategyProgram out;
    out.role = StrategyProgram::Role::Cop;
    std::size_t k = sigma.declaredCopBound;
    out.declaredCopBound = k * k;
    auto init = std::make_shared<PlacementMemory>();
    init->tag = "cz";
    out.memoryInit = init;
    out.step = [&g, sigma, mode](const MemoryPtr& mem, const AugmentedState& st)
        -> std::pair<VertexSet, MemoryPtr> {
        const auto& m = static_cast<const PlacementMemory&>(*mem);
        const VertexSet& R = st.position.robber;

        auto m2 = std::make_shared<PlacementMemory>();
        m2->tag = "cz";
        m2->started = true;
        m2->stack = m.stack;
        while (!m2->stack.empty() && !R.subsetOf(m2->stack.back())) m2->stack.pop_back();

        auto [Csigma, shadow2] = placementQuery(g, sigma, m.shadow, m.started, R);
        VertexSet top = m2->stack.empty() ? g.allVertices() : m2->stack.back();
        VertexSet announce = front(g, R, st.position.cops) | (Csigma & top);
        VertexSet flap = flapOf(g, R, st.position.cops, mode);
        if (!((Csigma & top) - flap).empty()) m2->stack.push_back(flap);
        m2->shadow = shadow2;
        return {announce, m2};
    };
    return out;
}

StrategyProgram kellyToWeakStrategy(const Digraph& g, const std::vector<std::size_t>& order) {
    std::size_t n = g.n();
    std::size_t k = eliminationWidth(g, order);  // validates the order
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

    auto fromRank = [n, order](std::size_t rank) {  // vertices with position >= rank
        VertexSet s(n);
        for (std::size_t i = rank; i < n; ++i) s.add(order[i]);
        return s;
    };
    auto maxOf = [pos](const VertexSet& s) {
        std::size_t best = s.first();
        s.forEach([&](std::size_t v) {
            if (pos[v] > pos[best]) best = v;
        });
        return best;
    };
    auto minOf = [pos](const VertexSet& s) {
        std::size_t best = s.first();
        s.forEach([&](std::size_t v) {
            if (pos[v] < pos[best]) best = v;
        });
        return best;
    };
    // The robber's component once everything from u upwards is ignored.
    auto compBelow = [&g, pos, fromRank](std::size_t u, const VertexSet& R) {
        VertexSet avoid = fromRank(pos[u]);
        if (R.intersects(avoid))
            throw InputError("kellyToWeakStrategy: robber escaped above the blockers");
        VertexSet comp = g.sccOf(R.first(), avoid);
        if (!R.subsetOf(comp))
            throw InputError("kellyToWeakStrategy: robber component straddles the cut");
        return comp;
    };

    StrategyProgram out;
    out.role = StrategyProgram::Role::Cop;
    out.declaredCopBound = 2 * k + 1;
    out.memoryInit = std::make_shared<KellyMemory>();
    out.step = [&g, order, pos, n, k, fromRank, maxOf, minOf, compBelow](
                   const MemoryPtr& mem,
                   const AugmentedState& st) -> std::pair<VertexSet, MemoryPtr> {
        const auto& m = static_cast<const KellyMemory&>(*mem);
        const VertexSet& R = st.position.robber;

        if (!m.started) {
            auto m2 = std::make_shared<KellyMemory>();
            m2->started = true;
            m2->blockers = fromRank(n > k + 1 ? n - (k + 1) : 0);
            return {m2->blockers, m2};
        }

        std::size_t u = minOf(m.blockers);
        if (!m.chasing) {
            // Chasing round: cover the support of the greatest vertex of the
            // robber's component below the blockers.
            VertexSet comp = compBelow(u, R);
            std::size_t w = maxOf(comp);
            auto m2 = std::make_shared<KellyMemory>(m);
            m2->chasing = true;
            m2->chaseTop = w;
            return {m.blockers | suppOf(g, order, w), m2};
        }

        VertexSet comp = compBelow(u, R);
        std::size_t w = maxOf(comp);
        if (pos[w] > pos[m.chaseTop]) {
            // The robber climbed to a greater component; move the chasers.
            auto m2 = std::make_shared<KellyMemory>(m);
            m2->chaseTop = w;
            return {m.blockers | suppOf(g, order, w), m2};
        }
        // Blocking round: the chasers become blockers, one old blocker seals
        // the greatest vertex of the robber's component, the rest leave.
        auto m2 = std::make_shared<KellyMemory>(m);
        m2->chasing = false;
        m2->blockers = suppOf(g, order, m.chaseTop);
        m2->blockers.add(w);
        return {m2->blockers, m2};
    };
    return out;
}

}  // namespace gsearch
