#include "gsearch/arena.hpp"

#include <algorithm>
#include <sstream>

namespace gsearch {

GameVariant componentGame() { return {MoveRule::Component, Monotonicity::None}; }
GameVariant componentCopMono() { return {MoveRule::Component, Monotonicity::CopMonoReach}; }
GameVariant componentWeak() { return {MoveRule::Component, Monotonicity::Weak}; }
GameVariant componentRobberMonoReach() {
    return {MoveRule::Component, Monotonicity::RobberMonoReach};
}
GameVariant reachCopMono() { return {MoveRule::Reachability, Monotonicity::CopMonoReach}; }

GameVariant parseVariant(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) parts.push_back(tok);
    if (parts.empty()) throw InputError("empty game variant");
    auto slash = parts[0].find('/');
    if (slash == std::string::npos)
        throw InputError("game variant must look like moveRule/monotonicity");
    std::string mv = parts[0].substr(0, slash);
    std::string mono = parts[0].substr(slash + 1);
    GameVariant v;
    if (mv == "component")
        v.moveRule = MoveRule::Component;
    else if (mv == "reach" || mv == "reachability")
        v.moveRule = MoveRule::Reachability;
    else
        throw InputError("unknown move rule: " + mv);
    if (mono == "none")
        v.monotonicity = Monotonicity::None;
    else if (mono == "cop-mono")
        v.monotonicity = Monotonicity::CopMonoReach;
    else if (mono == "robber-mono-comp")
        v.monotonicity = Monotonicity::RobberMonoComp;
    else if (mono == "robber-mono-reach")
        v.monotonicity = Monotonicity::RobberMonoReach;
    else if (mono == "weak")
        v.monotonicity = Monotonicity::Weak;
    else
        throw InputError("unknown monotonicity: " + mono);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] == "robber-comp-only")
            v.placement = PlacementRestriction::RobberComponentOnly;
        else if (parts[i] == "one-new-cop")
            v.oneNewCopPerMove = true;
        else if (parts[i] == "no-double-guard")
            v.noConsecutiveGuardMoves = true;
        else
            throw InputError("unknown variant flag: " + parts[i]);
    }
    return v;
}

std::string variantName(const GameVariant& v) {
    std::string out = v.moveRule == MoveRule::Component ? "component/" : "reach/";
    switch (v.monotonicity) {
        case Monotonicity::None: out += "none"; break;
        case Monotonicity::CopMonoReach: out += "cop-mono"; break;
        case Monotonicity::RobberMonoComp: out += "robber-mono-comp"; break;
        case Monotonicity::RobberMonoReach: out += "robber-mono-reach"; break;
        case Monotonicity::Weak: out += "weak"; break;
    }
    if (v.placement == PlacementRestriction::RobberComponentOnly) out += ";robber-comp-only";
    if (v.oneNewCopPerMove) out += ";one-new-cop";
    if (v.noConsecutiveGuardMoves) out += ";no-double-guard";
    return out;
}

AugmentedState initialState(const Digraph& g, const VertexSet& robberComponent) {
    AugmentedState s;
    s.position.cops = g.emptySet();
    s.position.robber = robberComponent;
    s.vacated = g.emptySet();
    s.pastChasers = g.emptySet();
    return s;
}

static void requireComponent(const Digraph& g, const VertexSet& C, const VertexSet& R,
                             const char* what) {
    if (R.empty() || R.intersects(C) || g.sccOf(R.first(), C) != R)
        throw InputError(std::string(what) + ": R is not a strong component of G - C");
}

ChaserSplit chaserSplit(const Digraph& g, const VertexSet& C, const VertexSet& Cnew,
                        const VertexSet& R) {
    requireComponent(g, C, R, "chaserSplit");
    ChaserSplit cs;
    cs.chasers = Cnew & R;
    cs.guards = (Cnew - C) - cs.chasers;
    return cs;
}

std::vector<VertexSet> robberSuccessors(const GameVariant& v, const Digraph& g,
                                        const VertexSet& C, const VertexSet& Cnew,
                                        const VertexSet& R) {
    requireComponent(g, C, R, "robberSuccessors");
    VertexSet transit = C & Cnew;
    std::vector<VertexSet> out;
    if (v.moveRule == MoveRule::Reachability) {
        VertexSet area = g.reachAvoiding(R, transit);
        for (const VertexSet& comp : g.sccsAvoiding(Cnew))
            if (comp.intersects(area)) out.push_back(comp);
    } else {
        VertexSet S = g.sccOf(R.first(), transit);
        for (const VertexSet& comp : g.sccsAvoiding(Cnew))
            if (comp.subsetOf(S)) out.push_back(comp);
    }
    return out;
}

MonStepResult copAnnounce(const GameVariant& v, const Digraph& g, const AugmentedState& s,
                          const VertexSet& Cnew) {
    if (s.position.announced) throw InputError("copAnnounce: position already mid-round");
    const VertexSet& C = s.position.cops;
    const VertexSet& R = s.position.robber;
    MonStepResult r{true, s, ""};
    r.next.position.announced = Cnew;

    if (v.placement == PlacementRestriction::RobberComponentOnly && !(Cnew - C).subsetOf(R)) {
        r.ok = false;
        r.violation = "placement restriction: new cops outside the robber component";
        return r;
    }
    if (v.oneNewCopPerMove && (Cnew - C).count() > 1) {
        r.ok = false;
        r.violation = "placement restriction: more than one new cop";
        return r;
    }
    ChaserSplit cs = chaserSplit(g, C, Cnew, R);
    bool guardOnly = cs.chasers.empty() && !cs.guards.empty();
    if (v.noConsecutiveGuardMoves && guardOnly && s.lastMoveWasGuardOnly) {
        r.ok = false;
        r.violation = "placement restriction: consecutive guarding moves";
        return r;
    }
    if (v.monotonicity == Monotonicity::CopMonoReach && Cnew.intersects(s.vacated)) {
        r.ok = false;
        r.violation = "cop-monotonicity: reoccupied vacated vertex " +
                      (Cnew & s.vacated).str();
    }
    if (v.monotonicity == Monotonicity::Weak) {
        VertexSet reach = g.reachAvoiding(R, C & Cnew);
        if (s.pastChasers.intersects(reach)) {
            r.ok = false;
            r.violation = "weak monotonicity: past chaser reachable from the robber " +
                          (s.pastChasers & reach).str();
        }
    }
    r.next.vacated = s.vacated | (C - Cnew);
    r.next.pastChasers = s.pastChasers | cs.chasers;
    r.next.lastMoveWasGuardOnly = guardOnly;
    return r;
}

MonStepResult robberMove(const GameVariant& v, const Digraph& g, const AugmentedState& s,
                         const VertexSet& Rnew) {
    if (!s.position.announced) throw InputError("robberMove: no cop announcement pending");
    const VertexSet& C = s.position.cops;
    const VertexSet& Cnew = *s.position.announced;
    const VertexSet& R = s.position.robber;
    auto succs = robberSuccessors(v, g, C, Cnew, R);
    if (std::find(succs.begin(), succs.end(), Rnew) == succs.end())
        throw InputError("robberMove: " + Rnew.str() + " is not a legal robber move");
    MonStepResult r{true, s, ""};
    r.next.position = Position{Cnew, Rnew, std::nullopt};
    r.next.lastMoveWasGuardOnly = s.lastMoveWasGuardOnly;
    if (v.monotonicity == Monotonicity::RobberMonoComp && !Rnew.subsetOf(R)) {
        r.ok = false;
        r.violation = "robber-monotonicity (component): component grew";
    }
    if (v.monotonicity == Monotonicity::RobberMonoReach) {
        VertexSet transit = C & Cnew;
        if (!g.reachAvoiding(Rnew, transit).subsetOf(g.reachAvoiding(R, transit))) {
            r.ok = false;
            r.violation = "robber-monotonicity (reach): territory grew";
        }
    }
    return r;
}

}  // namespace gsearch
