#ifndef GSEARCH_ARENA_HPP
#define GSEARCH_ARENA_HPP

#include <optional>
#include <string>
#include <vector>

#include "gsearch/digraph.hpp"

namespace gsearch {

enum class MoveRule { Component, Reachability };

enum class Monotonicity {
    None,
    CopMonoReach,     // cops never reoccupy a vacated vertex
    RobberMonoComp,   // R' subset of R at every robber move
    RobberMonoReach,  // robber's reachable territory never grows
    Weak,             // past chaser positions stay unreachable from the robber
};

enum class PlacementRestriction { None, RobberComponentOnly };

struct GameVariant {
    MoveRule moveRule = MoveRule::Component;
    Monotonicity monotonicity = Monotonicity::None;
    PlacementRestriction placement = PlacementRestriction::None;
    // Restricts cop announcements to adding at most one new cop per move; only
    // sound for the weakly monotone component game, where one-cop-at-a-time
    // play is known not to change the cop number.
    bool oneNewCopPerMove = false;
    // Forbids a guard-only move immediately after another guard-only move;
    // used by the guarding-sequence experiments.
    bool noConsecutiveGuardMoves = false;

    bool operator==(const GameVariant&) const = default;
};

// Named presets.
GameVariant componentGame();                // component/none
GameVariant componentCopMono();             // component/cop-mono
GameVariant componentWeak();                // component/weak (weakly monotone shy)
GameVariant componentRobberMonoReach();     // component/robber-mono-reach (strongly monotone shy)
GameVariant reachCopMono();                 // reach/cop-mono (DAG-style game)

// Parse/emit the CLI spelling, e.g. "component/none", "reach/cop-mono",
// "component/weak;robber-comp-only".
GameVariant parseVariant(const std::string& text);
std::string variantName(const GameVariant& v);

// Game position: cops on C, robber somewhere in R, a strong component of
// G - C.  `announced` is set in mid-round positions (C, C', R) where the cops
// have committed their next placement and the robber is about to move.
struct Position {
    VertexSet cops;
    VertexSet robber;
    std::optional<VertexSet> announced;

    bool operator==(const Position& o) const {
        return cops == o.cops && robber == o.robber && announced == o.announced;
    }
};

// Position plus the history digest the monotonicity conditions need.
struct AugmentedState {
    Position position;
    VertexSet vacated;      // every vertex ever occupied then left
    VertexSet pastChasers;  // union of all chaser sets committed so far
    // True once a guard-only move has just been played (for the
    // no-consecutive-guard-moves restriction).
    bool lastMoveWasGuardOnly = false;
};

AugmentedState initialState(const Digraph& g, const VertexSet& robberComponent);

// Chaser/guard split of a cop announcement: chasers are the new cops inside
// the robber's current component, guards the new cops outside it.
struct ChaserSplit {
    VertexSet chasers;
    VertexSet guards;
};
ChaserSplit chaserSplit(const Digraph& g, const VertexSet& C, const VertexSet& Cnew,
                        const VertexSet& R);

// All components the robber may move to from (C, Cnew, R).  Reachability
// rule: components of G - Cnew reachable from R in G - (C ∩ Cnew).
// Component rule: components of G - Cnew inside the strong component of
// G - (C ∩ Cnew) that contains R.  Empty result = capture.
std::vector<VertexSet> robberSuccessors(const GameVariant& v, const Digraph& g,
                                        const VertexSet& C, const VertexSet& Cnew,
                                        const VertexSet& R);

// One accepted-or-rejected transition of the augmented arena.
struct MonStepResult {
    bool ok;                  // false iff the variant's monotonicity condition failed
    AugmentedState next;
    std::string violation;    // human-readable reason when !ok
};

// Apply a cop announcement to s (s.position must have no announcement yet).
// Checks the cop-side monotonicity conditions (cop-mono, weak) and the
// placement / guard-move restrictions.
MonStepResult copAnnounce(const GameVariant& v, const Digraph& g, const AugmentedState& s,
                          const VertexSet& Cnew);

// Apply a robber move to s (s.position must carry an announcement).  Checks
// the robber-side monotonicity conditions (rm_comp, rm_reach).
MonStepResult robberMove(const GameVariant& v, const Digraph& g, const AugmentedState& s,
                         const VertexSet& Rnew);

}  // namespace gsearch

#endif  // GSEARCH_ARENA_HPP
