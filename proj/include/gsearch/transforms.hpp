#ifndef GSEARCH_TRANSFORMS_HPP
#define GSEARCH_TRANSFORMS_HPP

#include <vector>

#include "gsearch/blocking.hpp"
#include "gsearch/strategy.hpp"

namespace gsearch {

// The robber's sphere of influence used by the freezing transforms: either
// everything he can reach past the cops, or just his strong component.
enum class FlapMode { Reachable, Component };
VertexSet flapOf(const Digraph& g, const VertexSet& robber, const VertexSet& cops, FlapMode mode);

// Wraps a winning cop program for the weakly monotone component game.  The
// wrapper copies the original chasing moves and, instead of the original
// guards, occupies the minimal blocker from the robber component towards all
// past chaser positions, keeping one previous blocker in place.  The result
// captures the robber while never letting him regain a previously occupied
// vertex; its announcements use at most three times the cops of the input.
StrategyProgram minimallyBlocking(const Digraph& g, const StrategyProgram& sigma);

// Rewrites a winning cop program so that every move places only guards or
// only chasers, never both: a mixed announcement is split into its guard part
// followed by its chaser part.  If the robber changes component between the
// halves, the guards are retracted and the simulation replays his move as if
// it had happened before the split.  Uses the same number of cops.
StrategyProgram purify(const Digraph& g, const StrategyProgram& sigma, const GameVariant& v);

// Lifts a winning cop program from the component game (with every previously
// occupied vertex kept unreachable) to the reachability game: while the
// robber stays inside his component the moves are copied; when he escapes to
// a component R', the simulated play is rewound to the last point whose
// component contained R' and fast-forwarded towards R'; the cop set of that
// target position is placed on top of the current one (at most doubling the
// cop count) before the stale cops are released.
StrategyProgram shySim(const Digraph& g, const StrategyProgram& sigma);

// Plays like the input program but never lifts a cop that is still reachable
// from the robber: each announcement is the front of the simulated placement
// union the cops already standing.  May need more cops than the input.
StrategyProgram leavingCops(const Digraph& g, const StrategyProgram& sigma);

// Plays like the input program but never changes the placement outside the
// robber's sphere of influence; a stack of nested frozen components records
// where play is currently confined.  May need more cops than the input.
StrategyProgram freezeContext(const Digraph& g, const StrategyProgram& sigma,
                              FlapMode mode = FlapMode::Reachable);

// Combination of the two previous wrappers, applied to an output of shySim:
// each announcement keeps the front of the standing cops and adds the
// simulated placement restricted to the innermost frozen component.  The
// result never lets the robber regain territory and uses at most
// quadratically many cops in the input bound.
StrategyProgram combineLcFreeze(const Digraph& g, const StrategyProgram& sigma,
                                FlapMode mode = FlapMode::Reachable);

// Turns an elimination order of width k into a cop program for the weakly
// monotone reachability game with at most 2k+1 cops.  The cops alternate
// blocking rounds (k+1 blockers sealing everything above the order position
// reached so far) and chasing rounds (up to k chasers on the support of the
// greatest vertex of the robber component).
StrategyProgram kellyToWeakStrategy(const Digraph& g, const std::vector<std::size_t>& order);

}  // namespace gsearch

#endif  // GSEARCH_TRANSFORMS_HPP
