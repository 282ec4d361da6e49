/*
 * Copyright 2026 The limgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "limgame/game_graph.hpp"

#include <utility>
#include <vector>

namespace limgame {

/// (r + c)(s) = r(s) + c.
RewardFunction shift_rewards(const RewardFunction& r, const Rational& c);

/// Returns (r, 0) when every reward is already positive, otherwise
/// (r + c, c) with c = 1 - min(r).
std::pair<RewardFunction, Rational> make_positive(const RewardFunction& r);

/// A dummy state inserted on the original edge (source, target).
struct DummyState {
    StateIndex index; // in the transformed graph
    StateIndex source;
    StateIndex target;
};

/**
 * Result of breaking every edge between two states of the same kind
 * (player/player or probabilistic/probabilistic) with a dummy state that has
 * a unique successor. Original states keep their indices; dummies are
 * appended after them.
 */
struct BipartiteMapping {
    GameGraph original;
    GameGraph transformed;
    std::vector<DummyState> dummies;

    std::size_t original_size() const noexcept { return original.size(); }
    /// Removes the dummies and splices their in/out edges back together.
    GameGraph splice() const;
};

/// Dummy rewards copy the reward of the dummy's source state.
std::pair<BipartiteMapping, RewardFunction> bipartite_normalize(const GameGraph& g,
                                                                const RewardFunction& r);

/// Every edge joins a player state and a probabilistic state.
bool is_bipartite(const GameGraph& g);

/**
 * Induced subgraph on `keep`, states renumbered in their original order.
 * Throws PreconditionError if a kept probabilistic state loses a successor
 * or a kept player state loses all of them.
 */
GameGraph restrict(const GameGraph& g, const StateSet& keep);

/// Swaps the two players and negates the rewards.
Instance mirror(const GameGraph& g, const RewardFunction& r);

/// Turns the strategy owner's states into probabilistic states that move to
/// the chosen successor with probability one.
GameGraph fix_strategy(const GameGraph& g, const PureMemorylessStrategy& strategy);

/// Copy of `g` keeping, at each state of `owner`, only the successors in
/// `allowed[s]` (which must be nonempty).
GameGraph prune_choices(const GameGraph& g, Owner owner,
                        const std::vector<std::vector<StateIndex>>& allowed);

} // namespace limgame
