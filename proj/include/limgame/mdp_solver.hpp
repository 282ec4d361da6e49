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
#include "limgame/max_solver.hpp"
#include "limgame/objective.hpp"
#include "limgame/reductions.hpp"
#include "limgame/transform.hpp"

namespace limgame {

/// Everything the polynomial MDP pipeline produced for one instance.
struct MdpSolution {
    Objective kind = Objective::LimSup;
    /// Player whose strategy is returned; it maximizes for Player1 and
    /// minimizes for Player2.
    Owner controller = Owner::Player1;
    ValueVector values;              // Val_1 per original state
    PureMemorylessStrategy strategy; // optimal for the controller
    // Intermediate artifacts of the player-1 run (on the mirrored instance
    // when the controller is Player2).
    Rational shift;
    BipartiteMapping bipartite;
    ReductionOutput reduction;
    ConvertedMdp converted;
    MaxSolution max_solution;
    WitnessPlan witness;
};

/**
 * Exact limsup / liminf values of an MDP:
 * make_positive -> bipartite_normalize -> level loop -> conversion ->
 * policy iteration on the max objective -> undo the shift. A player-2 MDP is
 * solved on its mirror (owners swapped, rewards negated, dual objective) and
 * the values negated back.
 */
MdpSolution solve_mdp(const GameGraph& g, const RewardFunction& r, Objective kind);

} // namespace limgame
