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
#include "limgame/objective.hpp"

#include <string>
#include <vector>

namespace limgame {

/**
 * A player-1 MDP with a max objective in which every positive reward sits on
 * an absorbing player-1 "copy" state and all other rewards are zero. The
 * limsup and liminf conversions produce exactly this shape; the max value
 * then equals the expected reward of the copy the play is absorbed in.
 */
struct ConvertedMdp {
    static constexpr StateIndex none = PureMemorylessStrategy::none;

    GameGraph graph;
    RewardFunction reward;
    StateSet copies;                  // the absorbing copy states
    std::vector<StateIndex> copy_of;  // copy -> original state, none otherwise
    std::vector<StateIndex> copy_for; // original state -> its copy, none otherwise
    std::size_t original_size = 0;    // originals are 0..original_size-1
    Objective source = Objective::Max;
};

/// Accepts a user instance that already has the converted shape.
/// Throws PreconditionError otherwise.
ConvertedMdp as_converted(const GameGraph& g, const RewardFunction& r);

/// Outcome of checking the LP constraint families on a candidate solution.
struct Certificate {
    bool nonnegative = true;          // x_s >= 0
    bool copies_fixed = true;         // x_s = r(s) on copies
    bool player_dominates = true;     // x_s >= x_t on player edges
    bool probabilistic_balanced = true; // x_s = sum_t delta(s)(t) x_t
    bool strategy_attains = true;     // x_s = x_{strategy(s)}, no strictly better successor
    bool matches_strategy_value = true; // x equals the value of the strategy itself
    std::vector<std::string> violations;

    bool ok() const noexcept {
        return nonnegative && copies_fixed && player_dominates && probabilistic_balanced &&
               strategy_attains && matches_strategy_value;
    }
};

struct MaxSolution {
    ValueVector values;
    PureMemorylessStrategy strategy;
    Certificate certificate;
    /// Value vector of every strategy visited by policy iteration, in order.
    std::vector<ValueVector> iterations;
};

/// Policy iteration over exact rationals. Initial strategy takes a copy edge
/// where one exists and the lowest-index successor elsewhere; improvement
/// switches only on strict gain, to the lowest-index best successor.
/// Throws InternalError if the result fails its own certificate.
MaxSolution solve_max(const ConvertedMdp& m);

/// Expected absorbed reward in the Markov chain induced by `strategy`.
/// Plays never absorbed in a copy are worth 0.
ValueVector evaluate_strategy(const ConvertedMdp& m, const PureMemorylessStrategy& strategy);

Certificate check_certificate(const ConvertedMdp& m, const MaxSolution& sol);
bool certify(const ConvertedMdp& m, const MaxSolution& sol);

} // namespace limgame
