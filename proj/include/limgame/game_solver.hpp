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

#include <cstdint>
#include <vector>

namespace limgame {

struct GameSolveOptions {
    std::uint64_t budget = std::uint64_t{1} << 20; // pure memoryless strategies per player
    int jobs = 0;                                  // 0: OpenMP default, 1: serial
};

struct GameSolution {
    Objective kind = Objective::LimSup;
    ValueVector values;
    PureMemorylessStrategy strategy1; // optimal for player 1 at every state
    PureMemorylessStrategy strategy2; // optimal for player 2 at every state
};

/**
 * Values of a 2.5-player game. Every pure memoryless strategy of one player
 * is fixed in turn, the resulting MDP is solved by the polynomial pipeline,
 * and the pointwise optimum is taken; a strategy attaining it at every state
 * is the witness. Player 2's strategies are enumerated on the game, player
 * 1's on its mirror (dual objective, negated rewards), and the two value
 * vectors must agree exactly.
 *
 * Throws BudgetExceeded when a player has more strategies than the budget,
 * InternalError when no pointwise-optimal strategy exists or the two sides
 * disagree.
 */
GameSolution solve_game(const GameGraph& g, const RewardFunction& r, Objective kind,
                        const GameSolveOptions& options = {});

/// Single-threaded reference for solve_game.
GameSolution solve_game_serial(const GameGraph& g, const RewardFunction& r, Objective kind,
                               const GameSolveOptions& options = {});

/// Lower envelope over all player-2 strategies: min_pi Val(G_pi) pointwise,
/// plus the first strategy attaining it everywhere.
struct EnvelopeResult {
    ValueVector values;
    PureMemorylessStrategy argmin;
};
EnvelopeResult minimize_over_player2(const GameGraph& g, const RewardFunction& r, Objective kind,
                                     const GameSolveOptions& options);

struct DecideResult {
    bool holds = false;          // Val_1(s) >= q
    Rational value;              // Val_1(s)
    PureMemorylessStrategy witness; // strategy1 if holds, strategy2 otherwise
    Rational witness_bound;      // value at s of the game with the witness fixed
    bool witness_verified = false;
};

/// Whether Val_1(kind(r))(s) >= q, with a verified pure memoryless witness.
DecideResult decide(const GameGraph& g, const RewardFunction& r, Objective kind, StateIndex s,
                    const Rational& q, const GameSolveOptions& options = {});

struct DeterminacyReport {
    ValueVector limsup_p1;  // Val_1(limsup(r))
    ValueVector liminf_p2;  // Val_2(liminf(-r))
    ValueVector liminf_p1;  // Val_1(liminf(r))
    ValueVector limsup_p2;  // Val_2(limsup(-r))
    std::vector<Rational> limsup_sums; // limsup_p1 + liminf_p2, must be 0
    std::vector<Rational> liminf_sums; // liminf_p1 + limsup_p2, must be 0
    bool ok() const;
};

/// Computes each side through its own strategy enumeration and reports the
/// per-state sums of the two determinacy identities.
DeterminacyReport check_determinacy(const GameGraph& g, const RewardFunction& r,
                                    const GameSolveOptions& options = {});

/// Value of the game once `strategy` is fixed (an MDP for the other player).
ValueVector value_with_fixed(const GameGraph& g, const RewardFunction& r, Objective kind,
                             const PureMemorylessStrategy& strategy);

} // namespace limgame
