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

// Ground truth for tests and the `oracle` CLI subcommand. Nothing in here
// shares code with the reduction pipeline beyond the graph data model: chain
// analysis uses its own reachability closure and Gauss-Jordan elimination.

namespace limgame::oracle {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

struct ChainAnalysis {
    std::vector<StateSet> recurrent_classes;
    std::vector<std::size_t> class_of;            // state -> class, or npos if transient
    std::vector<std::vector<Rational>> absorption; // [state][class]
    std::vector<Rational> class_limsup;            // max reward in the class
    std::vector<Rational> class_liminf;            // min reward in the class
    ValueVector limsup;                            // expected objective per state
    ValueVector liminf;
    ValueVector max;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    const ValueVector& expected(Objective kind) const;
};

/// Exact analysis of a Markov chain: every state probabilistic, or a player
/// state with a single successor. Throws PreconditionError otherwise.
ChainAnalysis analyze_chain(const GameGraph& chain, const RewardFunction& r);

/// One objective of analyze_chain, computed directly: only the linear systems
/// that objective needs, with single-successor transient states folded into
/// their successor. Same preconditions as analyze_chain.
ValueVector chain_values(const GameGraph& chain, const RewardFunction& r, Objective kind);

/// Fixes the given strategies (either may be null when that player owns no state).
GameGraph induced_chain(const GameGraph& g, const PureMemorylessStrategy* player1,
                        const PureMemorylessStrategy* player2);

/// max over player-1 strategies of min over player-2 strategies of the exact
/// chain value, per state. Throws BudgetExceeded when the product of both
/// strategy spaces exceeds `budget`.
ValueVector enumerate_values(const GameGraph& g, const RewardFunction& r, Objective kind,
                             std::uint64_t budget = kDefaultBudget);

/// Every end component of an MDP by subset enumeration (at most 20 states).
std::vector<StateSet> enumerate_end_components(const GameGraph& g);

/// Chain on U (renumbered in index order) where each controller state plays
/// its edges inside U uniformly at random.
GameGraph uniform_strategy_chain(const GameGraph& g, const StateSet& u);

struct SimulationOptions {
    std::uint64_t episodes = 100000;
    std::size_t horizon = 200;
    std::uint64_t seed = 1;
    int jobs = 0; // 0: OpenMP default, 1: serial
};

struct SimulationEstimate {
    double mean = 0;
    double standard_error = 0;
    double half_width = 0; // 95% confidence
    Rational exact_mean;   // of the sampled episode values
    std::vector<std::uint64_t> tally; // episodes per reward level (r.levels() order)
};

/**
 * Monte Carlo estimate from `start` under fixed strategies. Episode value on
 * a finite prefix of `horizon` states: max (limsup) or min (liminf) reward
 * over the second half, or max over the whole prefix (max objective).
 * Episode e draws from mt19937_64 seeded with splitmix64(seed, e), so results
 * are identical for any thread count.
 */
SimulationEstimate simulate(const GameGraph& g, const RewardFunction& r,
                            const PureMemorylessStrategy* player1,
                            const PureMemorylessStrategy* player2, Objective kind, StateIndex start,
                            const SimulationOptions& options);

/// Single-threaded reference for `simulate`.
SimulationEstimate simulate_serial(const GameGraph& g, const RewardFunction& r,
                                   const PureMemorylessStrategy* player1,
                                   const PureMemorylessStrategy* player2, Objective kind,
                                   StateIndex start, const SimulationOptions& options);

} // namespace limgame::oracle
