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

#include <optional>
#include <vector>

namespace limgame {

/// One pass of the level loop.
struct ReductionStep {
    Rational level;         // v_i
    bool skipped = false;   // level set empty in the surviving subgraph
    StateSet surviving;     // S^i at the start of the pass
    StateSet winning;       // U_i
    StateSet removed;       // B_i = Attr_P(U_i, G_i)
    /// Almost-sure Buchi (limsup) or coBuchi (liminf) strategy of G_i that
    /// wins from every state of U_i and never leaves U_i.
    PureMemorylessStrategy strategy;
};

/**
 * Output of the limsup / liminf level loops: the starred player-1 states,
 * the reward level assigned to each, and the per-level log.
 */
struct ReductionOutput {
    Objective kind = Objective::LimSup;
    StateSet starred;
    std::vector<std::optional<Rational>> assignment; // defined exactly on starred
    std::vector<std::size_t> step_of;                // starred state -> step index
    std::vector<ReductionStep> log;
    StateSet final_surviving;
    std::vector<Rational> input_rewards; // provenance for the conversions
};

/// Level loop with almost-sure Buchi sets r^{-1}(v_i) n S^i.
/// Requires a bipartite player-1 MDP with strictly positive rewards.
ReductionOutput mdp_limsup_reduce(const GameGraph& g, const RewardFunction& r);

/// Level loop with almost-sure coBuchi sets {s in S^i : r(s) >= v_i}.
ReductionOutput mdp_liminf_reduce(const GameGraph& g, const RewardFunction& r);

/// Adds an absorbing player-1 copy per starred state, rewarded with its
/// assigned level; original rewards become 0. Throws PreconditionError when
/// `out` was not produced from (g, r) or S* is empty.
ConvertedMdp limsup_convert(const GameGraph& g, const RewardFunction& r, const ReductionOutput& out);
ConvertedMdp liminf_convert(const GameGraph& g, const RewardFunction& r, const ReductionOutput& out);

/**
 * Two-phase witness: follow `phase1` until reaching a commit state, where
 * the max strategy takes the copy edge; from there on follow the qualitative
 * strategy of the commit state's level (`log[step_of[s]].strategy`).
 * `flattened` is an equivalent-value pure memoryless strategy on g.
 */
struct WitnessPlan {
    StateSet commit;
    PureMemorylessStrategy phase1;
    std::vector<std::size_t> commit_step; // commit state -> step index
    PureMemorylessStrategy flattened;
};

/// Throws InternalError when `max_strategy` fails the LP certificate on the
/// converted MDP.
WitnessPlan recover_strategy(const GameGraph& g, const RewardFunction& r, const ReductionOutput& out,
                             const ConvertedMdp& converted, const PureMemorylessStrategy& max_strategy);

/// Markov chain of the two-phase play (state x {free, committed at step i}).
/// Product state k < g.size() is (k, free); its reward is r of the state.
Instance plan_product_chain(const GameGraph& g, const RewardFunction& r, const ReductionOutput& out,
                            const WitnessPlan& plan);

/**
 * Optimal pure memoryless strategy read off an MDP's exact values: keep only
 * value-preserving controller edges, then play almost-surely for
 * Buchi{r >= value} (limsup) or coBuchi{r >= value} (liminf).
 * Throws InternalError if the values are not optimal.
 */
PureMemorylessStrategy strategy_from_values(const GameGraph& g, const RewardFunction& r,
                                            Objective kind, const ValueVector& values);

} // namespace limgame
