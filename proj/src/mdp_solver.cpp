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

#include "limgame/mdp_solver.hpp"

#include "limgame/errors.hpp"

namespace limgame {

namespace {

MdpSolution solve_player1(const GameGraph& g, const RewardFunction& r, Objective kind) {
    MdpSolution sol;
    sol.kind = kind;
    sol.controller = Owner::Player1;

    auto [positive, shift] = make_positive(r);
    sol.shift = shift;
    auto [mapping, bip_reward] = bipartite_normalize(g, positive);
    const GameGraph& h = mapping.transformed;

    sol.reduction = kind == Objective::LimSup ? mdp_limsup_reduce(h, bip_reward)
                                              : mdp_liminf_reduce(h, bip_reward);
    sol.converted = kind == Objective::LimSup ? limsup_convert(h, bip_reward, sol.reduction)
                                              : liminf_convert(h, bip_reward, sol.reduction);
    sol.max_solution = solve_max(sol.converted);
    sol.witness = recover_strategy(h, bip_reward, sol.reduction, sol.converted,
                                   sol.max_solution.strategy);

    sol.values.values.resize(g.size());
    for (StateIndex s = 0; s < g.size(); ++s) sol.values[s] = sol.max_solution.values[s] - shift;
    sol.strategy = strategy_from_values(g, r, kind, sol.values);
    sol.bipartite = std::move(mapping);
    return sol;
}

} // namespace

MdpSolution solve_mdp(const GameGraph& g, const RewardFunction& r, Objective kind) {
    if (kind == Objective::Max)
        throw PreconditionError("solve_mdp handles limsup and liminf; use solve_max for max");
    if (!g.is_mdp()) throw PreconditionError("solve_mdp needs an MDP (one player kind only)");
    if (r.size() != g.size()) throw PreconditionError("reward function does not match the graph");
    if (g.controller() == Owner::Player1) return solve_player1(g, r, kind);

    // Player 2 minimizes E[kind(r)] = -max E[dual(kind)(-r)].
    auto mirrored = mirror(g, r);
    MdpSolution sol = solve_player1(mirrored.graph, mirrored.reward, dual(kind));
    sol.kind = kind;
    sol.controller = Owner::Player2;
    for (auto& v : sol.values.values) v = -v;
    PureMemorylessStrategy strategy(Owner::Player2, g.size());
    for (StateIndex s = 0; s < g.size(); ++s)
        if (g.owner(s) == Owner::Player2) strategy.set(s, sol.strategy[s]);
    sol.strategy = std::move(strategy);
    return sol;
}

} // namespace limgame
