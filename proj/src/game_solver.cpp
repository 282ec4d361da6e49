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

#include "limgame/game_solver.hpp"

#include "limgame/errors.hpp"
#include "limgame/mdp_solver.hpp"
#include "limgame/transform.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace limgame {

namespace {

constexpr std::uint64_t kChunk = 256;

ValueVector solve_fixed_player2(const GameGraph& g, const RewardFunction& r, Objective kind,
                                std::uint64_t index) {
    if (g.count(Owner::Player2) == 0) return solve_mdp(g, r, kind).values;
    auto pi = strategy_at(g, Owner::Player2, index);
    return solve_mdp(fix_strategy(g, pi), r, kind).values;
}

// Running pointwise minimum plus the first strategy attaining it everywhere.
struct Envelope {
    ValueVector values;
    std::uint64_t uniform = 0;
    bool has_uniform = false;
    bool started = false;

    void absorb(const ValueVector& v, std::uint64_t index) {
        if (!started) {
            values = v;
            uniform = index;
            has_uniform = started = true;
            return;
        }
        bool lowered = false, dominated = true;
        for (StateIndex s = 0; s < v.size(); ++s) {
            if (v[s] < values[s]) {
                values[s] = v[s];
                lowered = true;
            } else if (v[s] > values[s]) {
                dominated = false;
            }
        }
        if (dominated) {
            if (lowered || !has_uniform) {
                uniform = index;
                has_uniform = true;
            }
        } else if (lowered) {
            has_uniform = false;
        }
    }
};

} // namespace

EnvelopeResult minimize_over_player2(const GameGraph& g, const RewardFunction& r, Objective kind,
                                     const GameSolveOptions& options) {
    const std::uint64_t total = strategy_count(g, Owner::Player2);
    if (total > options.budget && g.count(Owner::Player1) > 0)
        throw BudgetExceeded("player 2 has " +
                             (total == UINT64_MAX ? std::string("too many")
                                                  : std::to_string(total)) +
                             " pure memoryless strategies; budget is " +
                             std::to_string(options.budget));

    // A player-2 MDP has a polynomial answer; no need to enumerate.
    if (g.count(Owner::Player1) == 0 && g.count(Owner::Player2) > 0) {
        auto sol = solve_mdp(g, r, kind);
        return EnvelopeResult{std::move(sol.values), std::move(sol.strategy)};
    }

    Envelope env;
    std::vector<ValueVector> chunk;
    for (std::uint64_t base = 0; base < total; base += kChunk) {
        const auto count = static_cast<std::int64_t>(std::min(kChunk, total - base));
        chunk.assign(static_cast<std::size_t>(count), ValueVector{});
#ifdef _OPENMP
        if (options.jobs != 1 && count > 1) {
            std::exception_ptr failure;
            const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
            for (std::int64_t i = 0; i < count; ++i) {
                try {
                    chunk[i] = solve_fixed_player2(g, r, kind, base + static_cast<std::uint64_t>(i));
                } catch (...) {
#pragma omp critical
                    if (!failure) failure = std::current_exception();
                }
            }
            if (failure) std::rethrow_exception(failure);
        } else
#endif
        {
            for (std::int64_t i = 0; i < count; ++i)
                chunk[i] = solve_fixed_player2(g, r, kind, base + static_cast<std::uint64_t>(i));
        }
        // in-order reduction keeps the result independent of the schedule
        for (std::int64_t i = 0; i < count; ++i)
            env.absorb(chunk[i], base + static_cast<std::uint64_t>(i));
    }
    if (!env.has_uniform)
        throw InternalError("no player-2 strategy is optimal at every state");
    return EnvelopeResult{std::move(env.values), strategy_at(g, Owner::Player2, env.uniform)};
}

GameSolution solve_game(const GameGraph& g, const RewardFunction& r, Objective kind,
                        const GameSolveOptions& options) {
    if (kind == Objective::Max) throw PreconditionError("games are solved for limsup and liminf");
    if (r.size() != g.size()) throw PreconditionError("reward function does not match the graph");

    GameSolution sol;
    sol.kind = kind;
    auto lower = minimize_over_player2(g, r, kind, options);
    sol.values = std::move(lower.values);
    sol.strategy2 = std::move(lower.argmin);

    if (g.count(Owner::Player1) == 0) {
        sol.strategy1 = PureMemorylessStrategy(Owner::Player1, g.size());
    } else if (g.count(Owner::Player2) == 0) {
        sol.strategy1 = solve_mdp(g, r, kind).strategy;
    } else {
        // Player 1 is the minimizer of the mirrored game with the dual objective.
        auto m = mirror(g, r);
        auto upper = minimize_over_player2(m.graph, m.reward, dual(kind), options);
        for (StateIndex s = 0; s < g.size(); ++s)
            if (-upper.values[s] != sol.values[s])
                throw InternalError("players' values disagree at \"" + g.id(s) + "\"");
        sol.strategy1 = PureMemorylessStrategy(Owner::Player1, g.size());
        for (StateIndex s = 0; s < g.size(); ++s)
            if (g.owner(s) == Owner::Player1) sol.strategy1.set(s, upper.argmin[s]);
    }
    return sol;
}

GameSolution solve_game_serial(const GameGraph& g, const RewardFunction& r, Objective kind,
                               const GameSolveOptions& options) {
    GameSolveOptions serial = options;
    serial.jobs = 1;
    return solve_game(g, r, kind, serial);
}

ValueVector value_with_fixed(const GameGraph& g, const RewardFunction& r, Objective kind,
                             const PureMemorylessStrategy& strategy) {
    if (g.count(strategy.player()) == 0) return solve_mdp(g, r, kind).values;
    return solve_mdp(fix_strategy(g, strategy), r, kind).values;
}

DecideResult decide(const GameGraph& g, const RewardFunction& r, Objective kind, StateIndex s,
                    const Rational& q, const GameSolveOptions& options) {
    if (s >= g.size()) throw PreconditionError("decide: state out of range");
    auto sol = solve_game(g, r, kind, options);
    DecideResult result;
    result.value = sol.values[s];
    result.holds = sol.values[s] >= q;
    result.witness = result.holds ? sol.strategy1 : sol.strategy2;
    result.witness_bound = value_with_fixed(g, r, kind, result.witness)[s];
    result.witness_verified = result.holds ? result.witness_bound >= q : result.witness_bound < q;
    return result;
}

bool DeterminacyReport::ok() const {
    for (const auto& v : limsup_sums)
        if (v != 0) return false;
    for (const auto& v : liminf_sums)
        if (v != 0) return false;
    return true;
}

DeterminacyReport check_determinacy(const GameGraph& g, const RewardFunction& r,
                                    const GameSolveOptions& options) {
    DeterminacyReport report;
    auto m = mirror(g, r);
    report.limsup_p1 = minimize_over_player2(g, r, Objective::LimSup, options).values;
    report.liminf_p1 = minimize_over_player2(g, r, Objective::LimInf, options).values;
    // Player 2 maximizing kind(-r) is player 1 of the mirror.
    report.liminf_p2 = minimize_over_player2(m.graph, m.reward, Objective::LimInf, options).values;
    report.limsup_p2 = minimize_over_player2(m.graph, m.reward, Objective::LimSup, options).values;
    for (StateIndex s = 0; s < g.size(); ++s) {
        report.limsup_sums.push_back(report.limsup_p1[s] + report.liminf_p2[s]);
        report.liminf_sums.push_back(report.liminf_p1[s] + report.limsup_p2[s]);
    }
    return report;
}

} // namespace limgame
