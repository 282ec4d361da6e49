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

#include "limgame/reductions.hpp"

#include "limgame/errors.hpp"
#include "limgame/qualitative.hpp"
#include "limgame/transform.hpp"

#include <unordered_set>

namespace limgame {

namespace {

constexpr StateIndex kNone = PureMemorylessStrategy::none;

ReductionOutput level_loop(const GameGraph& g, const RewardFunction& r, Objective kind) {
    if (g.count(Owner::Player2) != 0)
        throw PreconditionError("reduction needs a player-1 MDP");
    if (!is_bipartite(g)) throw PreconditionError("reduction needs a bipartite MDP");
    if (r.size() != g.size()) throw PreconditionError("reward function does not match the graph");
    if (sgn(r.min()) <= 0) throw PreconditionError("reduction needs strictly positive rewards");

    const std::size_t n = g.size();
    ReductionOutput out;
    out.kind = kind;
    out.starred = StateSet(n);
    out.assignment.assign(n, std::nullopt);
    out.step_of.assign(n, kNone);
    out.input_rewards = r.values();

    StateSet alive(n, true);
    for (const auto& level : r.levels()) {
        ReductionStep step;
        step.level = level;
        step.surviving = alive;
        step.winning = StateSet(n);
        step.removed = StateSet(n);
        step.strategy = PureMemorylessStrategy(Owner::Player1, n);

        StateSet exact(n), at_least(n);
        for (StateIndex s = 0; s < n; ++s) {
            if (!alive.contains(s)) continue;
            if (r[s] == level) exact.insert(s);
            if (r[s] >= level) at_least.insert(s);
        }
        if (exact.empty()) {
            step.skipped = true;
            out.log.push_back(std::move(step));
            continue;
        }

        auto won = kind == Objective::LimSup ? almost_sure_buchi_strategy(g, exact, alive)
                                             : almost_sure_cobuchi_strategy(g, at_least, alive);
        step.winning = won.winning;
        step.strategy = std::move(won.strategy);
        for (StateIndex u : step.winning.members()) {
            if (g.owner(u) != Owner::Player1) continue;
            out.starred.insert(u);
            out.assignment[u] = level;
            out.step_of[u] = out.log.size();
        }
        step.removed = attractor_p(g, step.winning, alive);
        alive -= step.removed;
        out.log.push_back(std::move(step));
    }
    out.final_surviving = alive;
    return out;
}

ConvertedMdp convert(const GameGraph& g, const RewardFunction& r, const ReductionOutput& out,
                     Objective kind) {
    if (out.kind != kind)
        throw PreconditionError("reduction output has the wrong kind for this conversion");
    if (out.input_rewards != r.values() || out.starred.universe() != g.size())
        throw PreconditionError("reduction output was not produced from this instance");
    if (out.starred.empty()) throw PreconditionError("no starred states to convert");

    const std::size_t n = g.size();
    std::vector<std::string> ids = g.ids();
    std::vector<Owner> owners(n);
    std::vector<std::vector<Edge>> succ(n);
    std::vector<Rational> rewards(n, Rational(0));
    for (StateIndex s = 0; s < n; ++s) {
        owners[s] = g.owner(s);
        succ[s].assign(g.successors(s).begin(), g.successors(s).end());
    }

    ConvertedMdp m;
    m.copy_for.assign(n, kNone);
    m.copy_of.assign(n, kNone);
    std::unordered_set<std::string> taken(ids.begin(), ids.end());
    for (StateIndex s : out.starred.members()) {
        std::string id = g.id(s) + "^";
        while (taken.count(id)) id += "^";
        taken.insert(id);
        StateIndex c = ids.size();
        ids.push_back(std::move(id));
        owners.push_back(Owner::Player1);
        succ.push_back({Edge{c, Rational(0)}});
        succ[s].push_back(Edge{c, Rational(0)});
        rewards.push_back(*out.assignment[s]);
        m.copy_for[s] = c;
        m.copy_of.push_back(s);
    }
    m.graph = GameGraph(std::move(ids), std::move(owners), std::move(succ));
    m.reward = RewardFunction(std::move(rewards));
    m.copies = StateSet(m.graph.size());
    for (StateIndex c = n; c < m.graph.size(); ++c) m.copies.insert(c);
    m.copy_for.resize(m.graph.size(), kNone);
    m.original_size = n;
    m.source = kind;
    return m;
}

} // namespace

ReductionOutput mdp_limsup_reduce(const GameGraph& g, const RewardFunction& r) {
    return level_loop(g, r, Objective::LimSup);
}

ReductionOutput mdp_liminf_reduce(const GameGraph& g, const RewardFunction& r) {
    return level_loop(g, r, Objective::LimInf);
}

ConvertedMdp limsup_convert(const GameGraph& g, const RewardFunction& r, const ReductionOutput& out) {
    return convert(g, r, out, Objective::LimSup);
}

ConvertedMdp liminf_convert(const GameGraph& g, const RewardFunction& r, const ReductionOutput& out) {
    return convert(g, r, out, Objective::LimInf);
}

WitnessPlan recover_strategy(const GameGraph& g, const RewardFunction& r, const ReductionOutput& out,
                             const ConvertedMdp& converted,
                             const PureMemorylessStrategy& max_strategy) {
    MaxSolution candidate{evaluate_strategy(converted, max_strategy), max_strategy, {}, {}};
    auto cert = check_certificate(converted, candidate);
    if (!cert.ok())
        throw InternalError("max strategy is not optimal: " + cert.violations.front());

    const std::size_t n = g.size();
    WitnessPlan plan;
    plan.commit = StateSet(n);
    plan.commit_step.assign(n, kNone);
    plan.phase1 = PureMemorylessStrategy(Owner::Player1, n);
    for (StateIndex s = 0; s < n; ++s) {
        if (g.owner(s) != Owner::Player1) continue;
        StateIndex t = max_strategy[s];
        if (t >= n) {
            plan.commit.insert(s);
            plan.commit_step[s] = out.step_of[s];
            t = out.log[out.step_of[s]].strategy[s];
        }
        plan.phase1.set(s, t);
    }

    ValueVector values{std::vector<Rational>(candidate.values.values.begin(),
                                             candidate.values.values.begin() + n)};
    plan.flattened = strategy_from_values(g, r, out.kind, values);
    return plan;
}

Instance plan_product_chain(const GameGraph& g, const RewardFunction& r, const ReductionOutput& out,
                            const WitnessPlan& plan) {
    const std::size_t n = g.size();
    // index of (s, step i), created for every state of U_i of a used step
    std::vector<std::vector<StateIndex>> committed(out.log.size());
    std::vector<std::string> ids = g.ids();
    std::vector<Rational> rewards = r.values();
    for (StateIndex s : plan.commit.members()) {
        std::size_t i = plan.commit_step[s];
        if (!committed[i].empty()) continue;
        committed[i].assign(n, kNone);
        for (StateIndex u : out.log[i].winning.members()) {
            committed[i][u] = ids.size();
            ids.push_back(g.id(u) + "@" + std::to_string(i));
            rewards.push_back(r[u]);
        }
    }

    std::vector<std::vector<Edge>> succ(ids.size());
    auto phase2_edges = [&](StateIndex s, std::size_t i) {
        std::vector<Edge> edges;
        if (g.is_player(s)) {
            edges.push_back(Edge{committed[i].at(out.log[i].strategy[s]), Rational(1)});
        } else {
            for (const auto& e : g.successors(s)) edges.push_back(Edge{committed[i].at(e.to), e.prob});
        }
        for (const auto& e : edges)
            if (e.to == kNone) throw InternalError("phase-2 play leaves its region");
        return edges;
    };
    for (StateIndex s = 0; s < n; ++s) {
        if (plan.commit.contains(s)) {
            succ[s] = phase2_edges(s, plan.commit_step[s]);
        } else if (g.is_player(s)) {
            succ[s] = {Edge{plan.phase1[s], Rational(1)}};
        } else {
            succ[s].assign(g.successors(s).begin(), g.successors(s).end());
        }
    }
    for (std::size_t i = 0; i < committed.size(); ++i)
        for (StateIndex u = 0; u < committed[i].size(); ++u)
            if (committed[i][u] != kNone) succ[committed[i][u]] = phase2_edges(u, i);

    std::vector<Owner> owners(ids.size(), Owner::Probabilistic);
    return Instance{GameGraph(std::move(ids), std::move(owners), std::move(succ)),
                    RewardFunction(std::move(rewards))};
}

PureMemorylessStrategy strategy_from_values(const GameGraph& g, const RewardFunction& r,
                                            Objective kind, const ValueVector& values) {
    if (kind == Objective::Max) throw PreconditionError("max objectives are not prefix-independent");
    if (!g.is_mdp()) throw PreconditionError("strategy extraction needs an MDP");
    const Owner controller = g.controller();
    std::vector<std::vector<StateIndex>> keep(g.size());
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (g.owner(s) != controller) continue;
        for (const auto& e : g.successors(s))
            if (values[e.to] == values[s]) keep[s].push_back(e.to);
        if (keep[s].empty())
            throw InternalError("no value-preserving move at \"" + g.id(s) + "\"");
    }
    GameGraph pruned = prune_choices(g, controller, keep);
    StateSet target(g.size());
    for (StateIndex s = 0; s < g.size(); ++s)
        if (r[s] >= values[s]) target.insert(s);
    StateSet all(g.size(), true);
    auto won = kind == Objective::LimSup ? almost_sure_buchi_strategy(pruned, target, all)
                                         : almost_sure_cobuchi_strategy(pruned, target, all);
    if (won.winning != all)
        throw InternalError("values are not optimal: value-preserving play cannot secure them");
    return won.strategy;
}

} // namespace limgame
