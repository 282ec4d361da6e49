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

#include "limgame/transform.hpp"

#include "limgame/errors.hpp"

#include <unordered_set>

namespace limgame {

RewardFunction shift_rewards(const RewardFunction& r, const Rational& c) {
    std::vector<Rational> shifted(r.values());
    for (auto& v : shifted) v += c;
    return RewardFunction(std::move(shifted));
}

std::pair<RewardFunction, Rational> make_positive(const RewardFunction& r) {
    if (r.size() == 0 || sgn(r.min()) > 0) return {r, Rational(0)};
    Rational c = 1 - r.min();
    return {shift_rewards(r, c), c};
}

namespace {

bool same_kind(Owner a, Owner b) {
    return (a == Owner::Probabilistic) == (b == Owner::Probabilistic);
}

std::vector<std::vector<Edge>> copy_successors(const GameGraph& g) {
    std::vector<std::vector<Edge>> succ(g.size());
    for (StateIndex s = 0; s < g.size(); ++s)
        succ[s].assign(g.successors(s).begin(), g.successors(s).end());
    return succ;
}

std::vector<Owner> owners_of(const GameGraph& g) {
    std::vector<Owner> owners(g.size());
    for (StateIndex s = 0; s < g.size(); ++s) owners[s] = g.owner(s);
    return owners;
}

} // namespace

bool is_bipartite(const GameGraph& g) {
    for (StateIndex s = 0; s < g.size(); ++s)
        for (const auto& e : g.successors(s))
            if (same_kind(g.owner(s), g.owner(e.to))) return false;
    return true;
}

std::pair<BipartiteMapping, RewardFunction> bipartite_normalize(const GameGraph& g,
                                                                const RewardFunction& r) {
    // Player dummies (on probabilistic -> probabilistic edges) belong to the
    // controller so that an MDP stays an MDP.
    const Owner player_dummy = g.controller();

    std::vector<std::string> ids = g.ids();
    std::vector<Owner> owners = owners_of(g);
    std::vector<std::vector<Edge>> succ = copy_successors(g);
    std::vector<Rational> rewards = r.values();
    std::vector<DummyState> dummies;

    std::unordered_set<std::string> taken(ids.begin(), ids.end());
    auto fresh_id = [&](StateIndex s, StateIndex t) {
        std::string base = "~" + g.id(s) + ">" + g.id(t);
        std::string id = base;
        for (int k = 1; taken.count(id); ++k) id = base + "#" + std::to_string(k);
        taken.insert(id);
        return id;
    };

    for (StateIndex s = 0; s < g.size(); ++s) {
        for (std::size_t i = 0; i < succ[s].size(); ++i) {
            const StateIndex t = succ[s][i].to;
            if (!same_kind(g.owner(s), g.owner(t))) continue;
            const StateIndex d = ids.size();
            const bool player_edge = g.is_player(s);
            ids.push_back(fresh_id(s, t));
            owners.push_back(player_edge ? Owner::Probabilistic : player_dummy);
            succ.push_back({Edge{t, player_edge ? Rational(1) : Rational(0)}});
            rewards.push_back(r[s]);
            dummies.push_back(DummyState{d, s, t});
            succ[s][i].to = d;
        }
    }

    BipartiteMapping mapping{g, GameGraph(std::move(ids), std::move(owners), std::move(succ)),
                             std::move(dummies)};
    return {std::move(mapping), RewardFunction(std::move(rewards))};
}

GameGraph BipartiteMapping::splice() const {
    const std::size_t n = original_size();
    std::vector<std::string> ids(transformed.ids().begin(), transformed.ids().begin() + n);
    std::vector<Owner> owners(n);
    std::vector<std::vector<Edge>> succ(n);
    for (StateIndex s = 0; s < n; ++s) {
        owners[s] = transformed.owner(s);
        for (auto e : transformed.successors(s)) {
            if (e.to >= n) e.to = transformed.successors(e.to).front().to;
            succ[s].push_back(e);
        }
    }
    return GameGraph(std::move(ids), std::move(owners), std::move(succ));
}

GameGraph restrict(const GameGraph& g, const StateSet& keep) {
    std::vector<StateIndex> renumber(g.size(), PureMemorylessStrategy::none);
    std::vector<std::string> ids;
    std::vector<Owner> owners;
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (!keep.contains(s)) continue;
        renumber[s] = ids.size();
        ids.push_back(g.id(s));
        owners.push_back(g.owner(s));
    }
    std::vector<std::vector<Edge>> succ(ids.size());
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (!keep.contains(s)) continue;
        auto& out = succ[renumber[s]];
        for (const auto& e : g.successors(s)) {
            if (keep.contains(e.to)) {
                out.push_back(Edge{renumber[e.to], e.prob});
            } else if (g.owner(s) == Owner::Probabilistic) {
                throw PreconditionError("restriction removes successor \"" + g.id(e.to) +
                                        "\" of kept probabilistic state \"" + g.id(s) + "\"");
            }
        }
        if (out.empty())
            throw PreconditionError("restriction leaves player state \"" + g.id(s) +
                                    "\" without successors");
    }
    return GameGraph(std::move(ids), std::move(owners), std::move(succ));
}

Instance mirror(const GameGraph& g, const RewardFunction& r) {
    std::vector<Owner> owners = owners_of(g);
    for (auto& o : owners) {
        if (o == Owner::Player1) o = Owner::Player2;
        else if (o == Owner::Player2) o = Owner::Player1;
    }
    std::vector<Rational> negated(r.values());
    for (auto& v : negated) v = -v;
    return Instance{GameGraph(g.ids(), std::move(owners), copy_successors(g)),
                    RewardFunction(std::move(negated))};
}

GameGraph fix_strategy(const GameGraph& g, const PureMemorylessStrategy& strategy) {
    if (!strategy.valid_for(g))
        throw PreconditionError("strategy does not match the graph");
    std::vector<Owner> owners = owners_of(g);
    std::vector<std::vector<Edge>> succ = copy_successors(g);
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (owners[s] != strategy.player()) continue;
        owners[s] = Owner::Probabilistic;
        succ[s] = {Edge{strategy[s], Rational(1)}};
    }
    return GameGraph(g.ids(), std::move(owners), std::move(succ));
}

GameGraph prune_choices(const GameGraph& g, Owner owner,
                        const std::vector<std::vector<StateIndex>>& allowed) {
    std::vector<std::vector<Edge>> succ = copy_successors(g);
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (g.owner(s) != owner) continue;
        succ[s].clear();
        for (auto t : allowed[s]) succ[s].push_back(Edge{t, Rational(0)});
    }
    return GameGraph(g.ids(), owners_of(g), std::move(succ));
}

} // namespace limgame
