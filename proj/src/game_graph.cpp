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

#include "limgame/game_graph.hpp"

#include "limgame/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace limgame {

const char* to_string(ValidationErrorKind kind) {
    switch (kind) {
    case ValidationErrorKind::MalformedDocument: return "malformed document";
    case ValidationErrorKind::MalformedRational: return "malformed rational";
    case ValidationErrorKind::DuplicateState: return "duplicate state";
    case ValidationErrorKind::UnknownState: return "unknown state";
    case ValidationErrorKind::DuplicateEdge: return "duplicate edge";
    case ValidationErrorKind::NoOutgoingEdge: return "no outgoing edge";
    case ValidationErrorKind::NonPositiveProbability: return "nonpositive probability";
    case ValidationErrorKind::DistributionSum: return "distribution does not sum to 1";
    case ValidationErrorKind::MissingProbability: return "missing probability";
    case ValidationErrorKind::UnexpectedProbability: return "unexpected probability";
    case ValidationErrorKind::MissingReward: return "missing reward";
    }
    return "?";
}

const char* to_string(Owner owner) {
    switch (owner) {
    case Owner::Player1: return "p1";
    case Owner::Player2: return "p2";
    case Owner::Probabilistic: return "prob";
    }
    return "?";
}

GameGraph::GameGraph(std::vector<std::string> ids, std::vector<Owner> owners,
                     std::vector<std::vector<Edge>> successors)
    : ids_(std::move(ids)), owners_(std::move(owners)), succ_(std::move(successors)) {
    if (owners_.size() != ids_.size() || succ_.size() != ids_.size())
        throw ValidationError(ValidationErrorKind::MalformedDocument,
                              "state, owner and successor lists differ in length");
    validate_and_index();
}

GameGraph GameGraph::from_specs(std::vector<std::string> ids, std::vector<Owner> owners,
                                const std::vector<EdgeSpec>& edges) {
    std::unordered_map<std::string, StateIndex> index;
    for (StateIndex s = 0; s < ids.size(); ++s) {
        if (!index.emplace(ids[s], s).second)
            throw ValidationError(ValidationErrorKind::DuplicateState,
                                  "duplicate state id \"" + ids[s] + "\"");
    }
    std::vector<std::vector<Edge>> succ(ids.size());
    for (const auto& e : edges) {
        auto from = index.find(e.from);
        if (from == index.end())
            throw ValidationError(ValidationErrorKind::UnknownState,
                                  "edge references unknown state \"" + e.from + "\"");
        auto to = index.find(e.to);
        if (to == index.end())
            throw ValidationError(ValidationErrorKind::UnknownState,
                                  "edge references unknown state \"" + e.to + "\"");
        bool prob_source = owners.at(from->second) == Owner::Probabilistic;
        if (prob_source && !e.prob)
            throw ValidationError(ValidationErrorKind::MissingProbability,
                                  "edge " + e.from + " -> " + e.to + " needs a probability");
        if (!prob_source && e.prob)
            throw ValidationError(ValidationErrorKind::UnexpectedProbability,
                                  "edge " + e.from + " -> " + e.to +
                                      " leaves a player state and must not carry a probability");
        succ[from->second].push_back(Edge{to->second, prob_source ? *e.prob : Rational(0)});
    }
    return GameGraph(std::move(ids), std::move(owners), std::move(succ));
}

void GameGraph::validate_and_index() {
    index_.clear();
    for (StateIndex s = 0; s < ids_.size(); ++s) {
        if (!index_.emplace(ids_[s], s).second)
            throw ValidationError(ValidationErrorKind::DuplicateState,
                                  "duplicate state id \"" + ids_[s] + "\"");
    }
    pred_.assign(ids_.size(), {});
    for (StateIndex s = 0; s < ids_.size(); ++s) {
        auto& out = succ_[s];
        if (out.empty())
            throw ValidationError(ValidationErrorKind::NoOutgoingEdge,
                                  "state \"" + ids_[s] + "\" has no outgoing edge");
        std::sort(out.begin(), out.end(),
                  [](const Edge& a, const Edge& b) { return a.to < b.to; });
        Rational total = 0;
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i].to >= ids_.size())
                throw ValidationError(ValidationErrorKind::UnknownState,
                                      "edge from \"" + ids_[s] + "\" to an undeclared state");
            if (i > 0 && out[i].to == out[i - 1].to)
                throw ValidationError(ValidationErrorKind::DuplicateEdge,
                                      "duplicate edge " + ids_[s] + " -> " + ids_[out[i].to]);
            if (owners_[s] == Owner::Probabilistic) {
                out[i].prob.canonicalize();
                if (sgn(out[i].prob) <= 0)
                    throw ValidationError(ValidationErrorKind::NonPositiveProbability,
                                          "nonpositive probability " + to_string(out[i].prob) +
                                              " on " + ids_[s] + " -> " + ids_[out[i].to]);
                total += out[i].prob;
            } else {
                out[i].prob = 0;
            }
            pred_[out[i].to].push_back(s);
        }
        if (owners_[s] == Owner::Probabilistic && total != 1)
            throw ValidationError(ValidationErrorKind::DistributionSum,
                                  "distribution of \"" + ids_[s] + "\" sums to " +
                                      to_string(total) + " != 1");
    }
}

bool GameGraph::has_edge(StateIndex from, StateIndex to) const {
    const auto& out = succ_[from];
    auto it = std::lower_bound(out.begin(), out.end(), to,
                               [](const Edge& e, StateIndex t) { return e.to < t; });
    return it != out.end() && it->to == to;
}

Rational GameGraph::probability(StateIndex from, StateIndex to) const {
    for (const auto& e : succ_[from])
        if (e.to == to) return e.prob;
    return 0;
}

std::optional<StateIndex> GameGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GameGraph::edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& out : succ_) n += out.size();
    return n;
}

std::size_t GameGraph::count(Owner owner) const noexcept {
    return static_cast<std::size_t>(std::count(owners_.begin(), owners_.end(), owner));
}

std::vector<StateIndex> GameGraph::states_of(Owner owner) const {
    std::vector<StateIndex> out;
    for (StateIndex s = 0; s < size(); ++s)
        if (owners_[s] == owner) out.push_back(s);
    return out;
}

StateSet GameGraph::set_of(Owner owner) const {
    StateSet set(size());
    for (StateIndex s = 0; s < size(); ++s)
        if (owners_[s] == owner) set.insert(s);
    return set;
}

Owner GameGraph::controller() const noexcept {
    return count(Owner::Player1) == 0 && count(Owner::Player2) > 0 ? Owner::Player2
                                                                   : Owner::Player1;
}

bool operator==(const GameGraph& a, const GameGraph& b) {
    if (a.ids_ != b.ids_ || a.owners_ != b.owners_ || a.succ_.size() != b.succ_.size())
        return false;
    for (std::size_t s = 0; s < a.succ_.size(); ++s) {
        if (a.succ_[s].size() != b.succ_[s].size()) return false;
        for (std::size_t i = 0; i < a.succ_[s].size(); ++i)
            if (a.succ_[s][i].to != b.succ_[s][i].to || a.succ_[s][i].prob != b.succ_[s][i].prob)
                return false;
    }
    return true;
}

RewardFunction::RewardFunction(std::vector<Rational> rewards) : rewards_(std::move(rewards)) {
    // GMP only compares canonical fractions correctly
    for (auto& q : rewards_) q.canonicalize();
    std::set<Rational, std::greater<>> distinct(rewards_.begin(), rewards_.end());
    levels_.assign(distinct.begin(), distinct.end());
}

RewardFunction RewardFunction::indicator(const StateSet& set) {
    std::vector<Rational> r(set.universe());
    for (StateIndex s = 0; s < r.size(); ++s) r[s] = set.contains(s) ? 1 : 0;
    return RewardFunction(std::move(r));
}

PureMemorylessStrategy PureMemorylessStrategy::first_successor(const GameGraph& g, Owner player) {
    PureMemorylessStrategy strategy(player, g.size());
    for (StateIndex s = 0; s < g.size(); ++s)
        if (g.owner(s) == player) strategy.set(s, g.successors(s).front().to);
    return strategy;
}

bool PureMemorylessStrategy::valid_for(const GameGraph& g) const {
    if (choice_.size() != g.size()) return false;
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (g.owner(s) == player_) {
            if (choice_[s] == none || !g.has_edge(s, choice_[s])) return false;
        } else if (choice_[s] != none) {
            return false;
        }
    }
    return true;
}

std::uint64_t strategy_count(const GameGraph& g, Owner player) {
    std::uint64_t total = 1;
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (g.owner(s) != player) continue;
        std::uint64_t d = g.successors(s).size();
        if (total > std::numeric_limits<std::uint64_t>::max() / d)
            return std::numeric_limits<std::uint64_t>::max();
        total *= d;
    }
    return total;
}

PureMemorylessStrategy strategy_at(const GameGraph& g, Owner player, std::uint64_t index) {
    PureMemorylessStrategy st(player, g.size());
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (g.owner(s) != player) continue;
        auto out = g.successors(s);
        st.set(s, out[index % out.size()].to);
        index /= out.size();
    }
    return st;
}

} // namespace limgame
