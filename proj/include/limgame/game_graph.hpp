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

#include "limgame/rational.hpp"
#include "limgame/state_set.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace limgame {

enum class Owner : std::uint8_t { Player1, Player2, Probabilistic };

const char* to_string(Owner owner);

/// Outgoing edge. `prob` is the transition probability for probabilistic
/// sources and zero for player-owned sources.
struct Edge {
    StateIndex to;
    Rational prob;
};

/**
 * Turn-based probabilistic game graph.
 *
 * States are indexed densely in declaration order; successor lists are kept
 * sorted by target index so that every "lowest index" tie-break in the
 * library is a scan from the front. Instances are immutable once built and
 * always satisfy:
 *  - every state has at least one outgoing edge;
 *  - probabilistic states carry a distribution with positive entries that
 *    sum to exactly one, and edges exist exactly where the probability is
 *    positive;
 *  - state ids are unique.
 */
class GameGraph {
public:
    struct EdgeSpec {
        std::string from;
        std::string to;
        std::optional<Rational> prob;
    };

    GameGraph() = default;

    /// Index-based construction. Throws ValidationError when an invariant fails.
    GameGraph(std::vector<std::string> ids, std::vector<Owner> owners,
              std::vector<std::vector<Edge>> successors);

    /// Id-based construction used by the parser.
    static GameGraph from_specs(std::vector<std::string> ids, std::vector<Owner> owners,
                                const std::vector<EdgeSpec>& edges);

    std::size_t size() const noexcept { return ids_.size(); }
    const std::string& id(StateIndex s) const { return ids_[s]; }
    const std::vector<std::string>& ids() const noexcept { return ids_; }
    Owner owner(StateIndex s) const { return owners_[s]; }
    bool is_player(StateIndex s) const { return owners_[s] != Owner::Probabilistic; }
    std::span<const Edge> successors(StateIndex s) const { return succ_[s]; }
    std::span<const StateIndex> predecessors(StateIndex s) const { return pred_[s]; }
    bool has_edge(StateIndex from, StateIndex to) const;
    /// Probability on (from, to) for probabilistic `from`; zero when absent.
    Rational probability(StateIndex from, StateIndex to) const;
    std::optional<StateIndex> index_of(const std::string& id) const;
    std::size_t edge_count() const noexcept;

    std::size_t count(Owner owner) const noexcept;
    std::vector<StateIndex> states_of(Owner owner) const;
    StateSet set_of(Owner owner) const;

    /// At most one player kind present.
    bool is_mdp() const noexcept { return count(Owner::Player1) == 0 || count(Owner::Player2) == 0; }
    /// The player controlling an MDP: Player1 unless only Player2 states exist.
    Owner controller() const noexcept;

    friend bool operator==(const GameGraph& a, const GameGraph& b);

private:
    void validate_and_index();

    std::vector<std::string> ids_;
    std::vector<Owner> owners_;
    std::vector<std::vector<Edge>> succ_;
    std::vector<std::vector<StateIndex>> pred_;
    std::unordered_map<std::string, StateIndex> index_;
};

/// Reward per state plus the sorted distinct reward levels v_0 > ... > v_k.
class RewardFunction {
public:
    RewardFunction() = default;
    explicit RewardFunction(std::vector<Rational> rewards);

    std::size_t size() const noexcept { return rewards_.size(); }
    const Rational& operator[](StateIndex s) const { return rewards_[s]; }
    const std::vector<Rational>& values() const noexcept { return rewards_; }
    /// Strictly decreasing.
    const std::vector<Rational>& levels() const noexcept { return levels_; }
    const Rational& min() const { return levels_.back(); }
    const Rational& max() const { return levels_.front(); }

    /// Indicator reward: 1 on members, 0 elsewhere (the boolean rewards r_B).
    static RewardFunction indicator(const StateSet& set);

    friend bool operator==(const RewardFunction& a, const RewardFunction& b) {
        return a.rewards_ == b.rewards_;
    }

private:
    std::vector<Rational> rewards_;
    std::vector<Rational> levels_;
};

/// Pure memoryless strategy for one player: a successor for each of the
/// player's states, `none` elsewhere.
class PureMemorylessStrategy {
public:
    static constexpr StateIndex none = std::numeric_limits<StateIndex>::max();

    PureMemorylessStrategy() = default;
    PureMemorylessStrategy(Owner player, std::size_t universe)
        : player_(player), choice_(universe, none) {}

    /// Lowest-index successor at every state of `player`.
    static PureMemorylessStrategy first_successor(const GameGraph& g, Owner player);

    Owner player() const noexcept { return player_; }
    std::size_t universe() const noexcept { return choice_.size(); }
    StateIndex operator[](StateIndex s) const { return choice_[s]; }
    void set(StateIndex s, StateIndex t) { choice_[s] = t; }
    bool defined(StateIndex s) const { return choice_[s] != none; }

    /// Domain is exactly the player's states and every choice is an edge.
    bool valid_for(const GameGraph& g) const;

    friend bool operator==(const PureMemorylessStrategy&, const PureMemorylessStrategy&) = default;

private:
    Owner player_ = Owner::Player1;
    std::vector<StateIndex> choice_;
};

/// Exact value per state.
struct ValueVector {
    std::vector<Rational> values;

    std::size_t size() const noexcept { return values.size(); }
    const Rational& operator[](StateIndex s) const { return values[s]; }
    Rational& operator[](StateIndex s) { return values[s]; }
    friend bool operator==(const ValueVector&, const ValueVector&) = default;
};

/// Number of pure memoryless strategies of `player`, saturating at UINT64_MAX.
std::uint64_t strategy_count(const GameGraph& g, Owner player);

/// The `index`-th strategy in mixed-radix order over the player's states
/// (lowest state index is the least significant digit).
PureMemorylessStrategy strategy_at(const GameGraph& g, Owner player, std::uint64_t index);

struct Instance {
    GameGraph graph;
    RewardFunction reward;
};

} // namespace limgame
