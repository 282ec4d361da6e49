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

#include "limgame/generator.hpp"
#include "limgame/instance_io.hpp"

#include <fstream>
#include <iterator>
#include <string>
#include <vector>

namespace limgame::test {

inline std::string read_data(const std::string& name) {
    std::ifstream in(std::string(LIMGAME_TEST_DATA) + "/" + name);
    return {std::istreambuf_iterator<char>(in), {}};
}

// s picks the coin p (10 or 2, fair) or b directly.
inline Instance coin() { return parse_game(read_data("coin.json")); }

inline Rational q(const char* text) { return parse_rational(text); }

struct CorpusSpec {
    std::size_t count = 200;
    std::size_t min_states = 2;
    std::size_t max_states = 7;
    std::uint64_t seed = 2024;
    bool mdp_only = false;
    std::int64_t reward_min = -3;
    std::int64_t reward_max = 6;
};

/// Seeded mix of player-1 MDPs and games with varying size, density and
/// share of probabilistic states.
inline std::vector<Instance> corpus(const CorpusSpec& spec = {}) {
    std::vector<Instance> out;
    const std::size_t span = spec.max_states - spec.min_states + 1;
    for (std::size_t i = 0; i < spec.count; ++i) {
        GeneratorOptions o;
        o.states = spec.min_states + i % span;
        o.density = 0.2 + 0.1 * static_cast<double>(i % 4);
        o.max_successors = 3;
        o.reward_min = spec.reward_min;
        o.reward_max = spec.reward_max;
        o.probabilistic_share = 0.25 + 0.15 * static_cast<double>(i % 3);
        o.kind = spec.mdp_only || i % 2 == 0 ? GeneratedKind::Mdp : GeneratedKind::Game;
        o.seed = spec.seed * 7919 + i;
        out.push_back(generate_instance(o));
    }
    return out;
}

} // namespace limgame::test
