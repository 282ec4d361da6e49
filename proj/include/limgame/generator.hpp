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

#include <cstdint>

namespace limgame {

enum class GeneratedKind { Mdp, Game };

struct GeneratorOptions {
    std::size_t states = 6;
    double density = 0.4;          // chance of each extra edge, in (0, 1]
    std::size_t max_successors = 0; // 0: no cap
    std::int64_t reward_min = 0;
    std::int64_t reward_max = 10;
    GeneratedKind kind = GeneratedKind::Game;
    double probabilistic_share = 0.4;
    std::uint64_t seed = 1;
};

/// Random valid instance. Deterministic for fixed options: draws come from
/// mt19937_64 seeded with `seed`. Probabilities are small-denominator
/// weights normalized to exactly one; rewards are integers in the range.
/// Throws PreconditionError on invalid options.
Instance generate_instance(const GeneratorOptions& options);

} // namespace limgame
