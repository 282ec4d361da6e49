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

#include <string>
#include <string_view>

namespace limgame {

/**
 * Instance file format (JSON):
 *
 *   {"states":[{"id":"s","owner":"p1"|"p2"|"prob","reward":"3/2"}, ...],
 *    "edges":[{"from":"s","to":"t"}, {"from":"p","to":"t","prob":"1/2"}, ...]}
 *
 * "prob" is mandatory exactly when "from" is probabilistic. Rationals are
 * strings "n", "-n" or "n/d" with d > 0.
 *
 * Throws ValidationError (with a distinct kind per failure) on bad input.
 */
Instance parse_game(std::string_view text);

/// Canonical serialization: states in index order, edges grouped by source in
/// successor order, all rationals in lowest terms.
std::string serialize_game(const Instance& instance);

} // namespace limgame
