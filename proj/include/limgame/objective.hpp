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

#include <optional>
#include <string_view>

namespace limgame {

enum class Objective { LimSup, LimInf, Max };

constexpr std::string_view to_string(Objective kind) {
    switch (kind) {
    case Objective::LimSup: return "limsup";
    case Objective::LimInf: return "liminf";
    case Objective::Max: return "max";
    }
    return "?";
}

inline std::optional<Objective> parse_objective(std::string_view text) {
    if (text == "limsup") return Objective::LimSup;
    if (text == "liminf") return Objective::LimInf;
    if (text == "max") return Objective::Max;
    return std::nullopt;
}

/// limsup(r) = -liminf(-r) pointwise on plays, so the two swap under negation.
constexpr Objective dual(Objective kind) {
    return kind == Objective::LimSup ? Objective::LimInf
         : kind == Objective::LimInf ? Objective::LimSup
                                     : Objective::Max;
}

} // namespace limgame
