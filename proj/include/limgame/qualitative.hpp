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

#include <vector>

namespace limgame {

// Qualitative analyses on MDPs. The controlling player is whichever player
// owns the non-probabilistic states (see GameGraph::controller). Every
// operation has an overload taking `within`, the state set of a subgame, so
// the reduction loop can work on G_i without materializing it. Player
// successors outside `within` are ignored; a probabilistic state with a
// successor outside `within` can never be part of an end component or of an
// almost-sure region.

struct MecDecomposition {
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    std::vector<StateSet> components;   // ordered by lowest member index
    std::vector<std::size_t> component_of; // state -> component, or none
};

/// Maximal end components by iterated SCC refinement.
/// Throws PreconditionError when both player kinds are present.
MecDecomposition mec_decompose(const GameGraph& g);
MecDecomposition mec_decompose(const GameGraph& g, const StateSet& within);

/// Attr_P(u): least fixpoint of
///   T <- T  u {probabilistic s : E(s) meets T}  u {player s : E(s) inside T}.
StateSet attractor_p(const GameGraph& g, const StateSet& u);
StateSet attractor_p(const GameGraph& g, const StateSet& u, const StateSet& within);

/// Winning region together with a pure memoryless strategy that wins with
/// probability one from every state of the region.
struct AlmostSureResult {
    StateSet winning;
    PureMemorylessStrategy strategy;
};

StateSet almost_sure_reach(const GameGraph& g, const StateSet& target);
AlmostSureResult almost_sure_reach_strategy(const GameGraph& g, const StateSet& target,
                                            const StateSet& within);

/// W_1(Buchi(b)): almost-sure reachability of the MECs that meet b.
StateSet almost_sure_buchi(const GameGraph& g, const StateSet& b);
AlmostSureResult almost_sure_buchi_strategy(const GameGraph& g, const StateSet& b,
                                            const StateSet& within);

/// W_1(coBuchi(c)): almost-sure reachability of the maximal end components
/// lying inside c.
StateSet almost_sure_cobuchi(const GameGraph& g, const StateSet& c);
AlmostSureResult almost_sure_cobuchi_strategy(const GameGraph& g, const StateSet& c,
                                              const StateSet& within);

} // namespace limgame
