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

#include "limgame/qualitative.hpp"

#include "limgame/errors.hpp"
#include "scc.hpp"

#include <algorithm>
#include <deque>

namespace limgame {

namespace {

constexpr std::size_t kNone = MecDecomposition::none;

void require_mdp(const GameGraph& g) {
    if (!g.is_mdp())
        throw PreconditionError("qualitative analysis needs an MDP (one player kind only)");
}

// SCC id per state of the subgraph induced by `mask` (none outside it).
std::vector<std::size_t> scc_within(const GameGraph& g, const StateSet& mask) {
    std::vector<std::vector<std::size_t>> adj(g.size());
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (!mask.contains(s)) continue;
        for (const auto& e : g.successors(s))
            if (mask.contains(e.to)) adj[s].push_back(e.to);
    }
    auto comp = detail::tarjan_scc(adj);
    for (StateIndex s = 0; s < g.size(); ++s)
        if (!mask.contains(s)) comp[s] = kNone;
    return comp;
}

// Largest subset of `within` that is closed for probabilistic states and in
// which every player state keeps a successor. States in `sticky` (already
// won) are never removed.
StateSet closed_part(const GameGraph& g, StateSet w, const StateSet& sticky) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (StateIndex s = 0; s < g.size(); ++s) {
            if (!w.contains(s) || sticky.contains(s)) continue;
            bool keep;
            if (g.is_player(s)) {
                keep = std::any_of(g.successors(s).begin(), g.successors(s).end(),
                                   [&](const Edge& e) { return w.contains(e.to); });
            } else {
                keep = std::all_of(g.successors(s).begin(), g.successors(s).end(),
                                   [&](const Edge& e) { return w.contains(e.to); });
            }
            if (!keep) {
                w.erase(s);
                changed = true;
            }
        }
    }
    return w;
}

StateSet backward_reach(const GameGraph& g, const StateSet& target, const StateSet& within) {
    StateSet seen = target & within;
    std::deque<StateIndex> queue;
    for (auto s : seen.members()) queue.push_back(s);
    while (!queue.empty()) {
        StateIndex x = queue.front();
        queue.pop_front();
        for (StateIndex p : g.predecessors(x)) {
            if (within.contains(p) && !seen.contains(p)) {
                seen.insert(p);
                queue.push_back(p);
            }
        }
    }
    return seen;
}

// Positive-probability distance to `target` inside the region `w`, where
// every state of `w` is assumed to reach the target inside `w`. Player
// states step to the lowest-index successor one layer closer; target states
// pick their lowest-index successor inside `w`.
void layered_choices(const GameGraph& g, const StateSet& target, const StateSet& w,
                     PureMemorylessStrategy& strategy) {
    const std::size_t n = g.size();
    std::vector<std::size_t> layer(n, kNone);
    std::deque<StateIndex> queue;
    for (StateIndex s = 0; s < n; ++s) {
        if (w.contains(s) && target.contains(s)) {
            layer[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        StateIndex x = queue.front();
        queue.pop_front();
        for (StateIndex p : g.predecessors(x)) {
            if (w.contains(p) && layer[p] == kNone) {
                layer[p] = layer[x] + 1;
                queue.push_back(p);
            }
        }
    }
    for (StateIndex s = 0; s < n; ++s) {
        if (!w.contains(s) || !g.is_player(s)) continue;
        bool moved = false;
        for (const auto& e : g.successors(s)) {
            if (!w.contains(e.to)) continue;
            if (layer[s] == 0 || layer[e.to] + 1 == layer[s]) {
                strategy.set(s, e.to);
                moved = true;
                break;
            }
        }
        // a target state may have nowhere left to go once reached
        if (!moved && layer[s] != 0)
            throw InternalError("state \"" + g.id(s) + "\" cannot make progress in its region");
    }
}

PureMemorylessStrategy default_strategy(const GameGraph& g) {
    return PureMemorylessStrategy::first_successor(g, g.controller());
}

} // namespace

MecDecomposition mec_decompose(const GameGraph& g) {
    return mec_decompose(g, StateSet(g.size(), true));
}

MecDecomposition mec_decompose(const GameGraph& g, const StateSet& within) {
    require_mdp(g);
    StateSet candidate = within;
    std::vector<std::size_t> comp;
    for (;;) {
        comp = scc_within(g, candidate);
        bool changed = false;
        for (StateIndex s = 0; s < g.size(); ++s) {
            if (!candidate.contains(s)) continue;
            auto out = g.successors(s);
            auto inside = [&](const Edge& e) {
                return candidate.contains(e.to) && comp[e.to] == comp[s];
            };
            bool keep = g.is_player(s) ? std::any_of(out.begin(), out.end(), inside)
                                       : std::all_of(out.begin(), out.end(), inside);
            if (!keep) {
                candidate.erase(s);
                changed = true;
            }
        }
        if (!changed) break;
    }

    MecDecomposition result;
    result.component_of.assign(g.size(), kNone);
    std::vector<std::size_t> renumber(g.size(), kNone);
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (!candidate.contains(s)) continue;
        std::size_t& slot = renumber[comp[s]];
        if (slot == kNone) {
            slot = result.components.size();
            result.components.emplace_back(g.size());
        }
        result.components[slot].insert(s);
        result.component_of[s] = slot;
    }
    return result;
}

StateSet attractor_p(const GameGraph& g, const StateSet& u) {
    return attractor_p(g, u, StateSet(g.size(), true));
}

StateSet attractor_p(const GameGraph& g, const StateSet& u, const StateSet& within) {
    const std::size_t n = g.size();
    StateSet attr = u & within;
    // Remaining successors (inside `within`) not yet in the attractor.
    std::vector<std::size_t> pending(n, 0);
    for (StateIndex s = 0; s < n; ++s) {
        if (!within.contains(s)) continue;
        for (const auto& e : g.successors(s)) pending[s] += within.contains(e.to);
    }
    std::deque<StateIndex> queue;
    for (auto s : attr.members()) queue.push_back(s);
    while (!queue.empty()) {
        StateIndex x = queue.front();
        queue.pop_front();
        for (StateIndex p : g.predecessors(x)) {
            if (!within.contains(p) || attr.contains(p)) continue;
            --pending[p];
            if (!g.is_player(p) || pending[p] == 0) {
                attr.insert(p);
                queue.push_back(p);
            }
        }
    }
    return attr;
}

StateSet almost_sure_reach(const GameGraph& g, const StateSet& target) {
    return almost_sure_reach_strategy(g, target, StateSet(g.size(), true)).winning;
}

AlmostSureResult almost_sure_reach_strategy(const GameGraph& g, const StateSet& target,
                                            const StateSet& within) {
    require_mdp(g);
    // Targets are absorbing for this objective: reaching one wins.
    const StateSet goal = target & within;
    StateSet w = closed_part(g, within, goal);
    for (;;) {
        StateSet reach = backward_reach(g, goal, w);
        if (reach == w) break;
        w = closed_part(g, reach, goal);
    }
    AlmostSureResult result{w, default_strategy(g)};
    layered_choices(g, target, w, result.strategy);
    return result;
}

StateSet almost_sure_buchi(const GameGraph& g, const StateSet& b) {
    return almost_sure_buchi_strategy(g, b, StateSet(g.size(), true)).winning;
}

AlmostSureResult almost_sure_buchi_strategy(const GameGraph& g, const StateSet& b,
                                            const StateSet& within) {
    auto mecs = mec_decompose(g, within);
    StateSet good(g.size());
    for (const auto& m : mecs.components)
        if (m.intersects(b)) good |= m;
    auto result = almost_sure_reach_strategy(g, good, within);
    // Inside a good MEC keep revisiting b without leaving the component.
    for (const auto& m : mecs.components)
        if (m.intersects(b)) layered_choices(g, b & m, m, result.strategy);
    return result;
}

StateSet almost_sure_cobuchi(const GameGraph& g, const StateSet& c) {
    return almost_sure_cobuchi_strategy(g, c, StateSet(g.size(), true)).winning;
}

AlmostSureResult almost_sure_cobuchi_strategy(const GameGraph& g, const StateSet& c,
                                              const StateSet& within) {
    auto mecs = mec_decompose(g, within & c);
    StateSet good(g.size());
    for (const auto& m : mecs.components) good |= m;
    auto result = almost_sure_reach_strategy(g, good, within);
    // Inside an end component contained in c, never leave it.
    for (const auto& m : mecs.components) layered_choices(g, m, m, result.strategy);
    return result;
}

} // namespace limgame
