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

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace limgame::detail {

/// Iterative Tarjan over an adjacency list. Components are numbered in
/// completion order, which is a reverse topological order of the
/// condensation (sinks first).
inline std::vector<std::size_t> tarjan_scc(const std::vector<std::vector<std::size_t>>& adj,
                                           std::size_t* component_count = nullptr) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    const std::size_t n = adj.size();
    std::vector<std::size_t> comp(n, unset), index(n, unset), low(n, 0);
    std::vector<std::size_t> stack;
    std::vector<char> on_stack(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> call;
    std::size_t counter = 0, comps = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unset) continue;
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        call.push_back({root, 0});
        while (!call.empty()) {
            const std::size_t v = call.back().first;
            std::size_t& next = call.back().second;
            if (next < adj[v].size()) {
                const std::size_t w = adj[v][next++];
                if (index[w] == unset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comps;
                } while (w != v);
                ++comps;
            }
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[v]);
        }
    }
    if (component_count) *component_count = comps;
    return comp;
}

} // namespace limgame::detail
