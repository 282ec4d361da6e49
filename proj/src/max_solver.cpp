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

#include "limgame/max_solver.hpp"

#include "limgame/errors.hpp"
#include "limgame/linear_solve.hpp"
#include "scc.hpp"

#include <deque>

namespace limgame {

namespace {

constexpr StateIndex kNone = ConvertedMdp::none;

void require_shape(const ConvertedMdp& m) {
    const auto& g = m.graph;
    if (g.count(Owner::Player2) != 0)
        throw PreconditionError("max solver needs a player-1 MDP");
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (m.copies.contains(s)) {
            if (g.owner(s) != Owner::Player1 || g.successors(s).size() != 1 ||
                g.successors(s).front().to != s)
                throw PreconditionError("copy state \"" + g.id(s) + "\" is not absorbing");
            if (sgn(m.reward[s]) < 0)
                throw PreconditionError("copy state \"" + g.id(s) + "\" has a negative reward");
        } else if (m.reward[s] != 0) {
            throw PreconditionError("state \"" + g.id(s) +
                                    "\" carries a nonzero reward but is not an absorbing copy");
        }
    }
}

// One row of the induced chain: (successor, probability) pairs.
using ChainRow = std::vector<std::pair<StateIndex, Rational>>;

std::vector<ChainRow> induced_chain(const GameGraph& g, const PureMemorylessStrategy& strategy) {
    std::vector<ChainRow> rows(g.size());
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (g.is_player(s)) {
            rows[s].push_back({strategy[s], Rational(1)});
        } else {
            for (const auto& e : g.successors(s)) rows[s].push_back({e.to, e.prob});
        }
    }
    return rows;
}

} // namespace

ConvertedMdp as_converted(const GameGraph& g, const RewardFunction& r) {
    ConvertedMdp m;
    m.graph = g;
    m.reward = r;
    m.copies = StateSet(g.size());
    m.copy_of.assign(g.size(), kNone);
    m.copy_for.assign(g.size(), kNone);
    m.original_size = g.size();
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (sgn(r[s]) > 0) m.copies.insert(s);
        else if (sgn(r[s]) < 0)
            throw PreconditionError("max instances need nonnegative rewards");
    }
    require_shape(m);
    return m;
}

ValueVector evaluate_strategy(const ConvertedMdp& m, const PureMemorylessStrategy& strategy) {
    require_shape(m);
    const auto& g = m.graph;
    const std::size_t n = g.size();
    if (!strategy.valid_for(g)) throw PreconditionError("strategy does not match the graph");
    auto rows = induced_chain(g, strategy);

    ValueVector x{std::vector<Rational>(n)};
    // Only states that reach a copy with positive probability carry value.
    StateSet live(n);
    {
        std::vector<std::vector<StateIndex>> pred(n);
        for (StateIndex s = 0; s < n; ++s)
            for (const auto& [t, p] : rows[s]) pred[t].push_back(s);
        std::deque<StateIndex> queue;
        for (StateIndex s = 0; s < n; ++s) {
            if (m.copies.contains(s)) {
                live.insert(s);
                queue.push_back(s);
            }
        }
        while (!queue.empty()) {
            StateIndex t = queue.front();
            queue.pop_front();
            for (StateIndex s : pred[t]) {
                if (!live.contains(s)) {
                    live.insert(s);
                    queue.push_back(s);
                }
            }
        }
    }

    std::vector<std::vector<std::size_t>> adj(n);
    for (StateIndex s = 0; s < n; ++s)
        if (live.contains(s) && !m.copies.contains(s))
            for (const auto& [t, p] : rows[s])
                if (live.contains(t)) adj[s].push_back(t);
    std::size_t comps = 0;
    auto comp = detail::tarjan_scc(adj, &comps);
    std::vector<std::vector<StateIndex>> members(comps);
    for (StateIndex s = 0; s < n; ++s) members[comp[s]].push_back(s);

    StateSet known(n);
    for (StateIndex s = 0; s < n; ++s) {
        if (m.copies.contains(s)) {
            x[s] = m.reward[s];
            known.insert(s);
        } else if (!live.contains(s)) {
            known.insert(s); // value 0
        }
    }

    // Sinks first; each component only depends on already-solved ones.
    for (std::size_t c = 0; c < comps; ++c) {
        const auto& block = members[c];
        if (known.contains(block.front())) continue;

        // Deterministic states just copy their successor's value; only
        // branching states become unknowns of the block system.
        std::vector<std::size_t> slot(n, kNone);
        std::vector<StateIndex> unknowns;
        for (StateIndex s : block)
            if (rows[s].size() > 1) {
                slot[s] = unknowns.size();
                unknowns.push_back(s);
            }
        std::vector<StateIndex> resolved(n, kNone);
        auto resolve = [&](StateIndex s) {
            StateIndex t = s;
            std::size_t steps = 0;
            while (!known.contains(t) && slot[t] == kNone) {
                if (resolved[t] != kNone) {
                    t = resolved[t];
                    break;
                }
                t = rows[t].front().first;
                if (++steps > block.size())
                    throw InternalError("deterministic cycle inside a live block");
            }
            return t;
        };
        for (StateIndex s : block)
            if (slot[s] == kNone) resolved[s] = resolve(s);

        const std::size_t k = unknowns.size();
        std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k));
        std::vector<Rational> b(k);
        for (std::size_t i = 0; i < k; ++i) {
            a[i][i] += 1;
            for (const auto& [t, p] : rows[unknowns[i]]) {
                StateIndex u = known.contains(t) || slot[t] != kNone ? t : resolved[t];
                if (known.contains(u)) b[i] += p * x[u];
                else a[i][slot[u]] -= p;
            }
        }
        auto solution = solve_linear_system(std::move(a), std::move(b));
        if (!solution) throw InternalError("singular block while evaluating a strategy");
        for (std::size_t i = 0; i < k; ++i) {
            x[unknowns[i]] = (*solution)[i];
            known.insert(unknowns[i]);
        }
        for (StateIndex s : block) {
            if (slot[s] == kNone) {
                x[s] = x[resolved[s]];
                known.insert(s);
            }
        }
    }
    return x;
}

MaxSolution solve_max(const ConvertedMdp& m) {
    require_shape(m);
    const auto& g = m.graph;
    PureMemorylessStrategy strategy(Owner::Player1, g.size());
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (g.owner(s) != Owner::Player1) continue;
        StateIndex pick = g.successors(s).front().to;
        for (const auto& e : g.successors(s))
            if (m.copies.contains(e.to) && e.to != s) {
                pick = e.to;
                break;
            }
        strategy.set(s, pick);
    }

    MaxSolution sol;
    for (;;) {
        ValueVector x = evaluate_strategy(m, strategy);
        sol.iterations.push_back(x);
        bool improved = false;
        for (StateIndex s = 0; s < g.size(); ++s) {
            if (g.owner(s) != Owner::Player1) continue;
            const Rational* best = &x[strategy[s]];
            StateIndex pick = strategy[s];
            for (const auto& e : g.successors(s)) {
                if (x[e.to] > *best) {
                    best = &x[e.to];
                    pick = e.to;
                }
            }
            if (pick != strategy[s]) {
                // lowest-index successor attaining the maximum
                for (const auto& e : g.successors(s))
                    if (x[e.to] == *best) {
                        pick = e.to;
                        break;
                    }
                strategy.set(s, pick);
                improved = true;
            }
        }
        if (!improved) {
            sol.values = std::move(x);
            break;
        }
    }
    sol.strategy = std::move(strategy);
    sol.certificate = check_certificate(m, sol);
    if (!sol.certificate.ok())
        throw InternalError("max solution failed its LP certificate: " +
                            sol.certificate.violations.front());
    return sol;
}

Certificate check_certificate(const ConvertedMdp& m, const MaxSolution& sol) {
    const auto& g = m.graph;
    const auto& x = sol.values;
    Certificate cert;
    auto fail = [&](bool& family, const std::string& what) {
        family = false;
        cert.violations.push_back(what);
    };
    if (x.size() != g.size()) {
        fail(cert.nonnegative, "value vector has the wrong size");
        return cert;
    }
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (sgn(x[s]) < 0) fail(cert.nonnegative, "x(" + g.id(s) + ") < 0");
        if (m.copies.contains(s) && x[s] != m.reward[s])
            fail(cert.copies_fixed, "x(" + g.id(s) + ") differs from its copy reward");
        if (g.is_player(s)) {
            for (const auto& e : g.successors(s))
                if (x[s] < x[e.to])
                    fail(cert.player_dominates, "x(" + g.id(s) + ") < x(" + g.id(e.to) + ")");
        } else {
            Rational sum = 0;
            for (const auto& e : g.successors(s)) sum += e.prob * x[e.to];
            if (x[s] != sum)
                fail(cert.probabilistic_balanced, "x(" + g.id(s) + ") is not its successors' average");
        }
    }
    if (!sol.strategy.valid_for(g)) {
        fail(cert.strategy_attains, "strategy does not match the graph");
        return cert;
    }
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (!g.is_player(s)) continue;
        for (const auto& e : g.successors(s))
            if (x[e.to] > x[sol.strategy[s]])
                fail(cert.strategy_attains, "strategy at " + g.id(s) + " misses a better successor");
        if (x[s] != x[sol.strategy[s]])
            fail(cert.strategy_attains, "strategy at " + g.id(s) + " does not attain x(" + g.id(s) + ")");
    }
    if (evaluate_strategy(m, sol.strategy) != x)
        fail(cert.matches_strategy_value, "values differ from the strategy's own value");
    return cert;
}

bool certify(const ConvertedMdp& m, const MaxSolution& sol) {
    return check_certificate(m, sol).ok();
}

} // namespace limgame
