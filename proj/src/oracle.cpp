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

#include "limgame/oracle.hpp"

#include "limgame/errors.hpp"

#include <cmath>
#include <limits>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace limgame::oracle {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan on [A | B]; A must be nonsingular. Returns X with A X = B.
Matrix gauss_jordan(Matrix a, Matrix b) {
    const std::size_t n = a.size();
    const std::size_t cols = n == 0 ? 0 : b[0].size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) throw InternalError("oracle: singular system");
        std::swap(a[p], a[k]);
        std::swap(b[p], b[k]);
        Rational inv = 1 / a[k][k];
        for (auto& v : a[k]) v *= inv;
        for (auto& v : b[k]) v *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rational f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t j = 0; j < cols; ++j) b[i][j] -= f * b[k][j];
        }
    }
    return b;
}

using Successors = std::vector<std::vector<Edge>>;

// reach[s][t]: t reachable from s (reflexive).
std::vector<std::vector<char>> reachability(const Successors& succ) {
    const std::size_t n = succ.size();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (StateIndex s = 0; s < n; ++s) {
        std::vector<StateIndex> stack{s};
        reach[s][s] = 1;
        while (!stack.empty()) {
            StateIndex x = stack.back();
            stack.pop_back();
            for (const auto& e : succ[x])
                if (!reach[s][e.to]) {
                    reach[s][e.to] = 1;
                    stack.push_back(e.to);
                }
        }
    }
    return reach;
}

std::vector<std::vector<char>> reachability(const GameGraph& g) {
    Successors succ(g.size());
    for (StateIndex s = 0; s < g.size(); ++s)
        succ[s].assign(g.successors(s).begin(), g.successors(s).end());
    return reachability(succ);
}

Rational chain_prob(const GameGraph& g, StateIndex s, const Edge& e) {
    return g.owner(s) == Owner::Probabilistic ? e.prob : Rational(1);
}

// Probability of ever entering `hit` (absorbing targets with value 1),
// where recurrent states not in `hit` whose class misses `hit` are 0.
std::vector<Rational> hitting_probability(const GameGraph& g, const ChainAnalysis& ca,
                                          const StateSet& hit) {
    const std::size_t n = g.size();
    std::vector<Rational> x(n);
    std::vector<std::size_t> slot(n, ChainAnalysis::npos);
    std::vector<StateIndex> unknowns;
    std::vector<char> class_hits(ca.recurrent_classes.size(), 0);
    for (std::size_t c = 0; c < ca.recurrent_classes.size(); ++c)
        class_hits[c] = ca.recurrent_classes[c].intersects(hit);
    for (StateIndex s = 0; s < n; ++s) {
        if (hit.contains(s)) x[s] = 1;
        else if (ca.class_of[s] != ChainAnalysis::npos) x[s] = class_hits[ca.class_of[s]] ? 1 : 0;
        else {
            slot[s] = unknowns.size();
            unknowns.push_back(s);
        }
    }
    const std::size_t k = unknowns.size();
    Matrix a(k, std::vector<Rational>(k)), b(k, std::vector<Rational>(1));
    for (std::size_t i = 0; i < k; ++i) {
        StateIndex s = unknowns[i];
        a[i][i] = 1;
        for (const auto& e : g.successors(s)) {
            Rational p = chain_prob(g, s, e);
            if (slot[e.to] != ChainAnalysis::npos) a[i][slot[e.to]] -= p;
            else b[i][0] += p * x[e.to];
        }
    }
    auto sol = gauss_jordan(std::move(a), std::move(b));
    for (std::size_t i = 0; i < k; ++i) x[unknowns[i]] = sol[i][0];
    return x;
}

// Solves x_s = sum_t p(s,t) x_t for the states without a fixed value, every
// one of which is absorbed into fixed states with probability 1. Transient
// states with a single successor are resolved by following the successor.
std::vector<Rational> solve_fixed(const Successors& g, std::vector<Rational> x,
                                  const std::vector<char>& fixed) {
    const std::size_t n = g.size();
    constexpr std::size_t kOpen = ChainAnalysis::npos, kBusy = kOpen - 1;
    // rep[s]: fixed state or branching state that s forwards to
    std::vector<std::size_t> rep(n, kOpen);
    for (StateIndex s = 0; s < n; ++s)
        if (fixed[s] || g[s].size() > 1) rep[s] = s;
    for (StateIndex s = 0; s < n; ++s) {
        std::vector<StateIndex> path;
        StateIndex t = s;
        while (rep[t] == kOpen) {
            rep[t] = kBusy;
            path.push_back(t);
            t = g[t].front().to;
        }
        if (rep[t] == kBusy) throw InternalError("oracle: deterministic cycle outside the fixed states");
        for (auto u : path) rep[u] = rep[t];
    }
    std::vector<std::size_t> slot(n, kOpen);
    std::vector<StateIndex> unknowns;
    for (StateIndex s = 0; s < n; ++s)
        if (!fixed[s] && rep[s] == s) {
            slot[s] = unknowns.size();
            unknowns.push_back(s);
        }
    const std::size_t k = unknowns.size();
    Matrix a(k, std::vector<Rational>(k)), b(k, std::vector<Rational>(1));
    for (std::size_t i = 0; i < k; ++i) {
        StateIndex s = unknowns[i];
        a[i][i] = 1;
        for (const auto& e : g[s]) {
            StateIndex t = rep[e.to];
            if (fixed[t]) b[i][0] += e.prob * x[t];
            else a[i][slot[t]] -= e.prob;
        }
    }
    auto sol = gauss_jordan(std::move(a), std::move(b));
    for (std::size_t i = 0; i < k; ++i) x[unknowns[i]] = sol[i][0];
    for (StateIndex s = 0; s < n; ++s)
        if (!fixed[s] && rep[s] != s) x[s] = x[rep[s]];
    return x;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Integer weights per probabilistic state so sampling needs no floating point.
struct Sampler {
    std::vector<std::vector<StateIndex>> next;
    std::vector<std::vector<std::uint64_t>> cumulative;
    std::vector<std::uint64_t> total;
};

Sampler make_sampler(const GameGraph& g, const PureMemorylessStrategy* p1,
                     const PureMemorylessStrategy* p2) {
    Sampler sm;
    const std::size_t n = g.size();
    sm.next.resize(n);
    sm.cumulative.resize(n);
    sm.total.assign(n, 1);
    for (StateIndex s = 0; s < n; ++s) {
        Owner o = g.owner(s);
        if (o != Owner::Probabilistic) {
            const auto* st = o == Owner::Player1 ? p1 : p2;
            if (st == nullptr || !st->defined(s))
                throw PreconditionError("simulation needs a strategy for every player state");
            sm.next[s] = {(*st)[s]};
            sm.cumulative[s] = {1};
            continue;
        }
        mpz_class lcm = 1;
        for (const auto& e : g.successors(s))
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.prob.get_den_mpz_t());
        if (!lcm.fits_ulong_p() || lcm > mpz_class("4294967296"))
            throw PreconditionError("probability denominators too large to sample exactly");
        std::uint64_t acc = 0;
        for (const auto& e : g.successors(s)) {
            mpz_class w = e.prob.get_num() * (lcm / e.prob.get_den());
            acc += w.get_ui();
            sm.next[s].push_back(e.to);
            sm.cumulative[s].push_back(acc);
        }
        sm.total[s] = acc;
    }
    return sm;
}

// Uniform integer in [0, bound) by rejection.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

std::size_t run_episode(const Sampler& sm, const std::vector<std::size_t>& level_of,
                        Objective kind, StateIndex start, std::size_t horizon, std::uint64_t seed,
                        std::uint64_t episode) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(episode)));
    const std::size_t burn = kind == Objective::Max ? 0 : horizon / 2;
    // level indices: smaller index = larger reward
    std::size_t best = level_of.size(), worst = 0;
    bool seen = false;
    StateIndex s = start;
    for (std::size_t t = 0; t < horizon; ++t) {
        if (t >= burn) {
            std::size_t lv = level_of[s];
            if (!seen || lv < best) best = lv;
            if (!seen || lv > worst) worst = lv;
            seen = true;
        }
        const auto& cum = sm.cumulative[s];
        if (cum.size() == 1) {
            s = sm.next[s][0];
        } else {
            std::uint64_t u = uniform_below(rng, sm.total[s]);
            std::size_t i = 0;
            while (u >= cum[i]) ++i;
            s = sm.next[s][i];
        }
    }
    return kind == Objective::LimInf ? worst : best;
}

SimulationEstimate summarize(const RewardFunction& r, std::vector<std::uint64_t> tally,
                             std::uint64_t episodes) {
    SimulationEstimate est;
    const auto& levels = r.levels();
    Rational sum = 0;
    for (std::size_t j = 0; j < levels.size(); ++j) sum += levels[j] * Rational(tally[j]);
    est.exact_mean = sum / Rational(episodes);
    est.mean = est.exact_mean.get_d();
    if (episodes > 1) {
        Rational ss = 0;
        for (std::size_t j = 0; j < levels.size(); ++j) {
            Rational d = levels[j] - est.exact_mean;
            ss += d * d * Rational(tally[j]);
        }
        double variance = Rational(ss / Rational(episodes - 1)).get_d();
        est.standard_error = std::sqrt(variance / static_cast<double>(episodes));
    }
    est.half_width = 1.96 * est.standard_error;
    est.tally = std::move(tally);
    return est;
}

struct EpisodeSetup {
    Sampler sampler;
    std::vector<std::size_t> level_of;
};

EpisodeSetup prepare(const GameGraph& g, const RewardFunction& r, const PureMemorylessStrategy* p1,
                     const PureMemorylessStrategy* p2, Objective kind, StateIndex start,
                     const SimulationOptions& options) {
    if (start >= g.size()) throw PreconditionError("simulation start state out of range");
    if (options.episodes == 0 || options.horizon < 2)
        throw PreconditionError("simulation needs at least one episode and a horizon of 2");
    (void)kind;
    EpisodeSetup setup{make_sampler(g, p1, p2), std::vector<std::size_t>(g.size())};
    const auto& levels = r.levels();
    for (StateIndex s = 0; s < g.size(); ++s) {
        std::size_t j = 0;
        while (levels[j] != r[s]) ++j;
        setup.level_of[s] = j;
    }
    return setup;
}

} // namespace

const ValueVector& ChainAnalysis::expected(Objective kind) const {
    switch (kind) {
    case Objective::LimSup: return limsup;
    case Objective::LimInf: return liminf;
    case Objective::Max: return max;
    }
    return limsup;
}

ChainAnalysis analyze_chain(const GameGraph& chain, const RewardFunction& r) {
    const std::size_t n = chain.size();
    if (r.size() != n) throw PreconditionError("reward function does not match the chain");
    for (StateIndex s = 0; s < n; ++s)
        if (chain.is_player(s) && chain.successors(s).size() != 1)
            throw PreconditionError("analyze_chain needs a Markov chain; \"" + chain.id(s) +
                                    "\" has a choice");

    ChainAnalysis ca;
    auto reach = reachability(chain);
    ca.class_of.assign(n, ChainAnalysis::npos);
    for (StateIndex s = 0; s < n; ++s) {
        bool recurrent = true;
        for (StateIndex t = 0; t < n && recurrent; ++t)
            if (reach[s][t] && !reach[t][s]) recurrent = false;
        if (!recurrent || ca.class_of[s] != ChainAnalysis::npos) continue;
        StateSet cls(n);
        for (StateIndex t = 0; t < n; ++t)
            if (reach[s][t]) {
                cls.insert(t);
                ca.class_of[t] = ca.recurrent_classes.size();
            }
        Rational hi = r[s], lo = r[s];
        for (StateIndex t : cls.members()) {
            if (r[t] > hi) hi = r[t];
            if (r[t] < lo) lo = r[t];
        }
        ca.recurrent_classes.push_back(std::move(cls));
        ca.class_limsup.push_back(hi);
        ca.class_liminf.push_back(lo);
    }

    const std::size_t classes = ca.recurrent_classes.size();
    ca.absorption.assign(n, std::vector<Rational>(classes));
    std::vector<std::size_t> slot(n, ChainAnalysis::npos);
    std::vector<StateIndex> transient;
    for (StateIndex s = 0; s < n; ++s) {
        if (ca.class_of[s] != ChainAnalysis::npos) {
            ca.absorption[s][ca.class_of[s]] = 1;
        } else {
            slot[s] = transient.size();
            transient.push_back(s);
        }
    }
    const std::size_t k = transient.size();
    Matrix a(k, std::vector<Rational>(k)), b(k, std::vector<Rational>(classes));
    for (std::size_t i = 0; i < k; ++i) {
        StateIndex s = transient[i];
        a[i][i] = 1;
        for (const auto& e : chain.successors(s)) {
            Rational p = chain_prob(chain, s, e);
            if (slot[e.to] != ChainAnalysis::npos) a[i][slot[e.to]] -= p;
            else b[i][ca.class_of[e.to]] += p;
        }
    }
    auto x = gauss_jordan(std::move(a), std::move(b));
    for (std::size_t i = 0; i < k; ++i) ca.absorption[transient[i]] = x[i];

    ca.limsup.values.assign(n, Rational(0));
    ca.liminf.values.assign(n, Rational(0));
    for (StateIndex s = 0; s < n; ++s)
        for (std::size_t c = 0; c < classes; ++c) {
            ca.limsup[s] += ca.absorption[s][c] * ca.class_limsup[c];
            ca.liminf[s] += ca.absorption[s][c] * ca.class_liminf[c];
        }

    // E[max] = v_k + sum_{j<k} (v_j - v_{j+1}) Pr(some state with r >= v_j is visited)
    const auto& levels = r.levels();
    ca.max.values.assign(n, levels.back());
    for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
        StateSet hit(n);
        for (StateIndex s = 0; s < n; ++s)
            if (r[s] >= levels[j]) hit.insert(s);
        auto p = hitting_probability(chain, ca, hit);
        Rational gap = levels[j] - levels[j + 1];
        for (StateIndex s = 0; s < n; ++s) ca.max[s] += gap * p[s];
    }
    return ca;
}

namespace {

// Edge probabilities are chain probabilities: 1 on player edges.
ValueVector successor_values(const Successors& m, const RewardFunction& r, Objective kind) {
    const std::size_t n = m.size();
    auto reach = reachability(m);
    std::vector<char> recurrent(n, 1);
    for (StateIndex s = 0; s < n; ++s)
        for (StateIndex t = 0; t < n && recurrent[s]; ++t)
            if (reach[s][t] && !reach[t][s]) recurrent[s] = 0;

    if (kind != Objective::Max) {
        std::vector<Rational> x(n);
        for (StateIndex s = 0; s < n; ++s) {
            if (!recurrent[s]) continue;
            Rational v = r[s];
            for (StateIndex t = 0; t < n; ++t)
                if (reach[s][t] && (kind == Objective::LimSup ? r[t] > v : r[t] < v)) v = r[t];
            x[s] = v;
        }
        return ValueVector{solve_fixed(m, std::move(x), recurrent)};
    }

    const auto& levels = r.levels();
    ValueVector out;
    out.values.assign(n, levels.back());
    for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
        std::vector<Rational> x(n);
        std::vector<char> fixed(n, 1);
        for (StateIndex s = 0; s < n; ++s) {
            bool hits = false;
            for (StateIndex t = 0; t < n && !hits; ++t) hits = reach[s][t] && r[t] >= levels[j];
            if (r[s] >= levels[j]) x[s] = 1;
            else if (hits) fixed[s] = 0;
        }
        auto p = solve_fixed(m, std::move(x), fixed);
        Rational gap = levels[j] - levels[j + 1];
        for (StateIndex s = 0; s < n; ++s) out[s] += gap * p[s];
    }
    return out;
}

} // namespace

ValueVector chain_values(const GameGraph& chain, const RewardFunction& r, Objective kind) {
    const std::size_t n = chain.size();
    if (r.size() != n) throw PreconditionError("reward function does not match the chain");
    Successors succ(n);
    for (StateIndex s = 0; s < n; ++s) {
        if (chain.is_player(s) && chain.successors(s).size() != 1)
            throw PreconditionError("chain_values needs a Markov chain; \"" + chain.id(s) +
                                    "\" has a choice");
        for (const auto& e : chain.successors(s)) succ[s].push_back({e.to, chain_prob(chain, s, e)});
    }
    return successor_values(succ, r, kind);
}

GameGraph induced_chain(const GameGraph& g, const PureMemorylessStrategy* player1,
                        const PureMemorylessStrategy* player2) {
    std::vector<Owner> owners(g.size(), Owner::Probabilistic);
    std::vector<std::vector<Edge>> succ(g.size());
    for (StateIndex s = 0; s < g.size(); ++s) {
        Owner o = g.owner(s);
        if (o == Owner::Probabilistic) {
            succ[s].assign(g.successors(s).begin(), g.successors(s).end());
            continue;
        }
        const auto* st = o == Owner::Player1 ? player1 : player2;
        if (st == nullptr || !st->defined(s) || !g.has_edge(s, (*st)[s]))
            throw PreconditionError("missing or invalid choice at \"" + g.id(s) + "\"");
        succ[s] = {Edge{(*st)[s], Rational(1)}};
    }
    return GameGraph(g.ids(), std::move(owners), std::move(succ));
}

ValueVector enumerate_values(const GameGraph& g, const RewardFunction& r, Objective kind,
                             std::uint64_t budget) {
    const std::uint64_t n1 = strategy_count(g, Owner::Player1);
    const std::uint64_t n2 = strategy_count(g, Owner::Player2);
    if (n1 > budget || n2 > budget / n1)
        throw BudgetExceeded("oracle enumeration needs more than " + std::to_string(budget) +
                             " strategy pairs");
    if (r.size() != g.size()) throw PreconditionError("reward function does not match the game");
    Successors succ(g.size());
    for (StateIndex s = 0; s < g.size(); ++s)
        if (g.owner(s) == Owner::Probabilistic)
            succ[s].assign(g.successors(s).begin(), g.successors(s).end());
    ValueVector best;
    for (std::uint64_t i = 0; i < n1; ++i) {
        auto sigma = strategy_at(g, Owner::Player1, i);
        ValueVector worst;
        for (std::uint64_t j = 0; j < n2; ++j) {
            auto pi = strategy_at(g, Owner::Player2, j);
            for (StateIndex s = 0; s < g.size(); ++s) {
                if (g.owner(s) == Owner::Probabilistic) continue;
                succ[s] = {Edge{(g.owner(s) == Owner::Player1 ? sigma : pi)[s], Rational(1)}};
            }
            auto v = successor_values(succ, r, kind);
            if (j == 0) worst = v;
            else
                for (StateIndex s = 0; s < g.size(); ++s)
                    if (v[s] < worst[s]) worst[s] = v[s];
        }
        if (i == 0) best = worst;
        else
            for (StateIndex s = 0; s < g.size(); ++s)
                if (worst[s] > best[s]) best[s] = worst[s];
    }
    return best;
}

std::vector<StateSet> enumerate_end_components(const GameGraph& g) {
    const std::size_t n = g.size();
    if (n > 20) throw PreconditionError("end-component enumeration is limited to 20 states");
    if (!g.is_mdp()) throw PreconditionError("end components are defined for MDPs");
    std::vector<StateSet> result;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        auto in = [&](StateIndex s) { return (mask >> s) & 1U; };
        bool closed = true;
        for (StateIndex s = 0; s < n && closed; ++s) {
            if (!in(s) || g.is_player(s)) continue;
            for (const auto& e : g.successors(s))
                if (!in(e.to)) closed = false;
        }
        if (!closed) continue;
        // strong connectivity of the induced subgraph: every member reaches
        // every other member using edges inside the subset
        bool connected = true;
        for (StateIndex s = 0; s < n && connected; ++s) {
            if (!in(s)) continue;
            std::uint32_t seen = 0;
            std::vector<StateIndex> stack{s};
            while (!stack.empty()) {
                StateIndex x = stack.back();
                stack.pop_back();
                for (const auto& e : g.successors(x))
                    if (in(e.to) && !((seen >> e.to) & 1U)) {
                        seen |= std::uint32_t{1} << e.to;
                        stack.push_back(e.to);
                    }
            }
            if ((seen & mask) != mask) connected = false;
        }
        if (!connected) continue;
        StateSet ec(n);
        for (StateIndex s = 0; s < n; ++s)
            if (in(s)) ec.insert(s);
        result.push_back(std::move(ec));
    }
    return result;
}

GameGraph uniform_strategy_chain(const GameGraph& g, const StateSet& u) {
    std::vector<StateIndex> renumber(g.size(), PureMemorylessStrategy::none);
    std::vector<std::string> ids;
    for (StateIndex s : u.members()) {
        renumber[s] = ids.size();
        ids.push_back(g.id(s));
    }
    std::vector<std::vector<Edge>> succ(ids.size());
    for (StateIndex s : u.members()) {
        auto& out = succ[renumber[s]];
        if (!g.is_player(s)) {
            for (const auto& e : g.successors(s)) {
                if (!u.contains(e.to)) throw PreconditionError("set is not closed");
                out.push_back(Edge{renumber[e.to], e.prob});
            }
            continue;
        }
        std::vector<StateIndex> inside;
        for (const auto& e : g.successors(s))
            if (u.contains(e.to)) inside.push_back(renumber[e.to]);
        for (auto t : inside) out.push_back(Edge{t, Rational(1, inside.size())});
    }
    std::vector<Owner> owners(ids.size(), Owner::Probabilistic);
    return GameGraph(std::move(ids), std::move(owners), std::move(succ));
}

SimulationEstimate simulate_serial(const GameGraph& g, const RewardFunction& r,
                                   const PureMemorylessStrategy* player1,
                                   const PureMemorylessStrategy* player2, Objective kind,
                                   StateIndex start, const SimulationOptions& options) {
    auto setup = prepare(g, r, player1, player2, kind, start, options);
    std::vector<std::uint64_t> tally(r.levels().size(), 0);
    for (std::uint64_t e = 0; e < options.episodes; ++e)
        ++tally[run_episode(setup.sampler, setup.level_of, kind, start, options.horizon,
                            options.seed, e)];
    return summarize(r, std::move(tally), options.episodes);
}

SimulationEstimate simulate(const GameGraph& g, const RewardFunction& r,
                            const PureMemorylessStrategy* player1,
                            const PureMemorylessStrategy* player2, Objective kind, StateIndex start,
                            const SimulationOptions& options) {
#ifdef _OPENMP
    if (options.jobs == 1)
        return simulate_serial(g, r, player1, player2, kind, start, options);
    auto setup = prepare(g, r, player1, player2, kind, start, options);
    const std::size_t levels = r.levels().size();
    std::vector<std::uint64_t> tally(levels, 0);
    const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
    const auto episodes = static_cast<std::int64_t>(options.episodes);
#pragma omp parallel num_threads(threads)
    {
        std::vector<std::uint64_t> local(levels, 0);
#pragma omp for schedule(static) nowait
        for (std::int64_t e = 0; e < episodes; ++e)
            ++local[run_episode(setup.sampler, setup.level_of, kind, start, options.horizon,
                                options.seed, static_cast<std::uint64_t>(e))];
#pragma omp critical
        for (std::size_t j = 0; j < levels; ++j) tally[j] += local[j];
    }
    return summarize(r, std::move(tally), options.episodes);
#else
    return simulate_serial(g, r, player1, player2, kind, start, options);
#endif
}

} // namespace limgame::oracle
