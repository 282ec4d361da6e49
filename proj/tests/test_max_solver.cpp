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

#include "limgame/errors.hpp"
#include "limgame/max_solver.hpp"
#include "limgame/mdp_solver.hpp"
#include "limgame/oracle.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace limgame;
using limgame::test::q;

namespace {

// Random MDP with zero rewards plus absorbing positive copies hanging off
// some player states: the shape the max solver accepts.
ConvertedMdp random_converted(std::uint64_t seed, std::size_t states) {
    auto inst = generate_instance({.states = states, .density = 0.35, .max_successors = 3,
                                   .kind = GeneratedKind::Mdp, .seed = seed});
    const auto& g = inst.graph;
    std::mt19937_64 rng(seed);
    std::vector<std::string> ids = g.ids();
    std::vector<Owner> owners;
    std::vector<std::vector<Edge>> succ;
    for (StateIndex s = 0; s < g.size(); ++s) {
        owners.push_back(g.owner(s));
        succ.emplace_back(g.successors(s).begin(), g.successors(s).end());
    }
    std::vector<Rational> rewards(g.size(), 0);
    for (StateIndex s = 0; s < g.size(); ++s) {
        if (g.owner(s) != Owner::Player1 || rng() % 2 == 0) continue;
        const StateIndex c = ids.size();
        ids.push_back("^" + g.id(s));
        owners.push_back(Owner::Player1);
        succ.push_back({Edge{c, 0}});
        rewards.push_back(Rational(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 3)));
        succ[s].push_back(Edge{c, 0});
    }
    return as_converted(GameGraph(std::move(ids), std::move(owners), std::move(succ)),
                        RewardFunction(std::move(rewards)));
}

} // namespace

TEST_CASE("forced path to a copy") {
    auto inst = parse_game(R"({"states":[{"id":"s","owner":"p1","reward":"0"},
                                         {"id":"c","owner":"p1","reward":"5"}],
                               "edges":[{"from":"s","to":"c"},{"from":"c","to":"c"}]})");
    auto sol = solve_max(as_converted(inst.graph, inst.reward));
    CHECK(sol.values[0] == 5);
    CHECK(sol.values[1] == 5);
    CHECK(sol.certificate.ok());
}

TEST_CASE("coin example: x_p = 6, x_s = 6, s plays p") {
    auto inst = test::coin();
    const auto& g = inst.graph;
    auto m = as_converted(g, inst.reward);
    auto sol = solve_max(m);
    const auto s = *g.index_of("s"), p = *g.index_of("p"), b = *g.index_of("b");
    CHECK(sol.values[p] == 6);
    CHECK(sol.values[s] == 6);
    CHECK(sol.strategy[s] == p);
    CHECK(certify(m, sol));

    SUBCASE("perturbing one value breaks the certificate") {
        auto bad = sol;
        bad.values[p] += 1;
        auto cert = check_certificate(m, bad);
        CHECK_FALSE(cert.ok());
        CHECK_FALSE(cert.probabilistic_balanced);
    }
    SUBCASE("suboptimal strategy fails") {
        MaxSolution bad;
        bad.strategy = sol.strategy;
        bad.strategy.set(s, b);
        bad.values = evaluate_strategy(m, bad.strategy);
        CHECK(bad.values[s] == 2);
        auto cert = check_certificate(m, bad);
        CHECK_FALSE(cert.ok());
        CHECK_FALSE(cert.player_dominates);
    }
}

TEST_CASE("reward-0 cycle avoiding every copy is worth 0") {
    auto inst = parse_game(R"({"states":[{"id":"s","owner":"p1","reward":"0"},
                                         {"id":"t","owner":"p1","reward":"0"},
                                         {"id":"c","owner":"p1","reward":"3"}],
                               "edges":[{"from":"s","to":"t"},{"from":"t","to":"s"},
                                        {"from":"t","to":"c"},{"from":"c","to":"c"}]})");
    auto m = as_converted(inst.graph, inst.reward);
    PureMemorylessStrategy cycle(Owner::Player1, 3);
    cycle.set(0, 1);
    cycle.set(1, 0);
    cycle.set(2, 2);
    auto v = evaluate_strategy(m, cycle);
    CHECK(v[0] == 0);
    CHECK(v[1] == 0);
    CHECK(v[2] == 3);
    CHECK(solve_max(m).values[0] == 3);
}

TEST_CASE("shape preconditions") {
    auto inst = parse_game(R"({"states":[{"id":"s","owner":"p1","reward":"1"},
                                         {"id":"t","owner":"p1","reward":"0"}],
                               "edges":[{"from":"s","to":"t"},{"from":"t","to":"s"}]})");
    CHECK_THROWS_AS(as_converted(inst.graph, inst.reward), PreconditionError);
    auto neg = parse_game(R"({"states":[{"id":"s","owner":"p1","reward":"-1"}],
                              "edges":[{"from":"s","to":"s"}]})");
    CHECK_THROWS_AS(as_converted(neg.graph, neg.reward), PreconditionError);
}

TEST_CASE("random converted MDPs match brute-force enumeration") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto m = random_converted(seed, 2 + seed % 6);
        CAPTURE(seed);
        auto sol = solve_max(m);
        CHECK(certify(m, sol));
        auto expected = oracle::enumerate_values(m.graph, m.reward, Objective::Max);
        CHECK(sol.values == expected);

        // policy iteration never lowers a value and always raises one
        for (std::size_t i = 1; i < sol.iterations.size(); ++i) {
            bool raised = false;
            for (StateIndex s = 0; s < m.graph.size(); ++s) {
                CHECK(sol.iterations[i - 1][s] <= sol.iterations[i][s]);
                raised = raised || sol.iterations[i - 1][s] < sol.iterations[i][s];
            }
            CHECK(raised);
        }
        CHECK(sol.iterations.size() <= 2 * m.graph.size() + 1);

        // every optimal strategy certifies with the same values
        const auto total = strategy_count(m.graph, Owner::Player1);
        if (total > 4096) continue;
        for (std::uint64_t i = 0; i < total; ++i) {
            MaxSolution other;
            other.strategy = strategy_at(m.graph, Owner::Player1, i);
            other.values = evaluate_strategy(m, other.strategy);
            if (certify(m, other)) CHECK(other.values == sol.values);
        }
    }
}

TEST_CASE("pipeline-converted MDPs absorb into copies with probability 1") {
    for (const auto& inst : test::corpus({.count = 50, .mdp_only = true})) {
        auto ms = solve_mdp(inst.graph, inst.reward, Objective::LimSup);
        const auto& m = ms.converted;
        CHECK(certify(m, ms.max_solution));
        auto chain = oracle::induced_chain(m.graph, &ms.max_solution.strategy, nullptr);
        auto analysis = oracle::analyze_chain(chain, m.reward);
        for (const auto& c : analysis.recurrent_classes) CHECK(c.intersects(m.copies));

        auto bad = ms.max_solution;
        bad.values[0] += q("1/7");
        CHECK_FALSE(certify(m, bad));
    }
}
