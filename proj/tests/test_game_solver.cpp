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
#include "limgame/game_solver.hpp"
#include "limgame/mdp_solver.hpp"
#include "limgame/oracle.hpp"
#include "limgame/transform.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace limgame;
using limgame::test::q;

namespace {

const Objective kKinds[] = {Objective::LimSup, Objective::LimInf};

std::vector<Instance> games(std::size_t count, std::uint64_t seed) {
    std::vector<Instance> out;
    for (std::uint64_t i = 0; out.size() < count; ++i) {
        auto inst = generate_instance({.states = 3 + i % 4, .density = 0.35, .max_successors = 3,
                                       .reward_min = -4, .reward_max = 6,
                                       .kind = GeneratedKind::Game, .seed = seed + i});
        if (inst.graph.count(Owner::Player2) == 0 || inst.graph.count(Owner::Player1) == 0) continue;
        out.push_back(std::move(inst));
    }
    return out;
}

// p2 state t chooses between a reward-9 loop and a reward-4 loop
Instance two_loops() {
    return parse_game(R"({"states":[{"id":"t","owner":"p2","reward":"0"},
                                    {"id":"h","owner":"p1","reward":"9"},
                                    {"id":"l","owner":"p1","reward":"4"}],
                          "edges":[{"from":"t","to":"h"},{"from":"t","to":"l"},
                                   {"from":"h","to":"h"},{"from":"l","to":"l"}]})");
}

} // namespace

TEST_CASE("no player-2 states: same as the MDP pipeline") {
    auto inst = test::coin();
    for (auto kind : kKinds) {
        auto sol = solve_game(inst.graph, inst.reward, kind);
        auto ms = solve_mdp(inst.graph, inst.reward, kind);
        CHECK(sol.values == ms.values);
        CHECK(sol.strategy1 == ms.strategy);
    }
}

TEST_CASE("minimizer prefers the low loop") {
    auto inst = two_loops();
    auto sol = solve_game(inst.graph, inst.reward, Objective::LimSup);
    CHECK(sol.values[0] == 4);
    CHECK(sol.strategy2[0] == 2);
    CHECK(sol.strategy2.valid_for(inst.graph));
}

TEST_CASE("games match double enumeration and witnesses reproduce values") {
    for (const auto& inst : games(30, 100)) {
        const auto& g = inst.graph;
        for (auto kind : kKinds) {
            auto sol = solve_game(g, inst.reward, kind);
            CHECK(sol.values == oracle::enumerate_values(g, inst.reward, kind));
            CHECK(sol.strategy1.valid_for(g));
            CHECK(sol.strategy2.valid_for(g));
            CHECK(value_with_fixed(g, inst.reward, kind, sol.strategy1) == sol.values);
            CHECK(value_with_fixed(g, inst.reward, kind, sol.strategy2) == sol.values);
            // the pair itself yields a chain with exactly these values
            auto chain = oracle::induced_chain(g, &sol.strategy1, &sol.strategy2);
            CHECK(oracle::analyze_chain(chain, inst.reward).expected(kind) == sol.values);
        }
    }
}

TEST_CASE("parallel and serial enumeration agree") {
    for (const auto& inst : games(10, 300)) {
        for (auto kind : kKinds) {
            auto a = solve_game_serial(inst.graph, inst.reward, kind);
            auto b = solve_game(inst.graph, inst.reward, kind, {.jobs = 4});
            CHECK(a.values == b.values);
            CHECK(a.strategy1 == b.strategy1);
            CHECK(a.strategy2 == b.strategy2);
        }
    }
}

TEST_CASE("decide: boundary and witnesses") {
    auto inst = test::coin();
    auto s = *inst.graph.index_of("s");
    auto yes = decide(inst.graph, inst.reward, Objective::LimSup, s, 6);
    CHECK(yes.holds);
    CHECK(yes.witness_verified);
    CHECK(yes.witness.player() == Owner::Player1);
    auto no = decide(inst.graph, inst.reward, Objective::LimSup, s, 7);
    CHECK_FALSE(no.holds);
    CHECK(no.witness_verified);

    for (const auto& g : games(30, 500)) {
        for (auto kind : kKinds) {
            auto v = solve_game(g.graph, g.reward, kind).values;
            for (StateIndex t = 0; t < g.graph.size(); ++t) {
                auto at = decide(g.graph, g.reward, kind, t, v[t]);
                CHECK(at.holds);
                CHECK(at.witness_verified);
                auto above = decide(g.graph, g.reward, kind, t, v[t] + q("1/100"));
                CHECK_FALSE(above.holds);
                CHECK(above.witness_verified);
                CHECK(above.witness.player() == Owner::Player2);
            }
        }
    }
}

TEST_CASE("determinacy identities") {
    for (const auto& inst : games(30, 700)) {
        auto report = check_determinacy(inst.graph, inst.reward);
        CHECK(report.ok());
    }
}

TEST_CASE("shift equivariance and monotonicity") {
    for (const auto& inst : games(15, 900)) {
        const auto& g = inst.graph;
        for (auto kind : kKinds) {
            auto base = solve_game(g, inst.reward, kind).values;
            for (const Rational& c : {q("-5"), q("1/3"), q("1000")}) {
                auto shifted = solve_game(g, shift_rewards(inst.reward, c), kind).values;
                for (StateIndex s = 0; s < g.size(); ++s) CHECK(shifted[s] == base[s] + c);
            }
        }
        auto base = solve_game(g, inst.reward, Objective::LimSup).values;
        for (StateIndex t = 0; t < g.size(); ++t) {
            auto raised = inst.reward.values();
            raised[t] += 3;
            auto v = solve_game(g, RewardFunction(raised), Objective::LimSup).values;
            for (StateIndex s = 0; s < g.size(); ++s) CHECK(v[s] >= base[s]);
        }
    }
}

TEST_CASE("budget guard") {
    auto inst = two_loops();
    CHECK_THROWS_AS(solve_game(inst.graph, inst.reward, Objective::LimSup, {.budget = 1}),
                    BudgetExceeded);
    CHECK_THROWS_AS(solve_game(inst.graph, inst.reward, Objective::Max), PreconditionError);
}
