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
#include "limgame/mdp_solver.hpp"
#include "limgame/oracle.hpp"
#include "limgame/qualitative.hpp"
#include "limgame/reductions.hpp"
#include "limgame/transform.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace limgame;

namespace {

struct Prepared {
    GameGraph h;
    RewardFunction r;
    Rational shift;
    std::size_t original = 0;
};

Prepared prepare(const Instance& inst) {
    auto [positive, shift] = make_positive(inst.reward);
    auto [mapping, r] = bipartite_normalize(inst.graph, positive);
    return {mapping.transformed, r, shift, inst.graph.size()};
}

ReductionOutput reduce(const Prepared& p, Objective kind) {
    return kind == Objective::LimSup ? mdp_limsup_reduce(p.h, p.r) : mdp_liminf_reduce(p.h, p.r);
}

ConvertedMdp convert(const Prepared& p, const ReductionOutput& out) {
    return out.kind == Objective::LimSup ? limsup_convert(p.h, p.r, out)
                                         : liminf_convert(p.h, p.r, out);
}

Rational extreme(const RewardFunction& r, const StateSet& u, Objective kind) {
    auto members = u.members();
    Rational best = r[members.front()];
    for (auto s : members)
        best = kind == Objective::LimSup ? (r[s] > best ? r[s] : best) : (r[s] < best ? r[s] : best);
    return best;
}

const Objective kKinds[] = {Objective::LimSup, Objective::LimInf};

} // namespace

TEST_CASE("limsup: a single loop through a dummy") {
    auto inst = parse_game(R"({"states":[{"id":"s","owner":"p1","reward":"7"},
                                         {"id":"d","owner":"prob","reward":"7"}],
                               "edges":[{"from":"s","to":"d"},{"from":"d","to":"s","prob":"1"}]})");
    auto out = mdp_limsup_reduce(inst.graph, inst.reward);
    CHECK(out.starred == StateSet(2, {0}));
    REQUIRE(out.assignment[0]);
    CHECK(*out.assignment[0] == 7);
    CHECK_FALSE(out.assignment[1]);

    auto m = limsup_convert(inst.graph, inst.reward, out);
    CHECK(m.graph.size() == 3);
    const auto copy = m.copy_for[0];
    CHECK(copy == 2);
    CHECK(m.graph.successors(copy).size() == 1);
    CHECK(m.graph.has_edge(copy, copy));
    CHECK(m.graph.has_edge(0, copy));
    CHECK(m.reward[copy] == 7);
    CHECK(m.reward[0] == 0);
    CHECK(m.reward[1] == 0);
}

TEST_CASE("liminf: a loop with rewards 3 and 8 is worth 3; a reward-8 self-loop is worth 8") {
    auto inst = parse_game(R"({"states":[{"id":"s","owner":"p1","reward":"3"},
                                         {"id":"d","owner":"prob","reward":"8"},
                                         {"id":"t","owner":"p1","reward":"8"},
                                         {"id":"e","owner":"prob","reward":"8"}],
                               "edges":[{"from":"s","to":"d"},{"from":"d","to":"s","prob":"1"},
                                        {"from":"t","to":"e"},{"from":"e","to":"t","prob":"1"}]})");
    auto out = mdp_liminf_reduce(inst.graph, inst.reward);
    REQUIRE(out.assignment[0]);
    REQUIRE(out.assignment[2]);
    CHECK(*out.assignment[0] == 3);
    CHECK(*out.assignment[2] == 8);
    auto expected = oracle::enumerate_values(inst.graph, inst.reward, Objective::LimInf);
    CHECK(expected[0] == 3);
    CHECK(expected[2] == 8);
}

TEST_CASE("preconditions") {
    auto inst = test::coin();
    CHECK_THROWS_AS(mdp_limsup_reduce(inst.graph, inst.reward), PreconditionError); // not bipartite
    auto p = prepare(inst);
    CHECK_THROWS_AS(mdp_limsup_reduce(p.h, shift_rewards(p.r, -p.r.min())), PreconditionError);

    auto out = mdp_limsup_reduce(p.h, p.r);
    CHECK_THROWS_AS(liminf_convert(p.h, p.r, out), PreconditionError);
    auto empty = out;
    empty.starred = StateSet(p.h.size());
    CHECK_THROWS_AS(limsup_convert(p.h, p.r, empty), PreconditionError);
}

TEST_CASE("two loops: the level bound decides the low loop") {
    // low loop l1 <-> dl (max 4) may jump to the high loop h1 <-> dh (max 9)
    auto inst = parse_game(R"({"states":[{"id":"l1","owner":"p1","reward":"4"},
                                         {"id":"dl","owner":"prob","reward":"1"},
                                         {"id":"h1","owner":"p1","reward":"9"},
                                         {"id":"dh","owner":"prob","reward":"2"}],
                               "edges":[{"from":"l1","to":"dl"},{"from":"l1","to":"dh"},
                                        {"from":"dl","to":"l1","prob":"1"},
                                        {"from":"h1","to":"dh"},{"from":"dh","to":"h1","prob":"1"}]})");
    auto out = mdp_limsup_reduce(inst.graph, inst.reward);
    REQUIRE(out.assignment[2]);
    CHECK(*out.assignment[2] == 9);
    for (const auto& ec : oracle::enumerate_end_components(inst.graph))
        for (auto u : ec.members())
            if (inst.graph.owner(u) == Owner::Player1) {
                REQUIRE(out.assignment[u]);
                CHECK(extreme(inst.reward, ec, Objective::LimSup) <= *out.assignment[u]);
            }
}

TEST_CASE("loop accounting, assignments and level bounds on the corpus") {
    for (const auto& inst : test::corpus({.count = 50, .max_states = 8, .seed = 5, .mdp_only = true})) {
        auto p = prepare(inst);
        auto ecs = oracle::enumerate_end_components(inst.graph);
        for (auto kind : kKinds) {
            auto out = reduce(p, kind);
            CHECK(out.kind == kind);
            std::size_t removed = 0;
            StateSet seen(p.h.size());
            for (const auto& step : out.log) {
                CHECK(step.winning.subset_of(step.removed));
                CHECK_FALSE(step.removed.intersects(seen));
                seen |= step.removed;
                removed += step.removed.count();
            }
            CHECK(removed + out.final_surviving.count() == p.h.size());
            CHECK((seen | out.final_surviving) == StateSet(p.h.size(), true));

            const auto& levels = p.r.levels();
            for (StateIndex s = 0; s < p.h.size(); ++s) {
                CHECK(out.assignment[s].has_value() == out.starred.contains(s));
                if (out.assignment[s]) {
                    CHECK(p.h.owner(s) == Owner::Player1);
                    CHECK(std::find(levels.begin(), levels.end(), *out.assignment[s]) != levels.end());
                }
            }

            // level bounds with coverage: every player-1 state of an end
            // component is starred and bounded by the component's extreme.
            for (const auto& ec : ecs)
                for (auto u : ec.members()) {
                    if (inst.graph.owner(u) != Owner::Player1) continue;
                    REQUIRE(out.assignment[u]);
                    CHECK(extreme(inst.reward, ec, kind) <= *out.assignment[u] - p.shift);
                }

            // the assignment is achievable
            auto values = oracle::enumerate_values(inst.graph, inst.reward, kind);
            for (StateIndex u = 0; u < p.original; ++u)
                if (out.assignment[u]) CHECK(values[u] >= *out.assignment[u] - p.shift);
        }
    }
}

TEST_CASE("conversion preserves values") {
    for (const auto& inst : test::corpus({.count = 50, .seed = 8, .mdp_only = true})) {
        auto p = prepare(inst);
        for (auto kind : kKinds) {
            auto m = convert(p, reduce(p, kind));
            CHECK(m.source == kind);
            for (StateIndex c : m.copies.members()) {
                CHECK(m.graph.successors(c).size() == 1);
                CHECK(m.graph.has_edge(c, c));
                CHECK(m.reward[c] > 0);
            }
            auto converted = oracle::enumerate_values(m.graph, m.reward, Objective::Max);
            auto direct = oracle::enumerate_values(inst.graph, inst.reward, kind);
            for (StateIndex s = 0; s < p.original; ++s) CHECK(converted[s] - p.shift == direct[s]);
        }
    }
}

TEST_CASE("recovered strategies attain the value") {
    for (const auto& inst : test::corpus({.count = 40, .seed = 13, .mdp_only = true})) {
        const auto& g = inst.graph;
        for (auto kind : kKinds) {
            auto ms = solve_mdp(g, inst.reward, kind);
            // flattened strategy on g
            auto chain = oracle::induced_chain(g, &ms.strategy, nullptr);
            auto exact = oracle::analyze_chain(chain, inst.reward).expected(kind);
            CHECK(exact == ms.values);

            // explicit two-phase plan, evaluated on its product chain
            auto p = prepare(inst);
            auto product = plan_product_chain(p.h, p.r, ms.reduction, ms.witness);
            auto plan_values = oracle::analyze_chain(product.graph, product.reward).expected(kind);
            for (StateIndex s = 0; s < g.size(); ++s) CHECK(plan_values[s] - p.shift == ms.values[s]);
        }
    }
}

TEST_CASE("strategy_from_values rejects non-optimal values") {
    auto inst = test::coin();
    auto ms = solve_mdp(inst.graph, inst.reward, Objective::LimSup);
    auto inflated = ms.values;
    inflated[*inst.graph.index_of("s")] = 10;
    CHECK_THROWS_AS(strategy_from_values(inst.graph, inst.reward, Objective::LimSup, inflated),
                    InternalError);
    CHECK_THROWS_AS(strategy_from_values(inst.graph, inst.reward, Objective::Max, ms.values),
                    PreconditionError);
}
