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
#include "limgame/instance_io.hpp"
#include "limgame/oracle.hpp"
#include "limgame/qualitative.hpp"

#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace limgame;

namespace {

GameGraph graph(const std::string& text) { return parse_game(text).graph; }

StateSet random_subset(std::size_t n, std::mt19937_64& rng) {
    StateSet s(n);
    for (StateIndex i = 0; i < n; ++i)
        if (rng() % 3 == 0) s.insert(i);
    return s;
}

StateSet value_one(const GameGraph& g, const RewardFunction& r, Objective kind) {
    auto v = oracle::enumerate_values(g, r, kind);
    StateSet out(g.size());
    for (StateIndex s = 0; s < g.size(); ++s)
        if (v[s] == 1) out.insert(s);
    return out;
}

std::vector<Instance> mdps(std::size_t count, std::size_t max_states, std::uint64_t seed) {
    return test::corpus({.count = count, .max_states = max_states, .seed = seed, .mdp_only = true});
}

} // namespace

TEST_CASE("mec: small shapes") {
    SUBCASE("self-loop") {
        auto g = graph(R"({"states":[{"id":"s","owner":"p1","reward":"0"}],
                           "edges":[{"from":"s","to":"s"}]})");
        auto m = mec_decompose(g);
        REQUIRE(m.components.size() == 1);
        CHECK(m.components[0] == StateSet(1, {0}));
    }
    SUBCASE("fork into two sinks") {
        auto g = graph(R"({"states":[{"id":"s","owner":"p1","reward":"0"},
                                     {"id":"a","owner":"p1","reward":"0"},
                                     {"id":"b","owner":"p1","reward":"0"}],
                           "edges":[{"from":"s","to":"a"},{"from":"s","to":"b"},
                                    {"from":"a","to":"a"},{"from":"b","to":"b"}]})");
        auto m = mec_decompose(g);
        REQUIRE(m.components.size() == 2);
        CHECK(m.component_of[0] == MecDecomposition::none);
        CHECK(m.components[0] == StateSet(3, {1}));
        CHECK(m.components[1] == StateSet(3, {2}));
    }
    SUBCASE("probabilistic leak splits a cycle") {
        // s <-> p, but p leaks to sink t
        auto g = graph(R"({"states":[{"id":"s","owner":"p1","reward":"0"},
                                     {"id":"p","owner":"prob","reward":"0"},
                                     {"id":"t","owner":"p1","reward":"0"}],
                           "edges":[{"from":"s","to":"p"},{"from":"s","to":"s"},
                                    {"from":"p","to":"s","prob":"1/2"},{"from":"p","to":"t","prob":"1/2"},
                                    {"from":"t","to":"t"}]})");
        auto m = mec_decompose(g);
        REQUIRE(m.components.size() == 2);
        CHECK(m.components[0] == StateSet(3, {0}));
        CHECK(m.components[1] == StateSet(3, {2}));
    }
    SUBCASE("games are rejected") {
        auto g = graph(R"({"states":[{"id":"s","owner":"p1","reward":"0"},
                                     {"id":"t","owner":"p2","reward":"0"}],
                           "edges":[{"from":"s","to":"t"},{"from":"t","to":"s"}]})");
        CHECK_THROWS_AS(mec_decompose(g), PreconditionError);
    }
}

TEST_CASE("mec: maximal elements of brute-force end components") {
    for (const auto& inst : mdps(30, 8, 11)) {
        const auto& g = inst.graph;
        auto all = oracle::enumerate_end_components(g);
        std::vector<StateSet> maximal;
        for (const auto& a : all) {
            bool dominated = false;
            for (const auto& b : all)
                if (!(a == b) && a.subset_of(b)) dominated = true;
            if (!dominated) maximal.push_back(a);
        }
        auto m = mec_decompose(g);
        CHECK(m.components.size() == maximal.size());
        for (const auto& c : m.components)
            CHECK(std::find(maximal.begin(), maximal.end(), c) != maximal.end());
        for (const auto& a : all) {
            auto rep = a.members().front();
            REQUIRE(m.component_of[rep] != MecDecomposition::none);
            CHECK(a.subset_of(m.components[m.component_of[rep]]));
        }
    }
}

TEST_CASE("attractor: rules and closure") {
    auto g = graph(R"({"states":[{"id":"s","owner":"p1","reward":"0"},
                                 {"id":"p","owner":"prob","reward":"0"},
                                 {"id":"u","owner":"p1","reward":"0"},
                                 {"id":"o","owner":"p1","reward":"0"}],
                       "edges":[{"from":"s","to":"p"},{"from":"s","to":"o"},
                                {"from":"p","to":"u","prob":"1/3"},{"from":"p","to":"o","prob":"2/3"},
                                {"from":"u","to":"u"},{"from":"o","to":"o"}]})");
    CHECK(attractor_p(g, StateSet(4)) == StateSet(4));
    auto x = attractor_p(g, StateSet(4, {2}));
    CHECK(x.contains(1));       // p has an edge into u
    CHECK_FALSE(x.contains(0)); // s can avoid via o
    CHECK(attractor_p(g, StateSet(4, {2, 3})) == StateSet(4, {0, 1, 2, 3}));

    std::mt19937_64 rng(5);
    for (const auto& inst : test::corpus({.count = 40, .max_states = 8, .seed = 3})) {
        const auto& h = inst.graph;
        const std::size_t n = h.size();
        auto y = random_subset(n, rng);
        auto y2 = y | random_subset(n, rng);
        auto ax = attractor_p(h, y);
        CHECK(y.subset_of(ax));
        CHECK(attractor_p(h, ax) == ax);
        CHECK(ax.subset_of(attractor_p(h, y2)));
        for (StateIndex s = 0; s < n; ++s) {
            if (ax.contains(s)) continue;
            bool into = false, stays = false;
            for (const auto& e : h.successors(s)) {
                into = into || ax.contains(e.to);
                stays = stays || !ax.contains(e.to);
            }
            if (h.owner(s) == Owner::Probabilistic) CHECK_FALSE(into);
            else if (h.owner(s) == Owner::Player1) CHECK(stays);
        }
    }
}

TEST_CASE("almost-sure reach, buchi and cobuchi against oracle value-1 sets") {
    std::mt19937_64 rng(17);
    for (const auto& inst : mdps(30, 7, 23)) {
        const auto& g = inst.graph;
        const std::size_t n = g.size();
        auto t = random_subset(n, rng);
        auto ind = RewardFunction::indicator(t);
        // reaching t is the max objective of its indicator
        CHECK(almost_sure_reach(g, t) == value_one(g, ind, Objective::Max));
        CHECK(almost_sure_buchi(g, t) == value_one(g, ind, Objective::LimSup));
        CHECK(almost_sure_cobuchi(g, t) == value_one(g, ind, Objective::LimInf));

        auto res = almost_sure_buchi_strategy(g, t, StateSet(n, true));
        CHECK(res.winning == almost_sure_buchi(g, t));
    }
}

TEST_CASE("qualitative edge cases") {
    auto inst = test::coin();
    const auto& g = inst.graph;
    const std::size_t n = g.size();
    CHECK(almost_sure_buchi(g, StateSet(n)) == StateSet(n));
    CHECK(almost_sure_buchi(g, StateSet(n, true)) == StateSet(n, true));
    CHECK(almost_sure_cobuchi(g, StateSet(n, true)) == StateSet(n, true));
    // neither MEC ({a}, {b}) is inside {s, p}
    CHECK(almost_sure_cobuchi(g, StateSet(n, {0, 1})) == StateSet(n));
    // b can be forced from s; a only with probability 1/2
    auto b = *g.index_of("b"), a = *g.index_of("a");
    CHECK(almost_sure_buchi(g, StateSet(n, {b})) == StateSet(n, {0, b}));
    CHECK(almost_sure_reach(g, StateSet(n, {a})) == StateSet(n, {a}));
}

// Complementary on recurrent states only: a transient state that branches
// into both kinds of classes wins neither objective almost surely.
TEST_CASE("buchi and cobuchi on chains: disjoint, complementary on recurrent states") {
    std::mt19937_64 rng(9);
    for (const auto& inst : mdps(20, 7, 41)) {
        const auto& g = inst.graph;
        auto st = PureMemorylessStrategy::first_successor(g, Owner::Player1);
        auto chain = oracle::induced_chain(g, &st, nullptr);
        auto analysis = oracle::analyze_chain(chain, inst.reward);
        auto b = random_subset(g.size(), rng);
        auto complement = StateSet(g.size(), true) - b;
        auto wb = almost_sure_buchi(chain, b), wc = almost_sure_cobuchi(chain, complement);
        CHECK_FALSE(wb.intersects(wc));
        for (StateIndex s = 0; s < g.size(); ++s)
            if (analysis.class_of[s] != oracle::ChainAnalysis::npos)
                CHECK((wb.contains(s) || wc.contains(s)));
    }
}
