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

#include "limgame/instance_io.hpp"

#include "limgame/errors.hpp"

#include <json.hpp>

namespace limgame {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw ValidationError(ValidationErrorKind::MalformedDocument, what);
}

const std::string& string_field(const json& obj, const char* key, const char* context) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string())
        malformed(std::string(context) + " needs a string field \"" + key + "\"");
    return it->get_ref<const std::string&>();
}

Owner parse_owner(const std::string& text) {
    if (text == "p1") return Owner::Player1;
    if (text == "p2") return Owner::Player2;
    if (text == "prob") return Owner::Probabilistic;
    malformed("unknown owner \"" + text + "\"");
}

} // namespace

Instance parse_game(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) malformed("instance must be a JSON object");
    auto states = doc.find("states");
    auto edges = doc.find("edges");
    if (states == doc.end() || !states->is_array()) malformed("missing \"states\" array");
    if (edges == doc.end() || !edges->is_array()) malformed("missing \"edges\" array");

    std::vector<std::string> ids;
    std::vector<Owner> owners;
    std::vector<Rational> rewards;
    for (const auto& st : *states) {
        if (!st.is_object()) malformed("state entries must be objects");
        ids.push_back(string_field(st, "id", "state"));
        owners.push_back(parse_owner(string_field(st, "owner", "state")));
        auto reward = st.find("reward");
        if (reward == st.end())
            throw ValidationError(ValidationErrorKind::MissingReward,
                                  "state \"" + ids.back() + "\" has no reward");
        if (!reward->is_string())
            throw ValidationError(ValidationErrorKind::MalformedRational,
                                  "reward of \"" + ids.back() + "\" must be a rational string");
        rewards.push_back(parse_rational(reward->get_ref<const std::string&>()));
    }

    std::vector<GameGraph::EdgeSpec> specs;
    for (const auto& e : *edges) {
        if (!e.is_object()) malformed("edge entries must be objects");
        GameGraph::EdgeSpec spec{string_field(e, "from", "edge"), string_field(e, "to", "edge"),
                                 std::nullopt};
        if (auto p = e.find("prob"); p != e.end()) {
            if (!p->is_string())
                throw ValidationError(ValidationErrorKind::MalformedRational,
                                      "probability on " + spec.from + " -> " + spec.to +
                                          " must be a rational string");
            spec.prob = parse_rational(p->get_ref<const std::string&>());
        }
        specs.push_back(std::move(spec));
    }

    auto graph = GameGraph::from_specs(std::move(ids), std::move(owners), specs);
    return Instance{std::move(graph), RewardFunction(std::move(rewards))};
}

std::string serialize_game(const Instance& instance) {
    const auto& g = instance.graph;
    json states = json::array();
    json edges = json::array();
    for (StateIndex s = 0; s < g.size(); ++s) {
        states.push_back({{"id", g.id(s)},
                          {"owner", to_string(g.owner(s))},
                          {"reward", to_string(instance.reward[s])}});
        for (const auto& e : g.successors(s)) {
            json edge = {{"from", g.id(s)}, {"to", g.id(e.to)}};
            if (g.owner(s) == Owner::Probabilistic) edge["prob"] = to_string(e.prob);
            edges.push_back(std::move(edge));
        }
    }
    json doc = {{"states", std::move(states)}, {"edges", std::move(edges)}};
    return doc.dump() + "\n";
}

} // namespace limgame
