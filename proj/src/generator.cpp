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

#include "limgame/generator.hpp"

#include "limgame/errors.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace limgame {

Instance generate_instance(const GeneratorOptions& o) {
    if (o.states < 1) throw PreconditionError("generator needs at least one state");
    if (!(o.density > 0.0 && o.density <= 1.0))
        throw PreconditionError("edge density must lie in (0, 1]");
    if (o.reward_min > o.reward_max) throw PreconditionError("empty reward range");
    if (o.probabilistic_share < 0.0 || o.probabilistic_share > 1.0)
        throw PreconditionError("probabilistic share must lie in [0, 1]");

    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> reward(o.reward_min, o.reward_max);
    std::uniform_int_distribution<int> weight(1, 4);
    const std::size_t n = o.states;

    std::vector<std::string> ids(n);
    std::vector<Owner> owners(n);
    std::vector<Rational> rewards(n);
    for (std::size_t s = 0; s < n; ++s) {
        ids[s] = "s" + std::to_string(s);
        if (unit(rng) < o.probabilistic_share)
            owners[s] = Owner::Probabilistic;
        else if (o.kind == GeneratedKind::Game && unit(rng) < 0.5)
            owners[s] = Owner::Player2;
        else
            owners[s] = Owner::Player1;
        rewards[s] = Rational(static_cast<long>(reward(rng)));
    }

    std::vector<std::vector<Edge>> succ(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<StateIndex> targets;
        // one guaranteed successor keeps every state live
        targets.push_back(pick(rng));
        for (std::size_t t = 0; t < n; ++t)
            if (t != targets.front() && unit(rng) < o.density) targets.push_back(t);
        if (o.max_successors > 0 && targets.size() > o.max_successors) {
            std::shuffle(targets.begin() + 1, targets.end(), rng);
            targets.resize(o.max_successors);
        }
        std::sort(targets.begin(), targets.end());
        if (owners[s] == Owner::Probabilistic) {
            std::vector<int> w(targets.size());
            long total = 0;
            for (auto& x : w) total += x = weight(rng);
            for (std::size_t i = 0; i < targets.size(); ++i) {
                Rational p(w[i], total);
                p.canonicalize();
                succ[s].push_back(Edge{targets[i], p});
            }
        } else {
            for (auto t : targets) succ[s].push_back(Edge{t, Rational(0)});
        }
    }
    return Instance{GameGraph(std::move(ids), std::move(owners), std::move(succ)),
                    RewardFunction(std::move(rewards))};
}

} // namespace limgame
