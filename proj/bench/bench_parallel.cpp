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

// Serial reference vs OpenMP kernels: player-2 strategy enumeration and
// Monte Carlo episodes.

#include "limgame/game_solver.hpp"
#include "limgame/generator.hpp"
#include "limgame/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace limgame;

Instance bench_game() {
    GeneratorOptions o;
    o.states = 14;
    o.density = 0.25;
    o.max_successors = 3;
    o.kind = GeneratedKind::Game;
    o.probabilistic_share = 0.3;
    o.seed = 11;
    return generate_instance(o);
}

void BM_EnumerateSerial(benchmark::State& state) {
    auto inst = bench_game();
    for (auto _ : state) {
        auto sol = solve_game_serial(inst.graph, inst.reward, Objective::LimSup);
        benchmark::DoNotOptimize(sol.values);
    }
}

void BM_EnumerateParallel(benchmark::State& state) {
    auto inst = bench_game();
    GameSolveOptions options;
    options.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto sol = solve_game(inst.graph, inst.reward, Objective::LimSup, options);
        benchmark::DoNotOptimize(sol.values);
    }
}

void BM_SimulateSerial(benchmark::State& state) {
    auto inst = bench_game();
    auto sol = solve_game(inst.graph, inst.reward, Objective::LimSup);
    oracle::SimulationOptions o;
    o.episodes = 20000;
    for (auto _ : state) {
        auto est = oracle::simulate_serial(inst.graph, inst.reward, &sol.strategy1, &sol.strategy2,
                                           Objective::LimSup, 0, o);
        benchmark::DoNotOptimize(est.mean);
    }
}

void BM_SimulateParallel(benchmark::State& state) {
    auto inst = bench_game();
    auto sol = solve_game(inst.graph, inst.reward, Objective::LimSup);
    oracle::SimulationOptions o;
    o.episodes = 20000;
    o.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto est = oracle::simulate(inst.graph, inst.reward, &sol.strategy1, &sol.strategy2,
                                    Objective::LimSup, 0, o);
        benchmark::DoNotOptimize(est.mean);
    }
}

} // namespace

BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(2)->Arg(4)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)->Arg(2)->Arg(4)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
