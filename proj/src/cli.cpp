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

#include "limgame/cli.hpp"

#include "limgame/errors.hpp"
#include "limgame/game_solver.hpp"
#include "limgame/instance_io.hpp"
#include "limgame/max_solver.hpp"
#include "limgame/mdp_solver.hpp"
#include "limgame/oracle.hpp"
#include "limgame/qualitative.hpp"
#include "limgame/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace limgame::cli {

namespace {

using nlohmann::ordered_json;

Instance load(const RunConfig& config, std::istream& in) {
    std::string text;
    if (config.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream file(config.input);
        if (!file)
            throw ValidationError(ValidationErrorKind::MalformedDocument,
                                  "cannot open \"" + config.input + "\"");
        text.assign(std::istreambuf_iterator<char>(file), {});
    }
    return parse_game(text);
}

std::uint64_t budget_from_env() {
    const char* env = std::getenv("LIMGAME_BUDGET");
    if (env == nullptr || *env == '\0') return GameSolveOptions{}.budget;
    char* end = nullptr;
    errno = 0;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || v == 0 || env[0] == '-')
        throw UsageError("LIMGAME_BUDGET must be a positive integer");
    return v;
}

StateIndex require_state(const GameGraph& g, const std::string& id) {
    auto s = g.index_of(id);
    if (!s) throw ValidationError(ValidationErrorKind::UnknownState, "unknown state \"" + id + "\"");
    return *s;
}

std::string render(const Rational& q, bool approx) {
    auto text = to_string(q);
    if (approx) text += " (~" + to_decimal(q) + ")";
    return text;
}

ordered_json values_json(const GameGraph& g, const ValueVector& v) {
    ordered_json j = ordered_json::object();
    for (StateIndex s = 0; s < g.size(); ++s) j[g.id(s)] = to_string(v[s]);
    return j;
}

ordered_json strategy_json(const GameGraph& g, const PureMemorylessStrategy& st) {
    ordered_json j = ordered_json::object();
    for (StateIndex s = 0; s < st.universe(); ++s)
        if (st.defined(s)) j[g.id(s)] = g.id(st[s]);
    return j;
}

void print_values(std::ostream& out, const GameGraph& g, const ValueVector& v, bool approx) {
    for (StateIndex s = 0; s < g.size(); ++s)
        out << g.id(s) << " = " << render(v[s], approx) << '\n';
}

void print_strategy(std::ostream& out, const GameGraph& g, const PureMemorylessStrategy& st,
                    const char* label) {
    for (StateIndex s = 0; s < st.universe(); ++s)
        if (st.defined(s)) out << label << ' ' << g.id(s) << " -> " << g.id(st[s]) << '\n';
}

std::string set_text(const GameGraph& g, const StateSet& set) {
    std::string text = "{";
    bool first = true;
    for (auto s : set.members()) {
        text += (first ? "" : ", ") + g.id(s);
        first = false;
    }
    return text + "}";
}

ordered_json set_json(const GameGraph& g, const StateSet& set) {
    ordered_json j = ordered_json::array();
    for (auto s : set.members()) j.push_back(g.id(s));
    return j;
}

struct Solved {
    ValueVector values;
    PureMemorylessStrategy strategy1;
    PureMemorylessStrategy strategy2;
    std::vector<ReductionStep> trace; // reduction log of the MDP the values came from
    Rational trace_shift;             // the log runs on rewards shifted to be positive
    bool certified = true;
};

// Limsup/liminf go through the game solver; max only applies to instances
// already in converted shape (one controller, positive rewards absorbing).
Solved solve_any(const Instance& inst, Objective kind, const GameSolveOptions& options,
                 bool want_trace) {
    const auto& g = inst.graph;
    Solved out;
    if (kind == Objective::Max) {
        if (g.count(Owner::Player2) > 0)
            throw PreconditionError("max objective is solved for player-1 MDPs only");
        auto m = as_converted(g, inst.reward);
        auto sol = solve_max(m);
        out.values = sol.values;
        out.strategy1 = sol.strategy;
        out.strategy2 = PureMemorylessStrategy(Owner::Player2, g.size());
        out.certified = sol.certificate.ok();
        return out;
    }
    auto sol = solve_game(g, inst.reward, kind, options);
    out.values = std::move(sol.values);
    out.strategy1 = std::move(sol.strategy1);
    out.strategy2 = std::move(sol.strategy2);
    if (want_trace) {
        // For games the trace is that of the player-1 MDP left once player 2
        // plays its optimal strategy.
        const GameGraph mdp =
            g.count(Owner::Player2) > 0 && g.count(Owner::Player1) > 0 ? fix_strategy(g, out.strategy2) : g;
        auto ms = solve_mdp(mdp, inst.reward, kind);
        out.trace = ms.reduction.log;
        out.trace_shift = ms.shift;
        out.certified = ms.max_solution.certificate.ok();
    }
    return out;
}

GameSolveOptions solve_options(const RunConfig& config) {
    GameSolveOptions o;
    o.budget = budget_from_env();
    o.jobs = config.jobs;
    return o;
}

int cmd_solve(const RunConfig& config, const Instance& inst, std::ostream& out, std::ostream& err) {
    const auto& g = inst.graph;
    const auto options = solve_options(config);
    auto solved = solve_any(inst, config.objective, options, config.trace);
    int status = kOk;
    if (!solved.certified) {
        err << "error: solution certificate failed\n";
        status = kInternal;
    }

    ordered_json j;
    j["command"] = "solve";
    j["objective"] = std::string(to_string(config.objective));
    j["values"] = values_json(g, solved.values);

    if (!config.json) {
        print_values(out, g, solved.values, config.approx);
    }
    if (config.witness) {
        j["strategies"] = {{"p1", strategy_json(g, solved.strategy1)},
                           {"p2", strategy_json(g, solved.strategy2)}};
        if (!config.json) {
            print_strategy(out, g, solved.strategy1, "p1");
            print_strategy(out, g, solved.strategy2, "p2");
        }
    }
    if (config.trace) {
        ordered_json steps = ordered_json::array();
        for (const auto& step : solved.trace) {
            const Rational level = step.level - solved.trace_shift;
            steps.push_back({{"level", to_string(level)},
                             {"winning", step.winning.count()},
                             {"removed", step.removed.count()},
                             {"skipped", step.skipped}});
            if (!config.json)
                out << "level " << to_string(level) << " |U|=" << step.winning.count()
                    << " |B|=" << step.removed.count() << (step.skipped ? " (skipped)" : "")
                    << '\n';
        }
        j["trace"] = steps;
    }
    if (config.check_determinacy) {
        auto report = check_determinacy(g, inst.reward, options);
        ordered_json d;
        d["ok"] = report.ok();
        ordered_json sums = ordered_json::object();
        for (StateIndex s = 0; s < g.size(); ++s)
            sums[g.id(s)] = {to_string(report.limsup_sums[s]), to_string(report.liminf_sums[s])};
        d["sums"] = sums;
        j["determinacy"] = d;
        if (!config.json) {
            out << "determinacy: " << (report.ok() ? "ok" : "VIOLATED") << '\n';
            for (StateIndex s = 0; s < g.size(); ++s)
                if (report.limsup_sums[s] != 0 || report.liminf_sums[s] != 0)
                    out << "  " << g.id(s) << ": limsup sum " << to_string(report.limsup_sums[s])
                        << ", liminf sum " << to_string(report.liminf_sums[s]) << '\n';
        }
        if (!report.ok()) status = kInternal;
    }
    if (config.oracle_verify) {
        auto expected = oracle::enumerate_values(g, inst.reward, config.objective, options.budget);
        ordered_json mismatches = ordered_json::array();
        for (StateIndex s = 0; s < g.size(); ++s) {
            if (expected[s] == solved.values[s]) continue;
            mismatches.push_back({{"state", g.id(s)},
                                  {"pipeline", to_string(solved.values[s])},
                                  {"oracle", to_string(expected[s])}});
            if (!config.json)
                out << "mismatch " << g.id(s) << ": pipeline " << to_string(solved.values[s])
                    << ", oracle " << to_string(expected[s]) << '\n';
        }
        j["oracle_verify"] = {{"ok", mismatches.empty()}, {"mismatches", mismatches}};
        if (!config.json) out << "oracle-verify: " << (mismatches.empty() ? "ok" : "MISMATCH") << '\n';
        if (!mismatches.empty() && status == kOk) status = kMismatch;
    }
    if (config.json) out << j.dump(2) << '\n';
    return status;
}

int cmd_decide(const RunConfig& config, const Instance& inst, std::ostream& out) {
    const auto& g = inst.graph;
    const StateIndex s = require_state(g, *config.state);
    if (config.objective == Objective::Max)
        throw PreconditionError("decide supports limsup and liminf");
    auto result = decide(g, inst.reward, config.objective, s, *config.threshold,
                         solve_options(config));
    const char* label = result.holds ? "p1" : "p2";
    if (config.json) {
        ordered_json j;
        j["command"] = "decide";
        j["objective"] = std::string(to_string(config.objective));
        j["state"] = g.id(s);
        j["threshold"] = to_string(*config.threshold);
        j["answer"] = result.holds ? "YES" : "NO";
        j["value"] = to_string(result.value);
        j["witness"] = {{"player", label}, {"strategy", strategy_json(g, result.witness)}};
        j["witness_bound"] = to_string(result.witness_bound);
        j["witness_verified"] = result.witness_verified;
        out << j.dump(2) << '\n';
    } else {
        out << (result.holds ? "YES" : "NO") << '\n';
        out << "value " << g.id(s) << " = " << render(result.value, config.approx) << '\n';
        print_strategy(out, g, result.witness, label);
        out << "witness bound = " << render(result.witness_bound, config.approx)
            << (result.witness_verified ? " (verified)" : " (NOT verified)") << '\n';
    }
    if (!result.witness_verified) return kInternal;
    return result.holds ? kOk : kNo;
}

int cmd_qualitative(const RunConfig& config, const Instance& inst, std::ostream& out) {
    const auto& g = inst.graph;
    if (!g.is_mdp() || g.controller() != Owner::Player1)
        throw PreconditionError("qualitative queries need a player-1 MDP");
    StateSet targets(g.size());
    for (const auto& id : config.targets) targets.insert(require_state(g, id));
    const bool buchi = config.qualitative == QualitativeKind::Buchi;
    auto winning = buchi ? almost_sure_buchi(g, targets) : almost_sure_cobuchi(g, targets);
    if (config.json) {
        ordered_json j;
        j["command"] = "qualitative";
        j["objective"] = buchi ? "buchi" : "cobuchi";
        j["targets"] = set_json(g, targets);
        j["winning"] = set_json(g, winning);
        out << j.dump(2) << '\n';
    } else {
        out << "winning " << set_text(g, winning) << '\n';
    }
    return kOk;
}

int cmd_mec(const RunConfig& config, const Instance& inst, std::ostream& out) {
    const auto& g = inst.graph;
    if (!g.is_mdp()) throw PreconditionError("mec decomposition needs an MDP");
    auto mecs = mec_decompose(g);
    if (config.json) {
        ordered_json j;
        j["command"] = "mec";
        j["components"] = ordered_json::array();
        for (const auto& c : mecs.components) j["components"].push_back(set_json(g, c));
        out << j.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < mecs.components.size(); ++i)
            out << "mec " << i << ' ' << set_text(g, mecs.components[i]) << '\n';
    }
    return kOk;
}

int cmd_oracle(const RunConfig& config, const Instance& inst, std::ostream& out) {
    const auto& g = inst.graph;
    auto values = oracle::enumerate_values(g, inst.reward, config.objective, budget_from_env());
    if (config.json) {
        ordered_json j;
        j["command"] = "oracle";
        j["objective"] = std::string(to_string(config.objective));
        j["values"] = values_json(g, values);
        out << j.dump(2) << '\n';
    } else {
        print_values(out, g, values, config.approx);
    }
    return kOk;
}

int cmd_simulate(const RunConfig& config, const Instance& inst, std::ostream& out) {
    const auto& g = inst.graph;
    const StateIndex s = require_state(g, *config.state);
    auto solved = solve_any(inst, config.objective, solve_options(config), false);
    oracle::SimulationOptions o;
    o.episodes = config.episodes;
    o.horizon = config.horizon;
    o.seed = config.seed;
    o.jobs = config.jobs;
    const bool has1 = g.count(Owner::Player1) > 0, has2 = g.count(Owner::Player2) > 0;
    auto est = oracle::simulate(g, inst.reward, has1 ? &solved.strategy1 : nullptr,
                                has2 ? &solved.strategy2 : nullptr, config.objective, s, o);
    if (config.json) {
        ordered_json j;
        j["command"] = "simulate";
        j["objective"] = std::string(to_string(config.objective));
        j["state"] = g.id(s);
        j["episodes"] = o.episodes;
        j["horizon"] = o.horizon;
        j["seed"] = o.seed;
        j["mean"] = to_string(est.exact_mean);
        j["standard_error"] = est.standard_error;
        j["half_width"] = est.half_width;
        j["exact_value"] = to_string(solved.values[s]);
        out << j.dump(2) << '\n';
    } else {
        out << "estimate " << g.id(s) << " = " << to_decimal(est.exact_mean) << " +- "
            << est.half_width << " (se " << est.standard_error << ")\n";
        out << "exact " << g.id(s) << " = " << render(solved.values[s], config.approx) << '\n';
    }
    return kOk;
}

int cmd_gen(const RunConfig& config, std::ostream& out) {
    out << serialize_game(generate_instance(config.generator));
    return kOk;
}

} // namespace

void validate(const RunConfig& c) {
    if (c.threshold && c.command != Command::Decide)
        throw UsageError("--threshold is only valid for decide");
    if (c.command == Command::Decide && (!c.state || !c.threshold))
        throw UsageError("decide requires --state and --threshold");
    if (c.command == Command::Simulate && !c.state) throw UsageError("simulate requires --state");
    if (c.command == Command::Qualitative && c.targets.empty())
        throw UsageError("qualitative requires --targets");
    if (c.command == Command::Gen) {
        if (c.generator.states < 1) throw UsageError("--states must be at least 1");
        if (!(c.generator.density > 0.0 && c.generator.density <= 1.0))
            throw UsageError("--density must lie in (0, 1]");
        if (c.generator.reward_min > c.generator.reward_max)
            throw UsageError("--reward-min exceeds --reward-max");
    }
    if (c.command == Command::Simulate && (c.episodes < 1 || c.horizon < 2))
        throw UsageError("simulate needs at least one episode and a horizon of 2");
    if (c.jobs < 0) throw UsageError("--jobs must be nonnegative");
}

std::optional<RunConfig> parse_arguments(const std::vector<std::string>& args, std::ostream& out) {
    RunConfig c;
    CLI::App app{"Exact values and optimal strategies for limsup/liminf stochastic games", "limgame"};
    app.require_subcommand(1);

    std::string objective = "limsup";
    std::string threshold;
    std::string kind = "game";
    std::string qual = "buchi";

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", c.input, "Instance file, or - for standard input");
    };
    auto add_objective = [&](CLI::App* sub) {
        sub->add_option("--objective,-o", objective, "limsup, liminf or max")
            ->check(CLI::IsMember({"limsup", "liminf", "max"}));
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_flag("--json", c.json, "Emit one JSON object");
        sub->add_flag("--approx", c.approx, "Append 6-place decimals in text mode");
    };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs,-j", c.jobs, "Worker threads for enumeration (0: default)");
    };

    auto* solve = app.add_subcommand("solve", "Values (and strategies) per state");
    add_input(solve);
    add_objective(solve);
    add_output(solve);
    add_jobs(solve);
    solve->add_flag("--witness", c.witness, "Print optimal pure memoryless strategies");
    solve->add_flag("--trace", c.trace, "Print the reduction levels");
    solve->add_flag("--check-determinacy", c.check_determinacy, "Verify both determinacy identities");
    solve->add_flag("--oracle-verify", c.oracle_verify, "Compare against strategy enumeration");

    auto* dec = app.add_subcommand("decide", "Is Val(state) >= threshold?");
    add_input(dec);
    add_objective(dec);
    add_output(dec);
    add_jobs(dec);
    dec->add_option("--state,-s", c.state, "State id")->required();
    dec->add_option("--threshold,-q", threshold, "Rational threshold n/d")->required();

    auto* qualitative = app.add_subcommand("qualitative", "Almost-sure winning set of an MDP");
    add_input(qualitative);
    add_output(qualitative);
    qualitative->add_option("--objective,-o", qual, "buchi or cobuchi")
        ->check(CLI::IsMember({"buchi", "cobuchi"}));
    std::string targets;
    qualitative->add_option("--targets,-t", targets, "Comma-separated target state ids")
        ->required();

    auto* mec = app.add_subcommand("mec", "Maximal end components of an MDP");
    add_input(mec);
    add_output(mec);

    auto* orc = app.add_subcommand("oracle", "Values by exhaustive strategy enumeration");
    add_input(orc);
    add_objective(orc);
    add_output(orc);
    add_jobs(orc);
    orc->add_flag("--witness", c.witness, "Accepted for symmetry with solve; ignored");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate under optimal strategies");
    add_input(sim);
    add_objective(sim);
    add_output(sim);
    add_jobs(sim);
    sim->add_option("--state,-s", c.state, "Start state id")->required();
    sim->add_option("--episodes", c.episodes, "Number of episodes");
    sim->add_option("--horizon", c.horizon, "Steps per episode");
    sim->add_option("--seed", c.seed, "Seed");

    auto* gen = app.add_subcommand("gen", "Print a random valid instance");
    gen->add_option("--states,-n", c.generator.states, "Number of states");
    gen->add_option("--density,-d", c.generator.density, "Chance of each extra edge, in (0, 1]");
    gen->add_option("--max-successors", c.generator.max_successors, "Cap on out-degree (0: none)");
    gen->add_option("--reward-min", c.generator.reward_min, "Smallest reward");
    gen->add_option("--reward-max", c.generator.reward_max, "Largest reward");
    gen->add_option("--prob-share", c.generator.probabilistic_share,
                    "Expected share of probabilistic states");
    gen->add_option("--kind", kind, "mdp or game")->check(CLI::IsMember({"mdp", "game"}));
    gen->add_option("--seed", c.generator.seed, "Seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (solve->parsed()) c.command = Command::Solve;
    else if (dec->parsed()) c.command = Command::Decide;
    else if (qualitative->parsed()) c.command = Command::Qualitative;
    else if (mec->parsed()) c.command = Command::Mec;
    else if (orc->parsed()) c.command = Command::Oracle;
    else if (sim->parsed()) c.command = Command::Simulate;
    else c.command = Command::Gen;

    for (std::size_t start = 0; !targets.empty() && start <= targets.size();) {
        auto comma = targets.find(',', start);
        if (comma == std::string::npos) comma = targets.size();
        if (comma > start) c.targets.push_back(targets.substr(start, comma - start));
        start = comma + 1;
    }
    c.objective = *parse_objective(objective);
    c.qualitative = qual == "buchi" ? QualitativeKind::Buchi : QualitativeKind::CoBuchi;
    c.generator.kind = kind == "mdp" ? GeneratedKind::Mdp : GeneratedKind::Game;
    if (!threshold.empty()) {
        try {
            c.threshold = parse_rational(threshold);
        } catch (const ValidationError& e) {
            throw UsageError(std::string("--threshold: ") + e.what());
        }
    }
    validate(c);
    return c;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        if (config.command == Command::Gen) return cmd_gen(config, out);
        const Instance inst = load(config, in);
        switch (config.command) {
        case Command::Solve: return cmd_solve(config, inst, out, err);
        case Command::Decide: return cmd_decide(config, inst, out);
        case Command::Qualitative: return cmd_qualitative(config, inst, out);
        case Command::Mec: return cmd_mec(config, inst, out);
        case Command::Oracle: return cmd_oracle(config, inst, out);
        case Command::Simulate: return cmd_simulate(config, inst, out);
        case Command::Gen: break;
        }
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ValidationError& e) {
        err << "invalid instance (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kDataError;
    } catch (const PreconditionError& e) {
        err << "unsupported input: " << e.what() << '\n';
        return kDataError;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << " (raise LIMGAME_BUDGET)\n";
        return kUnavailable;
    } catch (const InternalError& e) {
        err << "internal check failed: " << e.what() << '\n';
        return kInternal;
    }
}

int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    std::optional<RunConfig> config;
    try {
        config = parse_arguments(args, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\nrun with --help for usage\n";
        return kUsage;
    }
    if (!config) return kOk;
    return run(*config, in, out, err);
}

} // namespace limgame::cli
