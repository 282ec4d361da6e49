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

#pragma once

#include "limgame/generator.hpp"
#include "limgame/objective.hpp"
#include "limgame/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace limgame::cli {

enum ExitCode : int {
    kOk = 0,
    kNo = 1,           // decide answered NO
    kMismatch = 2,     // --oracle-verify disagreement
    kUsage = 64,
    kDataError = 65,   // parse or validation failure, unsupported instance shape
    kUnavailable = 69, // enumeration budget exceeded
    kInternal = 70,    // certificate or witness check failed
};

enum class Command { Solve, Decide, Qualitative, Mec, Oracle, Simulate, Gen };
enum class QualitativeKind { Buchi, CoBuchi };

struct RunConfig {
    Command command = Command::Solve;
    std::string input = "-"; // "-" reads standard input
    Objective objective = Objective::LimSup;
    QualitativeKind qualitative = QualitativeKind::Buchi;
    std::vector<std::string> targets;
    std::optional<std::string> state;
    std::optional<Rational> threshold;
    bool trace = false;
    bool witness = false;
    bool check_determinacy = false;
    bool oracle_verify = false;
    bool approx = false;
    bool json = false;
    int jobs = 0;
    std::uint64_t episodes = 100000;
    std::size_t horizon = 200;
    std::uint64_t seed = 1;
    GeneratorOptions generator;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws UsageError when the configuration breaks a cross-field rule.
void validate(const RunConfig& config);

/// Parses argv (without the program name). Returns nullopt after printing
/// help to `out`; throws UsageError on bad arguments.
std::optional<RunConfig> parse_arguments(const std::vector<std::string>& args, std::ostream& out);

/// Executes a validated configuration and returns the exit status.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// parse_arguments + run with the exit-code mapping for usage errors.
int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err);

} // namespace limgame::cli
