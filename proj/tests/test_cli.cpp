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
#include "limgame/instance_io.hpp"

#include "support.hpp"

#include <json.hpp>

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace limgame;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::main_entry(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string kCoin = std::string(LIMGAME_TEST_DATA) + "/coin.json";

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

} // namespace

TEST_CASE("solve prints exact values") {
    auto r = run({"solve", "--objective", "limsup", kCoin});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "s = 6"));
    CHECK(has_line(r.out, "a = 10"));

    r = run({"solve", "--approx", kCoin});
    CHECK(has_line(r.out, "s = 6 (~6.000000)"));

    r = run({"solve", "--witness", "--trace", kCoin});
    CHECK(has_line(r.out, "p1 s -> p"));
    CHECK(r.out.find("level 10") != std::string::npos);
}

TEST_CASE("solve reads standard input and emits json") {
    auto r = run({"solve", "--json", "--witness", "--oracle-verify", "--check-determinacy", "-"},
                 test::read_data("coin.json"));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["values"]["s"] == "6");
    CHECK(j["strategies"]["p1"]["s"] == "p");
    CHECK(j["oracle_verify"]["ok"] == true);
    CHECK(j["determinacy"]["ok"] == true);
}

TEST_CASE("decide") {
    auto yes = run({"decide", "--state", "s", "--threshold", "6", kCoin});
    CHECK(yes.code == 0);
    CHECK(yes.out.rfind("YES\n", 0) == 0);
    auto no = run({"decide", "--state", "s", "--threshold", "601/100", kCoin});
    CHECK(no.code == 1);
    CHECK(no.out.rfind("NO\n", 0) == 0);
}

TEST_CASE("qualitative, mec, oracle, simulate") {
    auto r = run({"qualitative", "--objective", "buchi", "--targets", "b", kCoin});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "winning {s, b}"));
    r = run({"qualitative", "--objective", "cobuchi", "--targets", "s,p,a", kCoin});
    CHECK(has_line(r.out, "winning {a}"));

    r = run({"mec", kCoin});
    CHECK(has_line(r.out, "mec 0 {a}"));
    CHECK(has_line(r.out, "mec 1 {b}"));

    r = run({"oracle", "--objective", "liminf", kCoin});
    CHECK(has_line(r.out, "s = 6"));

    r = run({"simulate", "--state", "s", "--episodes", "2000", "--seed", "5", "--json", kCoin});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exact_value"] == "6");
    auto again = run({"simulate", "--state", "s", "--episodes", "2000", "--seed", "5", "--json", kCoin});
    CHECK(again.out == r.out);
}

TEST_CASE("gen output parses and verifies") {
    auto g = run({"gen", "--states", "6", "--seed", "7"});
    REQUIRE(g.code == 0);
    CHECK_NOTHROW(parse_game(g.out));
    CHECK(run({"gen", "--states", "6", "--seed", "7"}).out == g.out);
    auto s = run({"solve", "--oracle-verify"}, g.out);
    CHECK(s.code == 0);
    for (const char* kind : {"mdp", "game"}) {
        auto h = run({"gen", "--states", "5", "--kind", kind, "--seed", "3", "--density", "1"});
        CHECK(run({"solve", "--objective", "liminf", "--oracle-verify"}, h.out).code == 0);
    }
}

TEST_CASE("max objective on converted shape") {
    auto r = run({"solve", "--objective", "max", kCoin});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "s = 6"));
    auto bad = run({"solve", "--objective", "max"},
                   R"({"states":[{"id":"s","owner":"p1","reward":"1"},{"id":"t","owner":"p1","reward":"0"}],
                       "edges":[{"from":"s","to":"t"},{"from":"t","to":"s"}]})");
    CHECK(bad.code == cli::kDataError);
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"decide", "--state", "s", kCoin}).code == cli::kUsage);
    CHECK(run({"decide", "--state", "s", "--threshold", "x", kCoin}).code == cli::kUsage);
    CHECK(run({"solve", "--objective", "parity", kCoin}).code == cli::kUsage);
    CHECK(run({"gen", "--density", "0"}).code == cli::kUsage);
    CHECK(run({"gen", "--states", "0"}).code == cli::kUsage);
    CHECK(run({"gen", "--reward-min", "5", "--reward-max", "1"}).code == cli::kUsage);
    CHECK(run({"solve"}, "{not json").code == cli::kDataError);
    CHECK(run({"solve", "/nonexistent/file.json"}).code == cli::kDataError);
    CHECK(run({"decide", "--state", "zz", "--threshold", "1", kCoin}).code == cli::kDataError);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget from the environment") {
    auto game = run({"gen", "--states", "7", "--kind", "game", "--density", "1", "--seed", "2"}).out;
    ::setenv("LIMGAME_BUDGET", "1", 1);
    auto r = run({"solve"}, game);
    ::setenv("LIMGAME_BUDGET", "nope", 1);
    auto u = run({"solve"}, game);
    ::unsetenv("LIMGAME_BUDGET");
    CHECK(r.code == cli::kUnavailable);
    CHECK(u.code == cli::kUsage);
    CHECK(run({"solve"}, game).code == 0);
}
