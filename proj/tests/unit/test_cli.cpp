// Copyright 2026 The gsc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

using nlohmann::json;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = gsc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &rel) {
    return std::string(GSC_DATA_DIR) + "/" + rel;
}

json run_json(std::vector<std::string> args, int expected_code = 0) {
    args.insert(args.begin(), "--json");
    Outcome o = run(args);
    EXPECT_EQ(o.code, expected_code) << o.err;
    return json::parse(o.out);
}

TEST(Cli, ClassifyPhaseGate) {
    Outcome o = run({"classify", data("circuits/t.cir")});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("hierarchy level: C_3"), std::string::npos);
    EXPECT_NE(o.out.find("semi-Clifford: yes"), std::string::npos);
    json j = run_json({"classify", data("circuits/t.cir")});
    EXPECT_EQ(j["hierarchy_level"], 3);
    EXPECT_EQ(j["semi_clifford"]["value"], true);
    EXPECT_EQ(j["generalized_semi_clifford"]["value"], true);
    EXPECT_EQ(j["ok"], true);
}

TEST(Cli, OptionsMayFollowTheSubcommand) {
    Outcome a = run({"--json", "--kmax", "2", "classify", data("circuits/t.cir")});
    Outcome b = run({"classify", data("circuits/t.cir"), "--json", "--kmax", "2"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(json::parse(a.out)["hierarchy_level"].is_null());
}

TEST(Cli, NormalFormOfDisplayedPair) {
    json j = run_json({"normalform", data("c1c2.mat")});
    EXPECT_EQ(j["mode"], "commuting_set");
    EXPECT_EQ(j["obstruction"], true);
    EXPECT_EQ(j["normalized"].size(), 2u);
}

TEST(Cli, NormalFormOfSingleMatrix) {
    auto path = std::filesystem::temp_directory_path() / "gsc_cli_single.mat";
    {
        std::ofstream f(path);
        f << "2 2\n01\n10\n";
    }
    json j = run_json({"normalform", path.string()});
    EXPECT_EQ(j["mode"], "involution");
    EXPECT_EQ(j["normalized"][0], "11");
    EXPECT_EQ(j["normalized"][1], "01");
    std::filesystem::remove(path);
}

TEST(Cli, ExpandHadamard) {
    json j = run_json({"expand", data("circuits/h.cir")});
    EXPECT_EQ(j["support_size"], 2);
    EXPECT_EQ(j["s"], 1);
    EXPECT_EQ(j["coefficients"][0]["pauli"], "X");
    EXPECT_EQ(j["rep"]["C"][0], "4");
}

TEST(Cli, ExpandRejectsNonClifford) {
    json j = run_json({"expand", data("circuits/t.cir")}, 1);
    EXPECT_EQ(j["ok"], false);
    EXPECT_NE(j["error"].get<std::string>().find("Clifford"), std::string::npos);
}

TEST(Cli, PipelineCertificate) {
    json j = run_json({"pipeline", data("circuits/t.cir")});
    EXPECT_EQ(j["certificate"]["complete"], true);
    EXPECT_EQ(j["certificate"]["kernel_dim"], 1);
}

TEST(Cli, RandomInputsAreReproducible) {
    Outcome a = run({"--json", "--seed", "9", "pipeline", "--random", "3"});
    Outcome b = run({"--json", "--seed", "9", "pipeline", "--random", "3"});
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    Outcome c = run({"--json", "--seed", "10", "pipeline", "--random", "3"});
    EXPECT_NE(a.out, c.out);
}

TEST(Cli, CounterexampleVerdict) {
    json j = run_json({"verify-counterexample"});
    EXPECT_EQ(j["uv_in_c3"], true);
    EXPECT_EQ(j["vu_in_c3"], false);
    EXPECT_EQ(j["vu_witness"]["clifford"], false);
    EXPECT_EQ(j["uv_certificate"]["kernel_dim"], 7);
    EXPECT_EQ(j["uv_certificate"]["pattern_rank"], 128);
    EXPECT_EQ(j["passed"], true);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--kmax", "9", "classify", data("circuits/t.cir")}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, InputErrors) {
    Outcome missing = run({"classify", "/nonexistent.cir"});
    EXPECT_EQ(missing.code, 1);
    EXPECT_NE(missing.err.find("error:"), std::string::npos);
    EXPECT_EQ(run({"classify"}).code, 1);
    EXPECT_EQ(run({"normalform", data("circuits/t.cir")}).code, 1);
}

TEST(Cli, HexEncoding) {
    EXPECT_EQ(gsc::cli::to_hex("1000"), "8");
    EXPECT_EQ(gsc::cli::to_hex("0001"), "1");
    EXPECT_EQ(gsc::cli::to_hex("11111"), "f8");
    EXPECT_EQ(gsc::cli::to_hex(""), "");
}

}  // namespace
