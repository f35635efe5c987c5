// Copyright 2026 The ftqc-assembler Authors
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

// Drives the installed binary end to end and checks exit codes and files.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
    auto dir = fs::temp_directory_path() / ("ftqc-cli-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run(const std::string &args) {
    const std::string cmd = std::string(FTQC_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(cli, assemble_preset_writes_report) {
    const auto dir = scratch("assemble");
    ASSERT_EQ(run("assemble --preset paper-2024 --out " + dir.string()), 0);
    const auto j = nlohmann::json::parse(slurp(dir / "report.json"));
    EXPECT_EQ(j["plan"]["d_core"], 23);
    // Feeding the report back reproduces the plan.
    const auto again = scratch("assemble-again");
    ASSERT_EQ(run("assemble --config " + (dir / "report.json").string() + " --out " + again.string()), 0);
    EXPECT_EQ(nlohmann::json::parse(slurp(again / "report.json"))["plan"], j["plan"]);
}

TEST(cli, invalid_inputs_exit_two) {
    const auto dir = scratch("invalid");
    EXPECT_EQ(run("assemble"), 2);
    EXPECT_EQ(run("bogus"), 2);
    EXPECT_EQ(run("assemble --preset paper-2024 --beta -1 --out " + dir.string()), 2);
    std::ofstream(dir / "empty.json") << "{}";
    EXPECT_EQ(run("assemble --config " + (dir / "empty.json").string()), 2);
    std::ofstream(dir / "typo.json") << R"({"preset": "paper-2024", "optimzer": {}})";
    EXPECT_EQ(run("assemble --config " + (dir / "typo.json").string()), 2);
}

TEST(cli, infeasible_exits_three) {
    const auto dir = scratch("infeasible");
    std::ofstream(dir / "tight.json") << R"({"preset": "paper-2024", "optimizer": {"error_budget": 1e-45}})";
    EXPECT_EQ(run("assemble --config " + (dir / "tight.json").string() + " --out " + dir.string()), 3);
    EXPECT_TRUE(fs::exists(dir / "report.json"));
}

TEST(cli, sweep_writes_csv) {
    const auto dir = scratch("sweep");
    ASSERT_EQ(run("sweep --preset paper-2024 --beta-grid 0.5:4:log:4 --format json,csv --out " + dir.string()), 0);
    const auto csv = slurp(dir / "sweep.csv");
    EXPECT_EQ(csv.rfind("cell,t_count,", 0), 0u);
    EXPECT_TRUE(fs::exists(dir / "sweep.json"));
}
