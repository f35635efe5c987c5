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

#include "ftqc/config.hpp"

#include <sstream>
#include <string>

#include "ftqc/assembler.hpp"
#include "ftqc/report.hpp"
#include "ftqc/sweep.hpp"
#include "gtest/gtest.h"

using namespace ftqc;

namespace {

std::string error_of(std::string_view text) {
    try {
        parse_config(text);
    } catch (const ConfigError &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(presets, known_names) {
    EXPECT_EQ(preset_names(), (std::vector<std::string>{"paper-2024", "fig-1b"}));
    const auto a = preset_config("paper-2024").assembly;
    EXPECT_EQ(a.circuit.t_count, 1'000'000u);
    EXPECT_EQ(a.circuit.q_logical, 1'000u);
    EXPECT_EQ(a.hw.mu_mem, 3.8e-3);
    EXPECT_EQ(a.error_budget, 0.01);
    const auto b = preset_config("fig-1b").assembly;
    EXPECT_EQ(b.circuit.q_logical, 100u);
    EXPECT_EQ(b.pm.lambda, 0.0);
    EXPECT_THROW(preset_config("nope"), ConfigError);
}

TEST(parse_config, preset_with_override) {
    const auto rc = parse_config(std::string_view(R"({"preset": "paper-2024", "optimizer": {"beta": 4}})"));
    EXPECT_EQ(rc.assembly.beta_target, 4.0);
    EXPECT_EQ(rc.assembly.circuit.t_count, 1'000'000u);
}

TEST(parse_config, empty_document_lists_required_fields) {
    const auto msg = error_of("{}");
    for (const char *field : {"mu_mem", "lambda_mem", "w_parity", "t_count", "t_depth", "q_logical", "error_budget"}) {
        EXPECT_NE(msg.find(field), std::string::npos) << field << " missing from: " << msg;
    }
}

TEST(parse_config, range_errors_carry_paths) {
    const auto msg = error_of(R"({"preset": "paper-2024", "optimizer": {"error_budget": -0.5}})");
    EXPECT_NE(msg.find("/optimizer/error_budget"), std::string::npos) << msg;
}

TEST(parse_config, unknown_keys_are_rejected) {
    const auto msg = error_of(R"({"preset": "paper-2024", "hardware": {"mu_mme": 1e-3}})");
    EXPECT_NE(msg.find("/hardware/mu_mme"), std::string::npos) << msg;
    EXPECT_NE(msg.find("unknown key"), std::string::npos) << msg;
}

TEST(parse_config, bad_json_and_types) {
    EXPECT_THROW(parse_config(std::string_view("{")), ConfigError);
    EXPECT_FALSE(error_of(R"({"preset": "paper-2024", "circuit": {"t_count": "many"}})").empty());
}

TEST(parse_config, round_trip_through_echo) {
    auto rc = preset_config("paper-2024");
    rc.assembly.beta_target = 2.7182818284590451;
    rc.assembly.hw.mu_mem = 1.2345678901234567e-3;
    rc.beta_grid = BetaGrid{0.5, 8, 9, false};
    const auto back = parse_config(config_to_json(rc));
    EXPECT_EQ(back.assembly, rc.assembly);
    EXPECT_EQ(back.beta_grid, rc.beta_grid);
}

TEST(parse_config, accepts_a_previous_report) {
    const auto rc = preset_config("paper-2024");
    const auto plan = assemble(rc.assembly);
    const auto again = parse_config(std::string_view(assemble_report(rc, plan).dump()));
    EXPECT_EQ(again.assembly, rc.assembly);
    const auto replan = assemble(again.assembly);
    EXPECT_EQ(replan.s_physical, plan.s_physical);
}

TEST(beta_grid_text, parses_and_rejects) {
    EXPECT_EQ(parse_beta_grid("0.2:10:log"), (BetaGrid{0.2, 10, 16, true}));
    EXPECT_EQ(parse_beta_grid("1:5:linear:5"), (BetaGrid{1, 5, 5, false}));
    EXPECT_THROW(parse_beta_grid("1:5"), ConfigError);
    EXPECT_THROW(parse_beta_grid("1:5:cubic"), ConfigError);
    EXPECT_THROW(parse_beta_grid("x:5:log"), ConfigError);
}

TEST(report, csv_header_golden) {
    EXPECT_EQ(csv_header(),
              "cell,t_count,q_logical,lambda_mem,mu_mem,mu_prep,lambda_prep,beta_target,beta_achieved,"
              "s_physical,r_seconds,levels,d_core,distances,units,feasible,pareto");
}

TEST(report, csv_rows_use_crlf_and_semicolons) {
    const auto rc = preset_config("paper-2024");
    ParetoPoint p;
    p.plan = assemble(rc.assembly);
    p.feasible = true;
    p.beta_target = 1;
    p.beta_achieved = p.plan.beta_achieved;
    p.s_physical = p.plan.s_physical;
    p.r_seconds = p.plan.r_seconds;
    std::ostringstream os;
    write_csv_rows(os, 0, rc.assembly, {p});
    const auto row = os.str();
    EXPECT_EQ(row.substr(row.size() - 2), "\r\n");
    EXPECT_NE(row.find(",7;19,65;12,"), std::string::npos) << row;
}

TEST(report, number_formatting) {
    EXPECT_EQ(round6(1.23456789e-7), 1.23457e-7);
    EXPECT_EQ(sci6(2.2344262e-3), "2.23443e-03");
}

TEST(report, plan_json_has_ledger) {
    const auto rc = preset_config("paper-2024");
    const auto j = plan_to_json(assemble(rc.assembly), rc.assembly);
    EXPECT_TRUE(j.contains("ledger"));
    EXPECT_TRUE(j.contains("rates"));
    EXPECT_EQ(assemble_report(rc, assemble(rc.assembly))["schema"], kReportSchema);
}
