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

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ftqc/config.hpp"
#include "ftqc/sweep.hpp"

namespace ftqc {

/// Rounds to six significant digits (the precision used for reported probabilities).
double round6(double x);

/// "%.5e".
std::string sci6(double x);

nlohmann::json plan_to_json(const ArchitecturePlan &plan, const AssemblyConfig &cfg);

nlohmann::json assemble_report(const RunConfig &rc, const ArchitecturePlan &plan);
nlohmann::json sweep_report(const RunConfig &rc, const std::vector<ParetoPoint> &points);
nlohmann::json grid_report(const RunConfig &rc, const std::string &figure, const std::vector<GridCell> &cells);

/// Fixed, versioned column list of the CSV tables.
const std::vector<std::string> &csv_columns();
std::string csv_header();

/// One RFC-4180 row per point; `cell` identifies the grid cell (0 for a plain sweep).
void write_csv_rows(std::ostream &os, std::size_t cell, const AssemblyConfig &cfg,
                    const std::vector<ParetoPoint> &points);

/// One-screen text summary: L, distances, units, S, R, budget margin.
std::string summary_table(const ArchitecturePlan &plan, const AssemblyConfig &cfg);
std::string sweep_summary(const std::vector<ParetoPoint> &points);

}  // namespace ftqc
