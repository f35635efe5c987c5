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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftqc/assembler.hpp"

namespace ftqc {

/// lo..hi inclusive, `points` values, log- or linearly spaced.
struct BetaGrid {
    double lo = 0.2;
    double hi = 10.0;
    int points = 16;
    bool log_scale = true;

    void validate() const;
    std::vector<double> values() const;
    /// Step used when the sweep extends past `hi`: the grid ratio (log) or
    /// hi/lo spread per step (linear); 1.25 for a one-point grid.
    double extension_ratio() const;

    bool operator==(const BetaGrid &) const = default;
};

struct CircuitPoint {
    std::uint64_t t_count = 1;
    std::uint64_t q_logical = 1;
    bool operator==(const CircuitPoint &) const = default;
};

/// Memory fit plus a distance-independent preparation error.
struct HardwarePoint {
    double lambda_mem = 10.0;
    double mu_mem = 3.8e-3;
    double e_prep = 1e-3;
    bool operator==(const HardwarePoint &) const = default;
};

struct SweepSpec {
    AssemblyConfig base;
    std::vector<double> betas;  // empty: BetaGrid{} defaults
    bool auto_extend = true;    // keep raising beta until every level has one unit
    int max_extensions = 200;
    double extension_ratio = 0.0;  // 0: derived from the grid
    std::vector<CircuitPoint> circuit_grid;
    std::vector<HardwarePoint> hardware_grid;
    double t_depth_fraction = 0.2;  // T_depth = ceil(fraction * T) for grid cells

    void validate() const;
};

struct ParetoPoint {
    double beta_target = 0.0;
    double beta_achieved = 0.0;
    double s_physical = 0.0;
    double r_seconds = 0.0;
    std::size_t plan_id = 0;  // index into the sweep's point list
    bool feasible = false;
    bool dominated = false;
    bool extension = false;  // added past the configured grid
    std::string reason;
    ArchitecturePlan plan;
};

class SweepError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// True when a feasible plan has every level at a single unit (vacuous for L = 0).
bool single_unit_plan(const ArchitecturePlan &plan);

/// One point per beta, ordered by beta, with dominance marked. Throws
/// SweepError when no beta yields a feasible plan.
std::vector<ParetoPoint> beta_sweep(const SweepSpec &spec);

/// Marks `dominated` on every point (infeasible points count as dominated) and
/// returns the non-dominated feasible subset sorted by runtime ascending.
std::vector<ParetoPoint> pareto_filter(std::vector<ParetoPoint> &points);

struct GridCell {
    std::size_t index = 0;
    std::size_t circuit_index = 0;
    std::size_t hardware_index = 0;
    AssemblyConfig config;
    std::vector<ParetoPoint> points;
    std::vector<ParetoPoint> frontier;
    std::string error;  // non-empty when the cell failed
};

/// Cartesian product circuit_grid x hardware_grid (either may be absent).
std::vector<AssemblyConfig> grid_configs(const SweepSpec &spec);

/// Runs beta_sweep per cell on up to `threads` workers (0: sweep_threads()).
/// Cells come back in grid order whatever the scheduling.
std::vector<GridCell> grid_sweep(const SweepSpec &spec, unsigned threads = 0);

/// FTQC_ASSEMBLER_THREADS if set and positive, else the hardware concurrency.
unsigned sweep_threads();

/// Spread of T and Q at the given base hardware.
SweepSpec fig1a_spec(const AssemblyConfig &base);
/// Memory suppression versus preparation error at T = 1e12, Q = 100.
SweepSpec fig1b_spec(const AssemblyConfig &base);
/// Single-instance space/time trade-off.
SweepSpec fig4_spec(const AssemblyConfig &base);

}  // namespace ftqc
