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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ftqc/chain.hpp"
#include "ftqc/circuit.hpp"
#include "ftqc/models.hpp"

namespace ftqc {

/// Everything the heuristic needs to size one architecture.
struct AssemblyConfig {
    CircuitProfile circuit;
    HardwareModel hw;
    PrepModel pm;
    GrowthModel gm;
    DistillationProtocol proto;

    double error_budget = 0.01;  // E, expected number of logical errors allowed
    double beta_target = 1.0;
    int d_max = 101;
    int l_max = 4;
    CliffordModel cliff_model = CliffordModel::memory;
    int bus_len_msf = 0;  // 0: the level's own distance

    void validate() const;
    bool operator==(const AssemblyConfig &) const = default;
};

/// The heuristic's stages, used to attribute infeasibility.
enum class AssemblyStep {
    core_distance = 1,
    msf_budget,
    first_level_distance,
    num_levels,
    refine_distances,
    size_units,
    local_search,
    verify,
};

std::string_view to_string(AssemblyStep s);

class InfeasibleError : public std::runtime_error {
   public:
    InfeasibleError(AssemblyStep step, const std::string &what);
    AssemblyStep step() const noexcept { return step_; }

   private:
    AssemblyStep step_;
};

struct ArchitecturePlan {
    std::vector<LevelSpec> levels;  // L = levels.size()
    int d0 = 3;
    int d_core = 3;
    int d_core_step1 = 3;  // distance chosen by the core-distance step before any later bump

    double k_cycles = 0.0;
    double beta_target = 1.0;
    double beta_achieved = 0.0;

    ChainErrorLedger ledger;
    RateReport rates;
    std::vector<FlowCheck> flow;

    double e_core_total = 0.0;  // (V_idle + V_act) * mem_error(d_core, d_core) at k_cycles
    double e_msf_total = 0.0;   // e_msf * T
    double budget_margin = 0.0;  // E - e_msf_total - e_core_total

    double s_core = 0.0;  // unrounded
    double s_msf = 0.0;
    double s_physical = 0.0;  // ceil(s_core + s_msf)
    double r_seconds = 0.0;

    bool feasible = false;
    std::string reason;
    std::optional<AssemblyStep> failed_step;
    int local_search_moves = 0;

    int num_levels() const { return static_cast<int>(levels.size()); }
    std::vector<int> distances() const;
    std::vector<std::uint64_t> units() const;
    ChainConfig chain(const AssemblyConfig &cfg) const;
};

/// Makespan assumed before unit sizing: max(beta * T, T_depth).
double step1_makespan(const AssemblyConfig &cfg);

/// Smallest odd d_core whose core error at the step-1 makespan fits in E.
int choose_core_distance(const AssemblyConfig &cfg);

struct MsfBudget {
    double e_core = 0.0;  // core error at the step-1 makespan
    double budget = 0.0;  // (E - e_core) / T, per-state error allowed for the factory
    bool distillation_free = false;
    int d0_free = 3;        // best preparation distance if no distillation is used
    double e_free = 1.0;    // its error after growth to d_core
};

MsfBudget msf_budget(const AssemblyConfig &cfg, int d_core);

/// Odd d in [3, d_max] minimizing the first-level output error with d0 = d and
/// a positive acceptance probability; ties go to the smaller distance.
int choose_first_level_distance(const AssemblyConfig &cfg);

/// Smallest L whose ideal-Clifford chain from the first level reaches the budget.
int choose_num_levels(const AssemblyConfig &cfg, double budget, int d_first);

/// Level-by-level smallest distances (d0 tied to d_1) meeting the budget with
/// the given core error. Levels [0, fixed.size()) are held at `fixed`.
std::optional<std::vector<int>> refine_distances(const AssemblyConfig &cfg, int num_levels, int d_core,
                                                 double e_core, const std::vector<int> &fixed = {});

/// (2d_core^2 - 1)(2Q + sqrt(8Q) + 29) + first level + upper levels, rounded up.
double space_cost(const ArchitecturePlan &plan, const AssemblyConfig &cfg);

/// K * W * d_core.
double runtime(const ArchitecturePlan &plan, const HardwareModel &hw);

/// Evaluates a chain from scratch: ledger, unit sizing (unless `keep_units`),
/// rates, makespan, budget, steady flow and costs.
ArchitecturePlan evaluate_plan(const AssemblyConfig &cfg, const ChainConfig &chain, bool keep_units = false);

/// First-improvement descent over +2 distance moves (levels, then the core).
ArchitecturePlan local_search(const ArchitecturePlan &plan, const AssemblyConfig &cfg);

/// Runs the whole heuristic. Infeasibility is returned in the plan, not thrown;
/// invalid configurations throw ModelError.
ArchitecturePlan assemble(const AssemblyConfig &cfg);

/// e_msf * T + e_core <= E.
bool within_budget(double e_msf, double e_core, const AssemblyConfig &cfg);

}  // namespace ftqc
