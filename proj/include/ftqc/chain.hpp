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
#include <string>
#include <string_view>
#include <vector>

#include "ftqc/circuit.hpp"
#include "ftqc/models.hpp"

namespace ftqc {

/// Which closed form supplies the Clifford error inside a distillation unit.
enum class CliffordModel {
    memory,    // e_cliff = mem_error(d, d)
    clifford,  // per-type surgery model at (d, bus, r = d)
    surgery,   // aggregated surgery model with delays at (d, bus, r = d)
};

std::string_view to_string(CliffordModel m);
std::optional<CliffordModel> parse_clifford_model(std::string_view s);

struct LevelSpec {
    int index = 1;  // 1..L
    int distance = 3;
    std::uint64_t units = 1;

    bool operator==(const LevelSpec &) const = default;
};

/// Distances (and optionally unit counts) of a factory feeding a core.
struct ChainConfig {
    int d0 = 3;
    std::vector<LevelSpec> levels;
    int d_core = 3;
    int bus_len_msf = 0;  // 0 means "use the level's own distance"
    CliffordModel cliff_model = CliffordModel::memory;

    /// Throws ModelError unless d0 <= d_1 <= ... <= d_L <= d_core, all odd >= 3.
    void validate() const;

    std::vector<int> distances() const;
    std::vector<std::uint64_t> units() const;
};

/// Clifford error rate of a distillation unit operating at distance d.
double msf_clifford_error(int d, int bus_len, CliffordModel model, const HardwareModel &hw);

struct LevelErrors {
    int index = 1;
    int distance = 3;
    double e_in = 0.0;
    double e_cliff = 0.0;
    double e_out = 0.0;
    double e_grow = 0.0;  // growth after this level, towards the next distance
    double p_accept = 1.0;
    double p_accept_raw = 1.0;
};

struct ChainErrorLedger {
    double e_prep = 0.0;
    double e_grow_prep = 0.0;  // growth d0 -> d_core, only when there are no levels
    std::vector<LevelErrors> levels;
    double e_msf = 0.0;
    bool feasible = true;
    std::string reason;
};

/// Error recursion preparation -> levels -> growth -> core. With no levels the
/// core consumes prepared states grown from d0 to d_core. A level whose
/// raw acceptance probability is <= 0 marks the ledger infeasible (no throw).
ChainErrorLedger chain_errors(const ChainConfig &cfg, const HardwareModel &hw, const PrepModel &pm,
                              const GrowthModel &gm, const DistillationProtocol &proto);

/// One magic state per logical cycle of the core: 1 / (W * d_core).
double serial_consumption_rate(int d_core, const HardwareModel &hw);

/// Peak demand of the core: (T / T_depth) / (W * d_core) states per second.
double core_consumption_rate(const CircuitProfile &c, int d_core, const HardwareModel &hw);

/// N * P / (W * d * (O + N)) for a single unit. Throws ModelError(infeasible) when P <= 0.
double unit_production_rate(int d, double e_in, double e_cliff, const HardwareModel &hw,
                            const DistillationProtocol &proto);

/// N * p / (W * d * (O + N)) for an already-known acceptance probability p in [0, 1].
double unit_production_rate_at(int d, double p_accept, const HardwareModel &hw, const DistillationProtocol &proto);

/// M / (W * d * (O + N)) for a single unit running at full speed.
double unit_consumption_rate(int d, const HardwareModel &hw, const DistillationProtocol &proto);

/// Preparation throughput attached to one first-level unit, states per second.
double prep_rate_per_first_level_unit(int d0, const HardwareModel &hw, const DistillationProtocol &proto);

/// ceil(demand / (beta * single_production)), at least 1. Throws ModelError(infeasible)
/// when the single-unit production is zero but demand is positive.
std::uint64_t required_units(double demand, double single_production, double beta);

struct LevelRates {
    int index = 1;
    double single_production = 0.0;  // effective, after any preparation cap
    double production = 0.0;         // D_l = u_l * single_production
    double consumption = 0.0;        // C_l at full speed, u_l * M / (W d_l (O + N))
    double target_output = 0.0;      // rate this level must deliver
    double required_input = 0.0;     // input rate needed to deliver target_output
    double delivered = 0.0;          // what it actually delivers given the levels below
};

struct RateReport {
    double c_core = 0.0;       // peak core demand
    double serial_rate = 0.0;  // one state per core cycle
    double target_core = 0.0;  // min(serial / beta, c_core); c_core when there are no levels
    double d0_rate = 0.0;      // preparation supply
    double d0_rate_per_unit = 0.0;  // preparation supply attached to one first-level unit
    std::vector<LevelRates> levels;
    double delivered = 0.0;
    double beta_achieved = 0.0;  // serial_rate / delivered
};

/// Rates of a fully specified chain (units included) at the given slowdown target.
RateReport chain_rates(const ChainConfig &cfg, const ChainErrorLedger &ledger, const CircuitProfile &c,
                       double beta, const HardwareModel &hw, const DistillationProtocol &proto);

/// Top-down unit counts for the chain's distances. The top level meets
/// serial / beta; each lower level supplies only what the level above needs to
/// hit that target (the slowdown re-adjusted to the achieved production).
std::vector<std::uint64_t> size_units(const ChainConfig &cfg, const ChainErrorLedger &ledger,
                                      const CircuitProfile &c, double beta, const HardwareModel &hw,
                                      const DistillationProtocol &proto);

struct FlowCheck {
    int level = 1;        // consumer level l in 1..L+1 (L+1 is the core)
    double supply = 0.0;  // D_{l-1}
    double demand = 0.0;  // input rate level l needs for the plan's target
    bool supply_meets_demand = false;
    bool balanced = false;  // surplus below one supplier unit's production
};

std::vector<FlowCheck> steady_flow_check(const ChainConfig &cfg, const RateReport &rates);

bool flow_satisfied(const std::vector<FlowCheck> &checks);

}  // namespace ftqc
