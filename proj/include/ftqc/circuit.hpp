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
#include <vector>

#include "ftqc/models.hpp"

namespace ftqc {

/// A compiled circuit as seen by the assembler.
///
/// `q_per_gate`, when present, lists the logical data qubits touched by each
/// pi/8 rotation. `t_per_step` is accepted metadata (rotations per parallel
/// step) and is only validated.
struct CircuitProfile {
    std::uint64_t t_count = 1;
    std::uint64_t t_depth = 1;
    std::uint64_t q_logical = 1;
    double alpha = 0.1;
    std::vector<std::uint32_t> q_per_gate;
    std::vector<std::uint64_t> t_per_step;

    void validate() const;

    /// Mean qubits per gate used when `q_per_gate` is absent: max(1, round(alpha * Q)).
    double default_gate_qubits() const;

    /// Sum of q_i over all gates (exact when per-gate data is present).
    double total_gate_qubits() const;

    bool operator==(const CircuitProfile &) const = default;
};

struct VolumeReport {
    double v_idle = 0.0;  // tile * cycles
    double v_act = 0.0;   // tile * cycles
    double k_cycles = 0.0;
};

/// 2Q + sqrt(8Q) + constant (tiles of the core's memory fabric plus extras).
double core_tile_count(std::uint64_t q_logical, double constant);

inline constexpr double kActiveVolumeConstant = 26.0;
inline constexpr double kCoreSpaceConstant = 29.0;

/// K * Q - sum q_i, floored at zero. Throws when k < t_depth.
double idle_volume(const CircuitProfile &c, double k_cycles);

/// (2Q + sqrt(8Q) + 26) * alpha * T.
double active_volume(const CircuitProfile &c);

VolumeReport volumes(const CircuitProfile &c, double k_cycles);

/// Expected number of core errors (V_idle + V_act) * e_mem_core. Not a probability:
/// it is compared directly against the error budget.
double core_error(const CircuitProfile &c, double k_cycles, double e_mem_core);

/// Audit variant: V_idle * e_mem + sum over gates of the surgery model at
/// (d_core, bus, r = d_core).
double core_error_per_gate_surgery(const CircuitProfile &c, double k_cycles, int d_core, int bus,
                                   const HardwareModel &hw);

/// Audit variant: V_idle * e_mem + T * e_cliff_core with the resolved Clifford model.
double core_error_clifford_average(const CircuitProfile &c, double k_cycles, int d_core, int bus,
                                   const HardwareModel &hw);

}  // namespace ftqc
