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

#include "ftqc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ftqc {

void CircuitProfile::validate() const {
    if (t_count < 1) throw ModelError(ModelErrorKind::out_of_range, "t_count must be >= 1");
    if (t_depth < 1 || t_depth > t_count) {
        throw ModelError(ModelErrorKind::out_of_range, "t_depth must satisfy 1 <= t_depth <= t_count");
    }
    if (q_logical < 1) throw ModelError(ModelErrorKind::out_of_range, "q_logical must be >= 1");
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw ModelError(ModelErrorKind::out_of_range, "alpha must lie in (0, 1]");
    }
    if (!q_per_gate.empty()) {
        if (q_per_gate.size() != t_count) {
            throw ModelError(ModelErrorKind::out_of_range,
                             "q_per_gate has " + std::to_string(q_per_gate.size()) + " entries, expected t_count");
        }
        if (std::any_of(q_per_gate.begin(), q_per_gate.end(), [](std::uint32_t q) { return q < 1; })) {
            throw ModelError(ModelErrorKind::out_of_range, "every q_per_gate entry must be >= 1");
        }
    }
    if (!t_per_step.empty()) {
        if (t_per_step.size() != t_depth) {
            throw ModelError(ModelErrorKind::out_of_range, "t_per_step must have t_depth entries");
        }
        const auto sum = std::accumulate(t_per_step.begin(), t_per_step.end(), std::uint64_t{0});
        if (sum != t_count) throw ModelError(ModelErrorKind::out_of_range, "t_per_step must sum to t_count");
    }
}

double CircuitProfile::default_gate_qubits() const {
    return std::max(1.0, std::round(alpha * static_cast<double>(q_logical)));
}

double CircuitProfile::total_gate_qubits() const {
    if (!q_per_gate.empty()) {
        return std::accumulate(q_per_gate.begin(), q_per_gate.end(), 0.0,
                               [](double acc, std::uint32_t q) { return acc + q; });
    }
    return default_gate_qubits() * static_cast<double>(t_count);
}

double core_tile_count(std::uint64_t q_logical, double constant) {
    const double q = static_cast<double>(q_logical);
    return 2.0 * q + std::sqrt(8.0 * q) + constant;
}

double idle_volume(const CircuitProfile &c, double k_cycles) {
    if (!(k_cycles >= static_cast<double>(c.t_depth))) {
        throw ModelError(ModelErrorKind::out_of_range, "makespan K must be >= t_depth");
    }
    const double v = k_cycles * static_cast<double>(c.q_logical) - c.total_gate_qubits();
    return std::max(0.0, v);
}

double active_volume(const CircuitProfile &c) {
    return core_tile_count(c.q_logical, kActiveVolumeConstant) * c.alpha * static_cast<double>(c.t_count);
}

VolumeReport volumes(const CircuitProfile &c, double k_cycles) {
    return VolumeReport{idle_volume(c, k_cycles), active_volume(c), k_cycles};
}

double core_error(const CircuitProfile &c, double k_cycles, double e_mem_core) {
    if (!(e_mem_core >= 0.0 && e_mem_core <= 1.0)) {
        throw ModelError(ModelErrorKind::out_of_range, "e_mem_core must lie in [0, 1]");
    }
    const auto v = volumes(c, k_cycles);
    return (v.v_idle + v.v_act) * e_mem_core;
}

double core_error_per_gate_surgery(const CircuitProfile &c, double k_cycles, int d_core, int bus,
                                   const HardwareModel &hw) {
    const double e_mem = mem_error(d_core, d_core, hw);
    return idle_volume(c, k_cycles) * e_mem +
           static_cast<double>(c.t_count) * surgery_error(d_core, bus, d_core, hw);
}

double core_error_clifford_average(const CircuitProfile &c, double k_cycles, int d_core, int bus,
                                   const HardwareModel &hw) {
    const double e_mem = mem_error(d_core, d_core, hw);
    return idle_volume(c, k_cycles) * e_mem +
           static_cast<double>(c.t_count) * clifford_error(d_core, bus, d_core, hw);
}

}  // namespace ftqc
