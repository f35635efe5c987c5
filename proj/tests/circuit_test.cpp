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

#include <cmath>

#include "gtest/gtest.h"

using namespace ftqc;

namespace {

CircuitProfile million_t() {
    CircuitProfile c;
    c.t_count = 1'000'000;
    c.t_depth = 200'000;
    c.q_logical = 1'000;
    c.alpha = 0.1;
    return c;
}

}  // namespace

TEST(circuit, validation) {
    EXPECT_NO_THROW(million_t().validate());
    auto c = million_t();
    c.t_depth = c.t_count + 1;
    EXPECT_THROW(c.validate(), ModelError);
    c = million_t();
    c.alpha = 0.0;
    EXPECT_THROW(c.validate(), ModelError);
    c = million_t();
    c.q_per_gate = {1, 2, 3};
    EXPECT_THROW(c.validate(), ModelError);
}

TEST(circuit, per_step_counts_must_sum) {
    CircuitProfile c;
    c.t_count = 5;
    c.t_depth = 2;
    c.q_logical = 4;
    c.t_per_step = {3, 2};
    EXPECT_NO_THROW(c.validate());
    c.t_per_step = {3, 3};
    EXPECT_THROW(c.validate(), ModelError);
}

TEST(circuit, core_tile_count) {
    EXPECT_NEAR(core_tile_count(1000, kActiveVolumeConstant), 2000 + std::sqrt(8000.0) + 26, 1e-9);
    EXPECT_NEAR(core_tile_count(2, 0.0), 8.0, 1e-12);
}

TEST(volumes, serial_schedule) {
    const auto c = million_t();
    // K * Q - T * round(0.1 * 1000) = 1e9 - 1e8
    EXPECT_DOUBLE_EQ(idle_volume(c, 1e6), 9e8);
    // (2000 + sqrt(8000) + 26) * 0.1 * 1e6
    EXPECT_NEAR(active_volume(c), 2.1154427191e8, 1.0);
}

TEST(volumes, idle_floor_and_makespan_check) {
    auto c = million_t();
    c.alpha = 1.0;
    EXPECT_EQ(idle_volume(c, 2e5), 0.0);
    EXPECT_THROW(idle_volume(c, 1e5), ModelError);
}

TEST(volumes, per_gate_qubits_are_exact) {
    CircuitProfile c;
    c.t_count = 3;
    c.t_depth = 3;
    c.q_logical = 10;
    c.q_per_gate = {1, 4, 7};
    EXPECT_DOUBLE_EQ(idle_volume(c, 5), 50.0 - 12.0);
}

TEST(volumes, tiny_circuit_uses_at_least_one_qubit_per_gate) {
    CircuitProfile c;
    c.t_count = 4;
    c.t_depth = 4;
    c.q_logical = 2;
    c.alpha = 0.1;
    EXPECT_EQ(c.default_gate_qubits(), 1.0);
    EXPECT_DOUBLE_EQ(idle_volume(c, 4), 8.0 - 4.0);
}

TEST(core_error, serial_million_t_circuit) {
    // (9e8 + 2.1154427e8) * 3.8e-3 * 23^2 * 1e-12
    const double e_mem = 3.8e-3 * 23 * 23 * 1e-12;
    EXPECT_NEAR(core_error(million_t(), 1e6, e_mem), 2.2344263e-3, 1e-9);
}

TEST(core_error, rejects_non_probability) { EXPECT_THROW(core_error(million_t(), 1e6, 1.5), ModelError); }

TEST(core_error, audit_paths_reduce_to_idle_term_without_surgery_errors) {
    HardwareModel hw;
    const auto c = million_t();
    const double idle = idle_volume(c, 1e6) * mem_error(23, 23, hw);
    EXPECT_DOUBLE_EQ(core_error_per_gate_surgery(c, 1e6, 23, 23, hw), idle);
    EXPECT_DOUBLE_EQ(core_error_clifford_average(c, 1e6, 23, 23, hw), idle);
}
