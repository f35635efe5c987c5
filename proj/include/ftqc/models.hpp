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

#include <stdexcept>
#include <string>
#include <string_view>

namespace ftqc {

/// Category of a rejected model evaluation.
enum class ModelErrorKind {
    invalid_distance,
    non_physical_model,
    out_of_range,
    shrinking_growth,
    infeasible,
};

std::string_view to_string(ModelErrorKind kind);

/// Thrown by every closed-form model when its preconditions are violated.
class ModelError : public std::invalid_argument {
   public:
    ModelError(ModelErrorKind kind, const std::string &what);
    ModelErrorKind kind() const noexcept { return kind_; }

   private:
    ModelErrorKind kind_;
};

/// Fitted logical-error parameters of the hardware plus timing.
///
/// Every "lambda" is the suppression factor per +2 code distance and must be
/// strictly greater than one. `tau_b` and `tau_d` are measured in QEC rounds,
/// `w_parity` in seconds per parity-check round.
struct HardwareModel {
    double mu_mem = 3.8e-3;
    double lambda_mem = 10.0;

    double mu_x = 0.0;
    double lambda_x = 10.0;
    double mu_z = 0.0;
    double lambda_z = 10.0;
    double mu_t = 0.0;
    double lambda_t = 10.0;

    double mu_surg = 0.0;
    double lambda_surg = 10.0;

    double tau_b = 0.0;
    double tau_d = 0.0;

    double w_parity = 450e-9;

    void validate() const;
    bool operator==(const HardwareModel &) const = default;
};

enum class PrepForm { linear, exponential };

/// Magic-state preparation error as a function of the preparation distance.
/// The linear form accepts a negative `lambda` (error growing with distance).
struct PrepModel {
    PrepForm form = PrepForm::linear;
    double mu = 1.44e-4;
    double lambda = -2.5e-5;

    void validate() const;
    bool operator==(const PrepModel &) const = default;
};

enum class GrowthForm { zero, memory_like };

/// Error picked up while growing a patch from one distance to a larger one.
struct GrowthModel {
    GrowthForm form = GrowthForm::zero;
    double mu = 0.0;
    double lambda = 10.0;

    void validate() const;
    bool operator==(const GrowthModel &) const = default;
};

/// A distillation protocol: rates, error polynomials and layout footprint.
/// Defaults describe the 15:1 protocol.
struct DistillationProtocol {
    int m_in = 15;
    int n_out = 1;
    int o_cycles = 13;

    double out_cubic_coeff = 35.0;
    double out_cliff_coeff = 7.1;
    double acc_in_coeff = 15.0;
    double acc_cliff_coeff = 356.0;

    int tiles_per_unit = 23;
    int growth_tiles_per_unit = 5;
    int first_level_extra_tiles = 10;
    int routing_per_unit = 5;
    int routing_base = 4;
    // Per-unit tile count of the lowermost level as used by the space model.
    int first_level_unit_tiles = 41;

    // Preparation units attached to each first-level unit, and the number of
    // logical cycles (at the preparation distance) one of them needs per state.
    int prep_units_per_first_level_unit = 3;
    double prep_cycles_per_state = 2.0;

    int upper_level_unit_tiles() const { return tiles_per_unit + growth_tiles_per_unit + routing_per_unit; }

    void validate() const;
    bool operator==(const DistillationProtocol &) const = default;
};

/// Odd and at least 3.
bool is_valid_distance(int d);
void require_distance(int d, std::string_view what);

/// Quantum memory error of a distance-d patch over r rounds.
double mem_error(int d, int rounds, const HardwareModel &hw);

/// Two-patch surgery with a bus of `bus` tiles, resolved by error type.
double clifford_error(int d, int bus, int rounds, const HardwareModel &hw);

/// Surgery error aggregated over types, including buffer and decoder delays.
double surgery_error(int d, int bus, int rounds, const HardwareModel &hw);

double prep_error(int d0, const PrepModel &pm);

double growth_error(int d_from, int d_to, const GrowthModel &gm);

/// 1 - (1 - e_out)(1 - e_grow).
double combine_grow(double e_out, double e_grow);

double distill_output(double e_in, double e_cliff, const DistillationProtocol &proto);

struct Acceptance {
    double raw = 1.0;      // unclamped polynomial value
    double clamped = 1.0;  // in [0, 1]
    bool feasible() const { return raw > 0.0; }
};

Acceptance acceptance_prob(double e_in, double e_cliff, const DistillationProtocol &proto);

double clamp01(double x);

}  // namespace ftqc
