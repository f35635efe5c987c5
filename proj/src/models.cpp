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

#include "ftqc/models.hpp"

#include <algorithm>
#include <cmath>

namespace ftqc {

std::string_view to_string(ModelErrorKind kind) {
    switch (kind) {
        case ModelErrorKind::invalid_distance:
            return "invalid-distance";
        case ModelErrorKind::non_physical_model:
            return "non-physical-model";
        case ModelErrorKind::out_of_range:
            return "out-of-range";
        case ModelErrorKind::shrinking_growth:
            return "shrinking-growth";
        case ModelErrorKind::infeasible:
            return "infeasible";
    }
    return "unknown";
}

ModelError::ModelError(ModelErrorKind kind, const std::string &what)
    : std::invalid_argument(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

namespace {

void require_suppression(double lambda, std::string_view name) {
    if (!(lambda > 1.0) || !std::isfinite(lambda)) {
        throw ModelError(ModelErrorKind::non_physical_model,
                         std::string(name) + " must be > 1, got " + std::to_string(lambda));
    }
}

void require_nonneg(double x, std::string_view name) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw ModelError(ModelErrorKind::non_physical_model,
                         std::string(name) + " must be >= 0, got " + std::to_string(x));
    }
}

void require_probability(double p, std::string_view name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ModelError(ModelErrorKind::out_of_range,
                         std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
    }
}

// Lambda^(-(x+1)/2)
double suppression(double lambda, double x) { return std::pow(lambda, -(x + 1.0) / 2.0); }

}  // namespace

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

bool is_valid_distance(int d) { return d >= 3 && d % 2 == 1; }

void require_distance(int d, std::string_view what) {
    if (!is_valid_distance(d)) {
        throw ModelError(ModelErrorKind::invalid_distance,
                         std::string(what) + " must be odd and >= 3, got " + std::to_string(d));
    }
}

void HardwareModel::validate() const {
    require_nonneg(mu_mem, "mu_mem");
    require_nonneg(mu_x, "mu_x");
    require_nonneg(mu_z, "mu_z");
    require_nonneg(mu_t, "mu_t");
    require_nonneg(mu_surg, "mu_surg");
    require_suppression(lambda_mem, "lambda_mem");
    require_suppression(lambda_x, "lambda_x");
    require_suppression(lambda_z, "lambda_z");
    require_suppression(lambda_t, "lambda_t");
    require_suppression(lambda_surg, "lambda_surg");
    require_nonneg(tau_b, "tau_b");
    require_nonneg(tau_d, "tau_d");
    if (!(w_parity > 0.0) || !std::isfinite(w_parity)) {
        throw ModelError(ModelErrorKind::non_physical_model, "w_parity must be > 0");
    }
}

void PrepModel::validate() const {
    require_nonneg(mu, "prep mu");
    if (!std::isfinite(lambda)) {
        throw ModelError(ModelErrorKind::non_physical_model, "prep lambda must be finite");
    }
    if (form == PrepForm::exponential) {
        require_suppression(lambda, "prep lambda (exponential form)");
    }
}

void GrowthModel::validate() const {
    require_nonneg(mu, "growth mu");
    if (form == GrowthForm::memory_like) {
        require_suppression(lambda, "growth lambda");
    }
}

void DistillationProtocol::validate() const {
    if (n_out < 1 || m_in <= n_out) {
        throw ModelError(ModelErrorKind::non_physical_model, "protocol requires m_in > n_out >= 1");
    }
    if (o_cycles < 1) {
        throw ModelError(ModelErrorKind::non_physical_model, "protocol requires o_cycles >= 1");
    }
    require_nonneg(out_cubic_coeff, "out_cubic_coeff");
    require_nonneg(out_cliff_coeff, "out_cliff_coeff");
    require_nonneg(acc_in_coeff, "acc_in_coeff");
    require_nonneg(acc_cliff_coeff, "acc_cliff_coeff");
    if (tiles_per_unit < 0 || growth_tiles_per_unit < 0 || first_level_extra_tiles < 0 ||
        routing_per_unit < 0 || routing_base < 0 || first_level_unit_tiles < 0) {
        throw ModelError(ModelErrorKind::non_physical_model, "footprint constants must be >= 0");
    }
    if (prep_units_per_first_level_unit < 1 || !(prep_cycles_per_state > 0.0)) {
        throw ModelError(ModelErrorKind::non_physical_model,
                         "preparation throughput requires >= 1 unit and > 0 cycles per state");
    }
}

double mem_error(int d, int rounds, const HardwareModel &hw) {
    require_distance(d, "memory distance");
    if (rounds < 1) throw ModelError(ModelErrorKind::out_of_range, "rounds must be >= 1");
    require_suppression(hw.lambda_mem, "lambda_mem");
    return std::min(1.0, hw.mu_mem * d * rounds * suppression(hw.lambda_mem, d));
}

double clifford_error(int d, int bus, int rounds, const HardwareModel &hw) {
    require_distance(d, "surgery distance");
    if (bus < 1) throw ModelError(ModelErrorKind::out_of_range, "bus length must be >= 1");
    if (rounds < 1) throw ModelError(ModelErrorKind::out_of_range, "rounds must be >= 1");
    require_suppression(hw.lambda_x, "lambda_x");
    require_suppression(hw.lambda_z, "lambda_z");
    require_suppression(hw.lambda_t, "lambda_t");
    const double space_x = hw.mu_x * (2.0 * d + bus) * rounds * suppression(hw.lambda_x, d);
    const double space_z = hw.mu_z * d * suppression(hw.lambda_z, d);
    const double time_like = hw.mu_t * d * bus * suppression(hw.lambda_t, rounds);
    return clamp01(space_x + space_z + time_like);
}

double surgery_error(int d, int bus, int rounds, const HardwareModel &hw) {
    require_distance(d, "surgery distance");
    if (bus < 1) throw ModelError(ModelErrorKind::out_of_range, "bus length must be >= 1");
    if (rounds < 1) throw ModelError(ModelErrorKind::out_of_range, "rounds must be >= 1");
    require_suppression(hw.lambda_surg, "lambda_surg");
    require_suppression(hw.lambda_t, "lambda_t");
    const double area = d * (2.0 * rounds + hw.tau_b + hw.tau_d + 1.0) + static_cast<double>(bus) * rounds;
    const double space_like = hw.mu_surg * area * suppression(hw.lambda_surg, d);
    const double time_like = hw.mu_t * d * bus * suppression(hw.lambda_t, rounds);
    return clamp01(space_like + time_like);
}

double prep_error(int d0, const PrepModel &pm) {
    require_distance(d0, "preparation distance");
    switch (pm.form) {
        case PrepForm::linear:
            return clamp01(pm.mu - pm.lambda * d0);
        case PrepForm::exponential:
            require_suppression(pm.lambda, "prep lambda (exponential form)");
            return clamp01(pm.mu * suppression(pm.lambda, d0));
    }
    return 1.0;
}

double growth_error(int d_from, int d_to, const GrowthModel &gm) {
    require_distance(d_from, "growth source distance");
    require_distance(d_to, "growth target distance");
    if (d_to < d_from) {
        throw ModelError(ModelErrorKind::shrinking_growth,
                         "cannot grow from " + std::to_string(d_from) + " down to " + std::to_string(d_to));
    }
    switch (gm.form) {
        case GrowthForm::zero:
            return 0.0;
        case GrowthForm::memory_like:
            require_suppression(gm.lambda, "growth lambda");
            return std::min(1.0, gm.mu * static_cast<double>(d_to) * d_to * suppression(gm.lambda, d_from));
    }
    return 1.0;
}

double combine_grow(double e_out, double e_grow) {
    require_probability(e_out, "e_out");
    require_probability(e_grow, "e_grow");
    return clamp01(e_out + e_grow - e_out * e_grow);
}

double distill_output(double e_in, double e_cliff, const DistillationProtocol &proto) {
    require_probability(e_in, "e_in");
    require_probability(e_cliff, "e_cliff");
    return clamp01(proto.out_cubic_coeff * e_in * e_in * e_in + proto.out_cliff_coeff * e_cliff);
}

Acceptance acceptance_prob(double e_in, double e_cliff, const DistillationProtocol &proto) {
    require_probability(e_in, "e_in");
    require_probability(e_cliff, "e_cliff");
    Acceptance a;
    a.raw = 1.0 - proto.acc_in_coeff * e_in - proto.acc_cliff_coeff * e_cliff;
    a.clamped = clamp01(a.raw);
    return a;
}

}  // namespace ftqc
