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

#include "ftqc/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ftqc {

namespace {

// Relative slack used when comparing rates that were derived from each other.
constexpr double kRateTolerance = 1e-9;

double cycle_seconds(int d, const HardwareModel &hw) { return hw.w_parity * static_cast<double>(d); }

double unit_period(int d, const HardwareModel &hw, const DistillationProtocol &proto) {
    return cycle_seconds(d, hw) * static_cast<double>(proto.o_cycles + proto.n_out);
}

}  // namespace

std::string_view to_string(CliffordModel m) {
    switch (m) {
        case CliffordModel::memory:
            return "memory";
        case CliffordModel::clifford:
            return "clifford";
        case CliffordModel::surgery:
            return "surgery";
    }
    return "unknown";
}

std::optional<CliffordModel> parse_clifford_model(std::string_view s) {
    if (s == "memory") return CliffordModel::memory;
    if (s == "clifford") return CliffordModel::clifford;
    if (s == "surgery") return CliffordModel::surgery;
    return std::nullopt;
}

void ChainConfig::validate() const {
    require_distance(d0, "d0");
    require_distance(d_core, "d_core");
    if (bus_len_msf < 0) throw ModelError(ModelErrorKind::out_of_range, "bus_len_msf must be >= 0");
    int prev = d0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const auto &lv = levels[i];
        require_distance(lv.distance, "level " + std::to_string(i + 1) + " distance");
        if (lv.distance < prev) {
            throw ModelError(ModelErrorKind::shrinking_growth,
                             "distances must be nondecreasing: level " + std::to_string(i + 1) + " has d=" +
                                 std::to_string(lv.distance) + " below " + std::to_string(prev));
        }
        if (lv.units < 1) {
            throw ModelError(ModelErrorKind::out_of_range,
                             "level " + std::to_string(i + 1) + " needs at least one unit");
        }
        prev = lv.distance;
    }
    if (d_core < prev) {
        throw ModelError(ModelErrorKind::shrinking_growth,
                         "d_core=" + std::to_string(d_core) + " is below the top level distance " +
                             std::to_string(prev));
    }
}

std::vector<int> ChainConfig::distances() const {
    std::vector<int> out;
    out.reserve(levels.size());
    for (const auto &lv : levels) out.push_back(lv.distance);
    return out;
}

std::vector<std::uint64_t> ChainConfig::units() const {
    std::vector<std::uint64_t> out;
    out.reserve(levels.size());
    for (const auto &lv : levels) out.push_back(lv.units);
    return out;
}

double msf_clifford_error(int d, int bus_len, CliffordModel model, const HardwareModel &hw) {
    const int bus = bus_len > 0 ? bus_len : d;
    switch (model) {
        case CliffordModel::memory:
            return mem_error(d, d, hw);
        case CliffordModel::clifford:
            return clifford_error(d, bus, d, hw);
        case CliffordModel::surgery:
            return surgery_error(d, bus, d, hw);
    }
    return 1.0;
}

ChainErrorLedger chain_errors(const ChainConfig &cfg, const HardwareModel &hw, const PrepModel &pm,
                              const GrowthModel &gm, const DistillationProtocol &proto) {
    cfg.validate();
    ChainErrorLedger ledger;
    ledger.e_prep = prep_error(cfg.d0, pm);

    double e_in = ledger.e_prep;
    const std::size_t L = cfg.levels.size();
    for (std::size_t i = 0; i < L; ++i) {
        LevelErrors le;
        le.index = static_cast<int>(i + 1);
        le.distance = cfg.levels[i].distance;
        le.e_in = e_in;
        le.e_cliff = msf_clifford_error(le.distance, cfg.bus_len_msf, cfg.cliff_model, hw);
        le.e_out = distill_output(le.e_in, le.e_cliff, proto);
        const auto acc = acceptance_prob(le.e_in, le.e_cliff, proto);
        le.p_accept = acc.clamped;
        le.p_accept_raw = acc.raw;
        if (!acc.feasible() && ledger.feasible) {
            ledger.feasible = false;
            ledger.reason = "level " + std::to_string(le.index) + " has acceptance probability " +
                            std::to_string(acc.raw) + " <= 0";
        }
        const int next = i + 1 < L ? cfg.levels[i + 1].distance : cfg.d_core;
        le.e_grow = growth_error(le.distance, next, gm);
        e_in = combine_grow(le.e_out, le.e_grow);
        ledger.levels.push_back(le);
    }
    if (L == 0) {
        ledger.e_grow_prep = growth_error(cfg.d0, cfg.d_core, gm);
        e_in = combine_grow(e_in, ledger.e_grow_prep);
    }
    ledger.e_msf = e_in;
    return ledger;
}

double serial_consumption_rate(int d_core, const HardwareModel &hw) {
    require_distance(d_core, "d_core");
    return 1.0 / cycle_seconds(d_core, hw);
}

double core_consumption_rate(const CircuitProfile &c, int d_core, const HardwareModel &hw) {
    require_distance(d_core, "d_core");
    if (c.t_depth < 1) throw ModelError(ModelErrorKind::out_of_range, "t_depth must be >= 1");
    const double per_cycle = static_cast<double>(c.t_count) / static_cast<double>(c.t_depth);
    return per_cycle / cycle_seconds(d_core, hw);
}

double unit_production_rate_at(int d, double p_accept, const HardwareModel &hw, const DistillationProtocol &proto) {
    require_distance(d, "level distance");
    if (!(p_accept >= 0.0 && p_accept <= 1.0)) {
        throw ModelError(ModelErrorKind::out_of_range, "acceptance probability must lie in [0, 1]");
    }
    return static_cast<double>(proto.n_out) * p_accept / unit_period(d, hw, proto);
}

double unit_production_rate(int d, double e_in, double e_cliff, const HardwareModel &hw,
                            const DistillationProtocol &proto) {
    const auto acc = acceptance_prob(e_in, e_cliff, proto);
    if (!acc.feasible()) {
        throw ModelError(ModelErrorKind::infeasible,
                         "acceptance probability " + std::to_string(acc.raw) + " <= 0 at d=" + std::to_string(d));
    }
    return unit_production_rate_at(d, acc.clamped, hw, proto);
}

double unit_consumption_rate(int d, const HardwareModel &hw, const DistillationProtocol &proto) {
    require_distance(d, "level distance");
    return static_cast<double>(proto.m_in) / unit_period(d, hw, proto);
}

double prep_rate_per_first_level_unit(int d0, const HardwareModel &hw, const DistillationProtocol &proto) {
    require_distance(d0, "d0");
    return static_cast<double>(proto.prep_units_per_first_level_unit) /
           (proto.prep_cycles_per_state * cycle_seconds(d0, hw));
}

std::uint64_t required_units(double demand, double single_production, double beta) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw ModelError(ModelErrorKind::out_of_range, "beta must be > 0");
    }
    if (!(demand >= 0.0) || !std::isfinite(demand)) {
        throw ModelError(ModelErrorKind::out_of_range, "demand must be >= 0");
    }
    if (!(single_production >= 0.0)) {
        throw ModelError(ModelErrorKind::out_of_range, "single-unit production must be >= 0");
    }
    if (demand == 0.0) return 1;
    if (single_production == 0.0) {
        throw ModelError(ModelErrorKind::infeasible, "zero production cannot meet a positive demand");
    }
    const double n = std::ceil(demand / (beta * single_production) * (1.0 - kRateTolerance));
    if (!(n < static_cast<double>(std::numeric_limits<std::uint32_t>::max()))) {
        throw ModelError(ModelErrorKind::infeasible, "unit count overflows");
    }
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(n));
}

namespace {

// Per-unit effective production of each level; the first level is slowed
// down when its preparation units cannot keep up with its input demand.
std::vector<double> effective_single_rates(const ChainConfig &cfg, const ChainErrorLedger &ledger,
                                           const HardwareModel &hw, const DistillationProtocol &proto) {
    if (ledger.levels.size() != cfg.levels.size()) {
        throw ModelError(ModelErrorKind::out_of_range, "ledger does not match the chain configuration");
    }
    std::vector<double> single(cfg.levels.size());
    for (std::size_t i = 0; i < cfg.levels.size(); ++i) {
        const auto &le = ledger.levels[i];
        if (!(le.p_accept_raw > 0.0)) {
            throw ModelError(ModelErrorKind::infeasible,
                             "level " + std::to_string(i + 1) + " has acceptance probability <= 0");
        }
        single[i] = unit_production_rate_at(le.distance, le.p_accept, hw, proto);
    }
    if (!single.empty()) {
        const double need = unit_consumption_rate(cfg.levels[0].distance, hw, proto);
        const double have = prep_rate_per_first_level_unit(cfg.d0, hw, proto);
        if (have < need) single[0] *= have / need;
    }
    return single;
}

double target_core_rate(const ChainConfig &cfg, const CircuitProfile &c, double beta, const HardwareModel &hw) {
    const double c_core = core_consumption_rate(c, cfg.d_core, hw);
    if (cfg.levels.empty()) return c_core;
    return std::min(serial_consumption_rate(cfg.d_core, hw) / beta, c_core);
}

}  // namespace

RateReport chain_rates(const ChainConfig &cfg, const ChainErrorLedger &ledger, const CircuitProfile &c,
                       double beta, const HardwareModel &hw, const DistillationProtocol &proto) {
    if (!(beta > 0.0)) throw ModelError(ModelErrorKind::out_of_range, "beta must be > 0");
    cfg.validate();
    RateReport r;
    r.c_core = core_consumption_rate(c, cfg.d_core, hw);
    r.serial_rate = serial_consumption_rate(cfg.d_core, hw);
    r.target_core = target_core_rate(cfg, c, beta, hw);

    const std::size_t L = cfg.levels.size();
    if (L == 0) {
        // Preparation units feed the core directly and are provisioned at its peak rate.
        r.d0_rate = r.c_core;
        r.d0_rate_per_unit = r.c_core;
        r.delivered = r.c_core;
        r.beta_achieved = r.serial_rate / r.delivered;
        return r;
    }

    const auto single = effective_single_rates(cfg, ledger, hw, proto);
    const double m = proto.m_in;
    const double n = proto.n_out;
    r.levels.resize(L);
    double target = r.target_core;
    for (std::size_t k = L; k-- > 0;) {
        auto &lr = r.levels[k];
        const double p = ledger.levels[k].p_accept;
        lr.index = static_cast<int>(k + 1);
        lr.single_production = single[k];
        lr.production = static_cast<double>(cfg.levels[k].units) * single[k];
        lr.consumption = static_cast<double>(cfg.levels[k].units) *
                         unit_consumption_rate(cfg.levels[k].distance, hw, proto);
        lr.target_output = target;
        lr.required_input = target * m / (n * p);
        target = lr.required_input;
    }
    r.d0_rate_per_unit = prep_rate_per_first_level_unit(cfg.d0, hw, proto);
    r.d0_rate = static_cast<double>(cfg.levels[0].units) * r.d0_rate_per_unit;

    double below = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < L; ++k) {
        auto &lr = r.levels[k];
        const double fed = k == 0 ? below : below * n * ledger.levels[k].p_accept / m;
        lr.delivered = std::min(lr.production, fed);
        below = lr.delivered;
    }
    r.delivered = std::min(below, r.c_core);
    r.beta_achieved = r.delivered > 0.0 ? r.serial_rate / r.delivered : std::numeric_limits<double>::infinity();
    return r;
}

std::vector<std::uint64_t> size_units(const ChainConfig &cfg, const ChainErrorLedger &ledger,
                                      const CircuitProfile &c, double beta, const HardwareModel &hw,
                                      const DistillationProtocol &proto) {
    if (!(beta > 0.0)) throw ModelError(ModelErrorKind::out_of_range, "beta must be > 0");
    const std::size_t L = cfg.levels.size();
    std::vector<std::uint64_t> units(L, 1);
    if (L == 0) return units;
    const auto single = effective_single_rates(cfg, ledger, hw, proto);
    double target = target_core_rate(cfg, c, beta, hw);
    for (std::size_t k = L; k-- > 0;) {
        units[k] = required_units(target, single[k], 1.0);
        target = target * proto.m_in / (proto.n_out * ledger.levels[k].p_accept);
    }
    return units;
}

std::vector<FlowCheck> steady_flow_check(const ChainConfig &cfg, const RateReport &rates) {
    const std::size_t L = cfg.levels.size();
    if (rates.levels.size() != L) {
        throw ModelError(ModelErrorKind::out_of_range, "rate report does not match the chain configuration");
    }
    std::vector<FlowCheck> out;
    out.reserve(L + 1);
    for (std::size_t l = 1; l <= L + 1; ++l) {
        FlowCheck fc;
        fc.level = static_cast<int>(l);
        double granularity;
        if (l == 1) {
            fc.supply = rates.d0_rate;
            granularity = rates.d0_rate_per_unit;
        } else {
            fc.supply = rates.levels[l - 2].production;
            granularity = rates.levels[l - 2].single_production;
        }
        fc.demand = l <= L ? rates.levels[l - 1].required_input : rates.target_core;
        fc.supply_meets_demand = fc.supply >= fc.demand * (1.0 - kRateTolerance);
        fc.balanced = fc.supply_meets_demand && (fc.supply - fc.demand) < granularity * (1.0 + kRateTolerance);
        out.push_back(fc);
    }
    return out;
}

bool flow_satisfied(const std::vector<FlowCheck> &checks) {
    return std::all_of(checks.begin(), checks.end(), [](const FlowCheck &f) { return f.supply_meets_demand; });
}

}  // namespace ftqc
