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

#include "ftqc/assembler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ftqc {

std::string_view to_string(AssemblyStep s) {
    switch (s) {
        case AssemblyStep::core_distance:
            return "core-distance";
        case AssemblyStep::msf_budget:
            return "msf-budget";
        case AssemblyStep::first_level_distance:
            return "first-level-distance";
        case AssemblyStep::num_levels:
            return "num-levels";
        case AssemblyStep::refine_distances:
            return "refine-distances";
        case AssemblyStep::size_units:
            return "size-units";
        case AssemblyStep::local_search:
            return "local-search";
        case AssemblyStep::verify:
            return "verify";
    }
    return "unknown";
}

InfeasibleError::InfeasibleError(AssemblyStep step, const std::string &what)
    : std::runtime_error(std::string(to_string(step)) + ": " + what), step_(step) {}

void AssemblyConfig::validate() const {
    circuit.validate();
    hw.validate();
    pm.validate();
    gm.validate();
    proto.validate();
    if (!(error_budget > 0.0 && error_budget < 1.0)) {
        throw ModelError(ModelErrorKind::out_of_range, "error_budget must lie in (0, 1)");
    }
    if (!(beta_target > 0.0) || !std::isfinite(beta_target)) {
        throw ModelError(ModelErrorKind::out_of_range, "beta_target must be > 0");
    }
    require_distance(d_max, "d_max");
    if (l_max < 0) throw ModelError(ModelErrorKind::out_of_range, "l_max must be >= 0");
    if (bus_len_msf < 0) throw ModelError(ModelErrorKind::out_of_range, "bus_len_msf must be >= 0");
}

std::vector<int> ArchitecturePlan::distances() const {
    std::vector<int> out;
    for (const auto &lv : levels) out.push_back(lv.distance);
    return out;
}

std::vector<std::uint64_t> ArchitecturePlan::units() const {
    std::vector<std::uint64_t> out;
    for (const auto &lv : levels) out.push_back(lv.units);
    return out;
}

ChainConfig ArchitecturePlan::chain(const AssemblyConfig &cfg) const {
    ChainConfig ch;
    ch.d0 = d0;
    ch.levels = levels;
    ch.d_core = d_core;
    ch.bus_len_msf = cfg.bus_len_msf;
    ch.cliff_model = cfg.cliff_model;
    return ch;
}

bool within_budget(double e_msf, double e_core, const AssemblyConfig &cfg) {
    return e_msf * static_cast<double>(cfg.circuit.t_count) + e_core <= cfg.error_budget;
}

double step1_makespan(const AssemblyConfig &cfg) {
    return std::max(cfg.beta_target * static_cast<double>(cfg.circuit.t_count),
                    static_cast<double>(cfg.circuit.t_depth));
}

int choose_core_distance(const AssemblyConfig &cfg) {
    const double k = step1_makespan(cfg);
    for (int d = 3; d <= cfg.d_max; d += 2) {
        if (core_error(cfg.circuit, k, mem_error(d, d, cfg.hw)) <= cfg.error_budget) return d;
    }
    throw InfeasibleError(AssemblyStep::core_distance,
                          "no core distance up to d_max=" + std::to_string(cfg.d_max) + " meets the error budget");
}

MsfBudget msf_budget(const AssemblyConfig &cfg, int d_core) {
    require_distance(d_core, "d_core");
    MsfBudget b;
    b.e_core = core_error(cfg.circuit, step1_makespan(cfg), mem_error(d_core, d_core, cfg.hw));
    b.budget = (cfg.error_budget - b.e_core) / static_cast<double>(cfg.circuit.t_count);
    if (!(b.budget > 0.0)) {
        throw InfeasibleError(AssemblyStep::msf_budget,
                              "core error " + std::to_string(b.e_core) + " leaves no budget for magic states");
    }
    b.e_free = std::numeric_limits<double>::infinity();
    for (int d = 3; d <= d_core; d += 2) {
        const double e = combine_grow(prep_error(d, cfg.pm), growth_error(d, d_core, cfg.gm));
        if (e < b.e_free) {
            b.e_free = e;
            b.d0_free = d;
        }
    }
    b.distillation_free = within_budget(b.e_free, b.e_core, cfg);
    return b;
}

namespace {

struct FirstLevel {
    double e_out = 1.0;
    bool feasible = false;
};

FirstLevel first_level_at(const AssemblyConfig &cfg, int d) {
    const double e_in = prep_error(d, cfg.pm);
    const double e_cliff = msf_clifford_error(d, cfg.bus_len_msf, cfg.cliff_model, cfg.hw);
    return {distill_output(e_in, e_cliff, cfg.proto), acceptance_prob(e_in, e_cliff, cfg.proto).feasible()};
}

ChainConfig make_chain(const AssemblyConfig &cfg, const std::vector<int> &ds, int d_core, int d0) {
    ChainConfig ch;
    ch.d0 = ds.empty() ? d0 : ds.front();
    for (std::size_t i = 0; i < ds.size(); ++i) ch.levels.push_back({static_cast<int>(i + 1), ds[i], 1});
    ch.d_core = d_core;
    ch.bus_len_msf = cfg.bus_len_msf;
    ch.cliff_model = cfg.cliff_model;
    return ch;
}

bool chain_meets(const AssemblyConfig &cfg, const std::vector<int> &ds, int d_core, double e_core) {
    const auto ledger = chain_errors(make_chain(cfg, ds, d_core, ds.front()), cfg.hw, cfg.pm, cfg.gm, cfg.proto);
    return ledger.feasible && within_budget(ledger.e_msf, e_core, cfg);
}

ArchitecturePlan infeasible_plan(const AssemblyConfig &cfg, AssemblyStep step, const std::string &why) {
    ArchitecturePlan p;
    p.beta_target = cfg.beta_target;
    p.feasible = false;
    p.failed_step = step;
    p.reason = why;
    return p;
}

}  // namespace

int choose_first_level_distance(const AssemblyConfig &cfg) {
    int best = -1;
    double best_e = std::numeric_limits<double>::infinity();
    for (int d = 3; d <= cfg.d_max; d += 2) {
        const auto fl = first_level_at(cfg, d);
        if (fl.feasible && fl.e_out < best_e) {
            best_e = fl.e_out;
            best = d;
        }
    }
    if (best < 0) {
        throw InfeasibleError(AssemblyStep::first_level_distance,
                              "no first-level distance has a positive acceptance probability");
    }
    return best;
}

int choose_num_levels(const AssemblyConfig &cfg, double budget, int d_first) {
    double e = first_level_at(cfg, d_first).e_out;
    for (int L = 1; L <= cfg.l_max; ++L) {
        if (e <= budget) return L;
        // Higher levels with ideal Cliffords and no growth.
        e = clamp01(cfg.proto.out_cubic_coeff * e * e * e);
    }
    throw InfeasibleError(AssemblyStep::num_levels,
                          "budget " + std::to_string(budget) + " not reachable within l_max=" +
                              std::to_string(cfg.l_max) + " levels");
}

std::optional<std::vector<int>> refine_distances(const AssemblyConfig &cfg, int num_levels, int d_core,
                                                 double e_core, const std::vector<int> &fixed) {
    if (num_levels < 1 || fixed.size() > static_cast<std::size_t>(num_levels)) return std::nullopt;
    const std::size_t L = static_cast<std::size_t>(num_levels);
    std::vector<int> ds(L, d_core);
    std::copy(fixed.begin(), fixed.end(), ds.begin());
    for (std::size_t i = 1; i < fixed.size(); ++i) {
        if (fixed[i] < fixed[i - 1]) return std::nullopt;
    }
    if (!fixed.empty() && fixed.back() > d_core) return std::nullopt;
    if (!chain_meets(cfg, ds, d_core, e_core)) return std::nullopt;

    // Each pass only lowers distances, so this settles after a few passes.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t l = fixed.size(); l < L; ++l) {
            const int lo = l == 0 ? 3 : ds[l - 1];
            for (int d = lo; d < ds[l]; d += 2) {
                auto trial = ds;
                trial[l] = d;
                if (chain_meets(cfg, trial, d_core, e_core)) {
                    ds[l] = d;
                    changed = true;
                    break;
                }
            }
        }
    }
    return ds;
}

double space_cost(const ArchitecturePlan &plan, const AssemblyConfig &cfg) {
    auto patch = [](int d) { return 2.0 * d * d - 1.0; };
    double s = patch(plan.d_core) * core_tile_count(cfg.circuit.q_logical, kCoreSpaceConstant);
    for (std::size_t i = 0; i < plan.levels.size(); ++i) {
        const auto &lv = plan.levels[i];
        const double per_unit = i == 0 ? cfg.proto.first_level_unit_tiles : cfg.proto.upper_level_unit_tiles();
        s += patch(lv.distance) * (per_unit * static_cast<double>(lv.units) + cfg.proto.routing_base);
    }
    return std::ceil(s);
}

double runtime(const ArchitecturePlan &plan, const HardwareModel &hw) {
    return plan.k_cycles * hw.w_parity * static_cast<double>(plan.d_core);
}

ArchitecturePlan evaluate_plan(const AssemblyConfig &cfg, const ChainConfig &chain_in, bool keep_units) {
    ChainConfig chain = chain_in;
    chain.bus_len_msf = cfg.bus_len_msf;
    chain.cliff_model = cfg.cliff_model;
    for (std::size_t i = 0; i < chain.levels.size(); ++i) chain.levels[i].index = static_cast<int>(i + 1);

    ArchitecturePlan p;
    p.d0 = chain.d0;
    p.d_core = chain.d_core;
    p.d_core_step1 = chain.d_core;
    p.beta_target = cfg.beta_target;
    p.ledger = chain_errors(chain, cfg.hw, cfg.pm, cfg.gm, cfg.proto);

    auto finish_costs = [&](ArchitecturePlan &q) {
        auto patch = [](int d) { return 2.0 * d * d - 1.0; };
        q.s_core = patch(q.d_core) * core_tile_count(cfg.circuit.q_logical, kCoreSpaceConstant);
        q.s_msf = 0.0;
        for (std::size_t i = 0; i < q.levels.size(); ++i) {
            const double per_unit =
                i == 0 ? cfg.proto.first_level_unit_tiles : cfg.proto.upper_level_unit_tiles();
            q.s_msf += patch(q.levels[i].distance) *
                       (per_unit * static_cast<double>(q.levels[i].units) + cfg.proto.routing_base);
        }
        q.s_physical = space_cost(q, cfg);
        q.r_seconds = runtime(q, cfg.hw);
    };

    p.levels = chain.levels;
    if (!p.ledger.feasible) {
        p.feasible = false;
        p.failed_step = AssemblyStep::size_units;
        p.reason = p.ledger.reason;
        finish_costs(p);
        return p;
    }

    try {
        if (!keep_units) {
            const auto u = size_units(chain, p.ledger, cfg.circuit, cfg.beta_target, cfg.hw, cfg.proto);
            for (std::size_t i = 0; i < u.size(); ++i) chain.levels[i].units = u[i];
        }
        p.levels = chain.levels;
        p.rates = chain_rates(chain, p.ledger, cfg.circuit, cfg.beta_target, cfg.hw, cfg.proto);
    } catch (const ModelError &e) {
        if (e.kind() != ModelErrorKind::infeasible) throw;
        p.feasible = false;
        p.failed_step = AssemblyStep::size_units;
        p.reason = e.what();
        finish_costs(p);
        return p;
    }

    const double t = static_cast<double>(cfg.circuit.t_count);
    p.beta_achieved = p.rates.beta_achieved;
    if (!(p.rates.delivered > 0.0) || !std::isfinite(p.beta_achieved)) {
        p.feasible = false;
        p.failed_step = AssemblyStep::size_units;
        p.reason = "factory delivers no magic states";
        finish_costs(p);
        return p;
    }
    // Guard the ceiling against round-off in beta' * T.
    p.k_cycles = std::max(static_cast<double>(cfg.circuit.t_depth), std::ceil(p.beta_achieved * t * (1.0 - 1e-12)));
    p.e_core_total = core_error(cfg.circuit, p.k_cycles, mem_error(p.d_core, p.d_core, cfg.hw));
    p.e_msf_total = p.ledger.e_msf * t;
    p.budget_margin = cfg.error_budget - p.e_msf_total - p.e_core_total;
    p.flow = steady_flow_check(chain, p.rates);
    finish_costs(p);

    const bool budget_ok = within_budget(p.ledger.e_msf, p.e_core_total, cfg);
    const bool flow_ok = flow_satisfied(p.flow);
    p.feasible = budget_ok && flow_ok;
    if (!budget_ok) {
        p.failed_step = AssemblyStep::verify;
        p.reason = "error budget exceeded at the achieved makespan";
    } else if (!flow_ok) {
        p.failed_step = AssemblyStep::verify;
        p.reason = "steady flow violated";
    }
    return p;
}

namespace {

// Evaluates the distances and, if the achieved makespan breaks the budget,
// re-refines the free levels against the core error at that makespan.
std::optional<ArchitecturePlan> realize(const AssemblyConfig &cfg, std::vector<int> ds, int d_core,
                                        const std::vector<int> &fixed) {
    for (int attempt = 0; attempt < 4; ++attempt) {
        auto plan = evaluate_plan(cfg, make_chain(cfg, ds, d_core, ds.front()));
        if (plan.feasible) return plan;
        if (!plan.ledger.feasible || !flow_satisfied(plan.flow) || plan.k_cycles <= 0.0) return std::nullopt;
        auto again = refine_distances(cfg, static_cast<int>(ds.size()), d_core, plan.e_core_total, fixed);
        if (!again || *again == ds) return std::nullopt;
        ds = *again;
    }
    return std::nullopt;
}

ArchitecturePlan build_at_core(const AssemblyConfig &cfg, int d_core) {
    const auto budget = msf_budget(cfg, d_core);
    if (budget.distillation_free || cfg.l_max == 0) {
        auto plan = evaluate_plan(cfg, make_chain(cfg, {}, d_core, budget.d0_free));
        if (plan.feasible) return plan;
        if (cfg.l_max == 0) {
            throw InfeasibleError(AssemblyStep::num_levels, "preparation alone misses the budget and l_max = 0");
        }
    }
    const int d_first = choose_first_level_distance(cfg);
    const int L0 = choose_num_levels(cfg, budget.budget, d_first);
    for (int L = L0; L <= cfg.l_max; ++L) {
        const auto ds = refine_distances(cfg, L, d_core, budget.e_core);
        if (!ds) continue;
        if (auto plan = realize(cfg, *ds, d_core, {})) return *plan;
    }
    throw InfeasibleError(AssemblyStep::refine_distances,
                          "no distances up to d_core=" + std::to_string(d_core) + " meet the budget");
}

}  // namespace

ArchitecturePlan local_search(const ArchitecturePlan &plan, const AssemblyConfig &cfg) {
    if (!plan.feasible || plan.levels.empty()) return plan;
    ArchitecturePlan best = plan;
    const int L = best.num_levels();
    for (bool improved = true; improved;) {
        improved = false;
        const auto ds = best.distances();
        for (int l = 0; l < L && !improved; ++l) {
            const int nd = ds[l] + 2;
            if (nd > best.d_core) continue;
            std::vector<int> fixed(ds.begin(), ds.begin() + l);
            fixed.push_back(nd);
            const double e_core =
                core_error(cfg.circuit, step1_makespan(cfg), mem_error(best.d_core, best.d_core, cfg.hw));
            const auto cand_ds = refine_distances(cfg, L, best.d_core, e_core, fixed);
            if (!cand_ds) continue;
            auto cand = realize(cfg, *cand_ds, best.d_core, fixed);
            if (cand && cand->s_physical < best.s_physical) {
                cand->local_search_moves = best.local_search_moves + 1;
                best = *cand;
                improved = true;
            }
        }
        if (improved) continue;
        const int dc = best.d_core + 2;
        if (dc > cfg.d_max) break;
        const double e_core = core_error(cfg.circuit, step1_makespan(cfg), mem_error(dc, dc, cfg.hw));
        const auto cand_ds = refine_distances(cfg, L, dc, e_core);
        if (!cand_ds) continue;
        auto cand = realize(cfg, *cand_ds, dc, {});
        if (cand && cand->s_physical < best.s_physical) {
            cand->local_search_moves = best.local_search_moves + 1;
            best = *cand;
            improved = true;
        }
    }
    best.d_core_step1 = plan.d_core_step1;
    return best;
}

ArchitecturePlan assemble(const AssemblyConfig &cfg) {
    cfg.validate();
    int d_step1;
    try {
        d_step1 = choose_core_distance(cfg);
    } catch (const InfeasibleError &e) {
        return infeasible_plan(cfg, e.step(), e.what());
    }

    std::optional<InfeasibleError> first_failure;
    for (int dc = d_step1; dc <= cfg.d_max; dc += 2) {
        try {
            auto plan = build_at_core(cfg, dc);
            plan.d_core_step1 = d_step1;
            return local_search(plan, cfg);
        } catch (const InfeasibleError &e) {
            if (!first_failure) first_failure = e;
        } catch (const ModelError &e) {
            if (e.kind() != ModelErrorKind::infeasible) throw;
            if (!first_failure) first_failure = InfeasibleError(AssemblyStep::size_units, e.what());
        }
    }
    auto p = infeasible_plan(cfg, first_failure->step(), first_failure->what());
    p.d_core = d_step1;
    p.d_core_step1 = d_step1;
    return p;
}

}  // namespace ftqc
