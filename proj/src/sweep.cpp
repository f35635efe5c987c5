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

#include "ftqc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <thread>

namespace ftqc {

void BetaGrid::validate() const {
    if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
        throw ModelError(ModelErrorKind::out_of_range, "beta grid needs 0 < lo <= hi");
    }
    if (points < 1) throw ModelError(ModelErrorKind::out_of_range, "beta grid needs at least one point");
    if (points == 1 && hi != lo) {
        throw ModelError(ModelErrorKind::out_of_range, "a one-point beta grid needs lo == hi");
    }
}

std::vector<double> BetaGrid::values() const {
    validate();
    std::vector<double> out(static_cast<std::size_t>(points));
    if (points == 1) {
        out[0] = lo;
        return out;
    }
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        out[i] = log_scale ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t;
    }
    out.back() = hi;
    return out;
}

double BetaGrid::extension_ratio() const {
    if (points < 2 || hi == lo) return 1.25;
    if (log_scale) return std::pow(hi / lo, 1.0 / (points - 1));
    return (hi + (hi - lo) / (points - 1)) / hi;
}

void SweepSpec::validate() const {
    base.validate();
    for (double b : betas) {
        if (!(b > 0.0) || !std::isfinite(b)) throw ModelError(ModelErrorKind::out_of_range, "beta values must be > 0");
    }
    if (max_extensions < 0) throw ModelError(ModelErrorKind::out_of_range, "max_extensions must be >= 0");
    if (extension_ratio != 0.0 && !(extension_ratio > 1.0)) {
        throw ModelError(ModelErrorKind::out_of_range, "extension_ratio must be > 1");
    }
    if (!(t_depth_fraction > 0.0 && t_depth_fraction <= 1.0)) {
        throw ModelError(ModelErrorKind::out_of_range, "t_depth_fraction must lie in (0, 1]");
    }
    for (const auto &c : circuit_grid) {
        if (c.t_count < 1 || c.q_logical < 1) {
            throw ModelError(ModelErrorKind::out_of_range, "circuit grid entries need T >= 1 and Q >= 1");
        }
    }
    for (const auto &h : hardware_grid) {
        if (!(h.lambda_mem > 1.0) || !(h.mu_mem >= 0.0) || !(h.e_prep >= 0.0 && h.e_prep <= 1.0)) {
            throw ModelError(ModelErrorKind::out_of_range,
                             "hardware grid entries need lambda_mem > 1, mu_mem >= 0, e_prep in [0, 1]");
        }
    }
}

bool single_unit_plan(const ArchitecturePlan &plan) {
    return plan.feasible && std::all_of(plan.levels.begin(), plan.levels.end(),
                                        [](const LevelSpec &lv) { return lv.units == 1; });
}

namespace {

ParetoPoint run_point(const AssemblyConfig &base, double beta, std::size_t id) {
    AssemblyConfig cfg = base;
    cfg.beta_target = beta;
    ParetoPoint pt;
    pt.beta_target = beta;
    pt.plan_id = id;
    pt.plan = assemble(cfg);
    pt.feasible = pt.plan.feasible;
    pt.beta_achieved = pt.plan.beta_achieved;
    pt.s_physical = pt.plan.s_physical;
    pt.r_seconds = pt.plan.r_seconds;
    pt.reason = pt.plan.reason;
    return pt;
}

}  // namespace

std::vector<ParetoPoint> beta_sweep(const SweepSpec &spec) {
    spec.validate();
    std::vector<double> betas = spec.betas;
    BetaGrid grid;
    if (betas.empty()) betas = grid.values();
    std::sort(betas.begin(), betas.end());
    betas.erase(std::unique(betas.begin(), betas.end()), betas.end());

    double ratio = spec.extension_ratio;
    if (ratio == 0.0) {
        if (spec.betas.empty()) {
            ratio = grid.extension_ratio();
        } else if (betas.size() >= 2) {
            ratio = std::pow(betas.back() / betas.front(), 1.0 / static_cast<double>(betas.size() - 1));
        } else {
            ratio = 1.25;
        }
    }

    std::vector<ParetoPoint> points;
    for (double b : betas) points.push_back(run_point(spec.base, b, points.size()));

    // A one-point grid is a single assembly; never extend it.
    if (spec.auto_extend && betas.size() >= 2 && ratio > 1.0) {
        double b = betas.back();
        for (int i = 0; i < spec.max_extensions; ++i) {
            const auto &last = points.back();
            if (!last.feasible || single_unit_plan(last.plan)) break;
            b *= ratio;
            points.push_back(run_point(spec.base, b, points.size()));
            points.back().extension = true;
        }
    }

    if (std::none_of(points.begin(), points.end(), [](const ParetoPoint &p) { return p.feasible; })) {
        throw SweepError("no feasible plan for any beta: " + points.front().reason);
    }
    pareto_filter(points);
    return points;
}

std::vector<ParetoPoint> pareto_filter(std::vector<ParetoPoint> &points) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < points.size(); ++i) {
        points[i].dominated = true;
        if (points[i].feasible) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto &pa = points[a];
        const auto &pb = points[b];
        if (pa.r_seconds != pb.r_seconds) return pa.r_seconds < pb.r_seconds;
        if (pa.s_physical != pb.s_physical) return pa.s_physical < pb.s_physical;
        if (pa.beta_target != pb.beta_target) return pa.beta_target < pb.beta_target;
        return a < b;
    });
    std::vector<ParetoPoint> frontier;
    double best_s = std::numeric_limits<double>::infinity();
    for (std::size_t i : order) {
        if (points[i].s_physical < best_s) {
            best_s = points[i].s_physical;
            points[i].dominated = false;
            frontier.push_back(points[i]);
        }
    }
    return frontier;
}

std::vector<AssemblyConfig> grid_configs(const SweepSpec &spec) {
    const std::vector<CircuitPoint> circuits =
        spec.circuit_grid.empty()
            ? std::vector<CircuitPoint>{{spec.base.circuit.t_count, spec.base.circuit.q_logical}}
            : spec.circuit_grid;
    std::vector<AssemblyConfig> out;
    for (const auto &c : circuits) {
        AssemblyConfig cfg = spec.base;
        if (!spec.circuit_grid.empty()) {
            cfg.circuit.t_count = c.t_count;
            cfg.circuit.q_logical = c.q_logical;
            cfg.circuit.q_per_gate.clear();
            cfg.circuit.t_per_step.clear();
            const double td = std::ceil(spec.t_depth_fraction * static_cast<double>(c.t_count));
            cfg.circuit.t_depth = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(td));
        }
        if (spec.hardware_grid.empty()) {
            out.push_back(cfg);
            continue;
        }
        for (const auto &h : spec.hardware_grid) {
            AssemblyConfig cell = cfg;
            cell.hw.lambda_mem = h.lambda_mem;
            cell.hw.mu_mem = h.mu_mem;
            cell.pm = PrepModel{PrepForm::linear, h.e_prep, 0.0};
            out.push_back(cell);
        }
    }
    return out;
}

unsigned sweep_threads() {
    if (const char *env = std::getenv("FTQC_ASSEMBLER_THREADS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<GridCell> grid_sweep(const SweepSpec &spec, unsigned threads) {
    spec.validate();
    const auto configs = grid_configs(spec);
    const std::size_t n_hw = spec.hardware_grid.empty() ? 1 : spec.hardware_grid.size();
    std::vector<GridCell> cells(configs.size());
    for (std::size_t i = 0; i < configs.size(); ++i) {
        cells[i].index = i;
        cells[i].circuit_index = i / n_hw;
        cells[i].hardware_index = i % n_hw;
        cells[i].config = configs[i];
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            auto &cell = cells[i];
            SweepSpec one = spec;
            one.base = cell.config;
            one.circuit_grid.clear();
            one.hardware_grid.clear();
            try {
                cell.points = beta_sweep(one);
                cell.frontier = pareto_filter(cell.points);
            } catch (const std::exception &e) {
                cell.error = e.what();
            }
        }
    };

    const unsigned n = std::min<unsigned>(threads == 0 ? sweep_threads() : threads,
                                          static_cast<unsigned>(std::max<std::size_t>(1, cells.size())));
    if (n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (auto &t : pool) t.join();
    }
    return cells;
}

SweepSpec fig1a_spec(const AssemblyConfig &base) {
    SweepSpec s;
    s.base = base;
    for (double t : {1e6, 1e9, 1e12, 1e15}) {
        for (std::uint64_t q : {100u, 1000u, 10000u}) {
            s.circuit_grid.push_back({static_cast<std::uint64_t>(t), q});
        }
    }
    return s;
}

SweepSpec fig1b_spec(const AssemblyConfig &base) {
    SweepSpec s;
    s.base = base;
    s.base.circuit.t_count = 1'000'000'000'000ULL;
    s.base.circuit.q_logical = 100;
    s.base.circuit.t_depth = 200'000'000'000ULL;
    s.base.circuit.q_per_gate.clear();
    s.base.circuit.t_per_step.clear();
    s.circuit_grid.push_back({s.base.circuit.t_count, s.base.circuit.q_logical});
    for (double lam : {3.0, 5.0, 10.0}) {
        for (double ep : {1e-2, 1e-5, 1e-8}) s.hardware_grid.push_back({lam, base.hw.mu_mem, ep});
    }
    return s;
}

SweepSpec fig4_spec(const AssemblyConfig &base) {
    SweepSpec s;
    s.base = base;
    return s;
}

}  // namespace ftqc
