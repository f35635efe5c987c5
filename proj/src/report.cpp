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

#include "ftqc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ftqc {

using nlohmann::json;

double round6(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    return std::stod(sci6(x));
}

std::string sci6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.5e", x);
    return buf;
}

namespace {

std::string join(const std::vector<std::string> &items, const char *sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

template <typename T>
std::string join_numbers(const std::vector<T> &xs) {
    std::vector<std::string> s;
    for (const auto &x : xs) s.push_back(std::to_string(x));
    return join(s, ";");
}

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

std::string csv_escape(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json ledger_to_json(const ChainErrorLedger &l) {
    json levels = json::array();
    for (const auto &e : l.levels) {
        levels.push_back({{"level", e.index},
                          {"distance", e.distance},
                          {"e_in", round6(e.e_in)},
                          {"e_cliff", round6(e.e_cliff)},
                          {"e_out", round6(e.e_out)},
                          {"e_grow", round6(e.e_grow)},
                          {"p_accept", round6(e.p_accept)},
                          {"p_accept_raw", round6(e.p_accept_raw)}});
    }
    return {{"e_prep", round6(l.e_prep)},
            {"e_grow_prep", round6(l.e_grow_prep)},
            {"levels", levels},
            {"e_msf", round6(l.e_msf)},
            {"feasible", l.feasible},
            {"reason", l.reason}};
}

json rates_to_json(const RateReport &r) {
    json levels = json::array();
    for (const auto &lr : r.levels) {
        levels.push_back({{"level", lr.index},
                          {"single_production", lr.single_production},
                          {"production", lr.production},
                          {"consumption", lr.consumption},
                          {"target_output", lr.target_output},
                          {"required_input", lr.required_input},
                          {"delivered", lr.delivered}});
    }
    return {{"c_core", r.c_core},         {"serial_rate", r.serial_rate}, {"target_core", r.target_core},
            {"d0_rate", r.d0_rate},       {"levels", levels},             {"delivered", r.delivered},
            {"beta_achieved", r.beta_achieved}};
}

json point_to_json(const ParetoPoint &p, const AssemblyConfig &base) {
    AssemblyConfig cfg = base;
    cfg.beta_target = p.beta_target;
    return {{"plan_id", p.plan_id},
            {"beta_target", p.beta_target},
            {"beta_achieved", p.beta_achieved},
            {"s_physical", p.s_physical},
            {"r_seconds", p.r_seconds},
            {"feasible", p.feasible},
            {"dominated", p.dominated},
            {"extension", p.extension},
            {"reason", p.reason},
            {"plan", plan_to_json(p.plan, cfg)}};
}

json frontier_ids(const std::vector<ParetoPoint> &points) {
    std::vector<std::pair<double, std::size_t>> keep;
    for (const auto &p : points) {
        if (p.feasible && !p.dominated) keep.emplace_back(p.r_seconds, p.plan_id);
    }
    std::sort(keep.begin(), keep.end());
    json ids = json::array();
    for (const auto &[_, id] : keep) ids.push_back(id);
    return ids;
}

}  // namespace

json plan_to_json(const ArchitecturePlan &plan, const AssemblyConfig &cfg) {
    json levels = json::array();
    for (const auto &lv : plan.levels) {
        levels.push_back({{"level", lv.index}, {"distance", lv.distance}, {"units", lv.units}});
    }
    json flow = json::array();
    for (const auto &f : plan.flow) {
        flow.push_back({{"level", f.level},
                        {"supply", f.supply},
                        {"demand", f.demand},
                        {"supply_meets_demand", f.supply_meets_demand},
                        {"balanced", f.balanced}});
    }
    json j = {{"feasible", plan.feasible},
              {"reason", plan.reason},
              {"failed_step", plan.failed_step ? json(to_string(*plan.failed_step)) : json(nullptr)},
              {"num_levels", plan.num_levels()},
              {"d0", plan.d0},
              {"d_core", plan.d_core},
              {"d_core_step1", plan.d_core_step1},
              {"levels", levels},
              {"k_cycles", plan.k_cycles},
              {"beta_target", plan.beta_target},
              {"beta_achieved", plan.beta_achieved},
              {"e_core_total", round6(plan.e_core_total)},
              {"e_msf_total", round6(plan.e_msf_total)},
              {"budget_margin", round6(plan.budget_margin)},
              {"s_core", plan.s_core},
              {"s_msf", plan.s_msf},
              {"s_physical", plan.s_physical},
              {"r_seconds", plan.r_seconds},
              {"local_search_moves", plan.local_search_moves},
              {"ledger", ledger_to_json(plan.ledger)},
              {"rates", rates_to_json(plan.rates)},
              {"steady_flow", flow}};
    if (plan.feasible) {
        // Alternative core error models; informational only.
        j["audit"] = {
            {"core_error_per_gate_surgery",
             round6(core_error_per_gate_surgery(cfg.circuit, plan.k_cycles, plan.d_core, plan.d_core, cfg.hw))},
            {"core_error_clifford_average",
             round6(core_error_clifford_average(cfg.circuit, plan.k_cycles, plan.d_core, plan.d_core, cfg.hw))}};
    }
    return j;
}

json assemble_report(const RunConfig &rc, const ArchitecturePlan &plan) {
    return {{"schema", kReportSchema},
            {"command", "assemble"},
            {"config", config_to_json(rc)},
            {"plan", plan_to_json(plan, rc.assembly)}};
}

json sweep_report(const RunConfig &rc, const std::vector<ParetoPoint> &points) {
    json pts = json::array();
    for (const auto &p : points) pts.push_back(point_to_json(p, rc.assembly));
    return {{"schema", kReportSchema},
            {"command", "sweep"},
            {"config", config_to_json(rc)},
            {"points", pts},
            {"pareto", frontier_ids(points)}};
}

json grid_report(const RunConfig &rc, const std::string &figure, const std::vector<GridCell> &cells) {
    json out = json::array();
    for (const auto &c : cells) {
        json pts = json::array();
        for (const auto &p : c.points) pts.push_back(point_to_json(p, c.config));
        out.push_back({{"cell", c.index},
                       {"circuit_index", c.circuit_index},
                       {"hardware_index", c.hardware_index},
                       {"t_count", c.config.circuit.t_count},
                       {"q_logical", c.config.circuit.q_logical},
                       {"lambda_mem", c.config.hw.lambda_mem},
                       {"mu_mem", c.config.hw.mu_mem},
                       {"mu_prep", c.config.pm.mu},
                       {"lambda_prep", c.config.pm.lambda},
                       {"error", c.error},
                       {"points", pts},
                       {"pareto", frontier_ids(c.points)}});
    }
    return {{"schema", kReportSchema},
            {"command", "grid"},
            {"figure", figure},
            {"config", config_to_json(rc)},
            {"cells", out}};
}

const std::vector<std::string> &csv_columns() {
    static const std::vector<std::string> cols = {
        "cell",         "t_count",       "q_logical",  "lambda_mem", "mu_mem",   "mu_prep",
        "lambda_prep",  "beta_target",   "beta_achieved", "s_physical", "r_seconds", "levels",
        "d_core",       "distances",     "units",      "feasible",   "pareto"};
    return cols;
}

std::string csv_header() { return join(csv_columns(), ","); }

void write_csv_rows(std::ostream &os, std::size_t cell, const AssemblyConfig &cfg,
                    const std::vector<ParetoPoint> &points) {
    for (const auto &p : points) {
        std::vector<std::string> row = {
            std::to_string(cell),
            std::to_string(cfg.circuit.t_count),
            std::to_string(cfg.circuit.q_logical),
            sci6(cfg.hw.lambda_mem),
            sci6(cfg.hw.mu_mem),
            sci6(cfg.pm.mu),
            sci6(cfg.pm.lambda),
            sci6(p.beta_target),
            p.feasible ? sci6(p.beta_achieved) : "",
            p.feasible ? fixed(p.s_physical, 0) : "",
            p.feasible ? sci6(p.r_seconds) : "",
            std::to_string(p.plan.num_levels()),
            std::to_string(p.plan.d_core),
            join_numbers(p.plan.distances()),
            join_numbers(p.plan.units()),
            p.feasible ? "true" : "false",
            p.feasible && !p.dominated ? "true" : "false",
        };
        for (auto &f : row) f = csv_escape(f);
        os << join(row, ",") << "\r\n";
    }
}

std::string summary_table(const ArchitecturePlan &plan, const AssemblyConfig &cfg) {
    std::ostringstream os;
    if (!plan.feasible) {
        os << "infeasible";
        if (plan.failed_step) os << " at step " << to_string(*plan.failed_step);
        os << ": " << plan.reason << "\n";
        return os.str();
    }
    std::vector<std::string> ds, us;
    for (const auto &lv : plan.levels) {
        ds.push_back(std::to_string(lv.distance));
        us.push_back(std::to_string(lv.units));
    }
    os << "beta target      " << fixed(cfg.beta_target, 4) << "  (achieved " << fixed(plan.beta_achieved, 4)
       << ")\n";
    os << "levels L         " << plan.num_levels() << "\n";
    os << "d0               " << plan.d0 << "\n";
    os << "distances        (" << join(ds, ", ") << ")\n";
    os << "units            (" << join(us, ", ") << ")\n";
    os << "d_core           " << plan.d_core << "  (step 1: " << plan.d_core_step1 << ")\n";
    os << "makespan K       " << fixed(plan.k_cycles, 0) << " cycles\n";
    os << "space S          " << fixed(plan.s_physical, 0) << " physical qubits  (core " << fixed(plan.s_core, 0)
       << ", factory " << fixed(plan.s_msf, 0) << ")\n";
    os << "runtime R        " << sci6(plan.r_seconds) << " s\n";
    os << "errors           core " << sci6(plan.e_core_total) << " + factory " << sci6(plan.e_msf_total)
       << "  (budget " << sci6(cfg.error_budget) << ", margin " << sci6(plan.budget_margin) << ")\n";
    return os.str();
}

std::string sweep_summary(const std::vector<ParetoPoint> &points) {
    std::ostringstream os;
    os << "      beta  d_core  L  distances        units            S              R [s]        pareto\n";
    for (const auto &p : points) {
        char line[256];
        std::snprintf(line, sizeof line, "%10.4g  %6d  %d  %-15s  %-15s  %-13s  %-12s  %s\n", p.beta_target,
                      p.plan.d_core, p.plan.num_levels(), join_numbers(p.plan.distances()).c_str(),
                      join_numbers(p.plan.units()).c_str(), p.feasible ? fixed(p.s_physical, 0).c_str() : "-",
                      p.feasible ? sci6(p.r_seconds).c_str() : "-",
                      p.feasible ? (p.dominated ? "" : "*") : p.reason.c_str());
        os << line;
    }
    return os.str();
}

}  // namespace ftqc
