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

// Command-line front end: assemble one architecture, sweep the slowdown
// factor, or run a parameter grid.
//
// Exit codes: 0 success, 1 internal error, 2 invalid input, 3 infeasible.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ftqc/assembler.hpp"
#include "ftqc/config.hpp"
#include "ftqc/report.hpp"
#include "ftqc/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;

struct Options {
    std::string config_path;
    std::string preset;
    double beta = 0.0;
    std::string beta_grid;
    std::string fig;
    std::string out;
    std::string format;
};

// Errors that map onto the invalid-input exit code.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ftqc::RunConfig resolve_config(const Options &o, const char *fallback_preset) {
    ftqc::RunConfig rc;
    if (!o.config_path.empty()) {
        auto doc = nlohmann::json::parse(read_file(o.config_path), nullptr, false);
        if (doc.is_discarded()) throw InvalidInput(o.config_path + ": invalid JSON");
        if (!o.preset.empty() && doc.is_object() && !doc.contains("preset") && !doc.contains("config")) {
            doc["preset"] = o.preset;
        }
        rc = ftqc::parse_config(doc);
    } else if (!o.preset.empty()) {
        rc = ftqc::preset_config(o.preset);
    } else if (fallback_preset) {
        rc = ftqc::preset_config(fallback_preset);
    } else {
        throw InvalidInput("one of --config or --preset is required");
    }

    if (o.beta != 0.0) {
        if (!(o.beta > 0.0)) throw InvalidInput("--beta must be > 0");
        rc.assembly.beta_target = o.beta;
    }
    if (!o.beta_grid.empty()) rc.beta_grid = ftqc::parse_beta_grid(o.beta_grid);
    if (!o.out.empty()) rc.output.dir = o.out;
    if (!o.format.empty()) {
        rc.output.json = rc.output.csv = false;
        std::stringstream ss(o.format);
        for (std::string f; std::getline(ss, f, ',');) {
            if (f == "json") {
                rc.output.json = true;
            } else if (f == "csv") {
                rc.output.csv = true;
            } else {
                throw InvalidInput("--format accepts json and/or csv, got \"" + f + "\"");
            }
        }
    }
    rc.assembly.validate();
    return rc;
}

std::filesystem::path output_file(const ftqc::RunConfig &rc, const std::string &name) {
    std::filesystem::path dir(rc.output.dir);
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write_json(const ftqc::RunConfig &rc, const std::string &name, const nlohmann::json &j) {
    const auto path = output_file(rc, name);
    std::ofstream out(path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("failed to write " + path.string());
    std::cout << "wrote " << path.string() << "\n";
}

template <typename Fn>
void write_csv(const ftqc::RunConfig &rc, const std::string &name, Fn &&rows) {
    const auto path = output_file(rc, name);
    std::ofstream out(path, std::ios::binary);
    out << ftqc::csv_header() << "\r\n";
    rows(out);
    if (!out) throw std::runtime_error("failed to write " + path.string());
    std::cout << "wrote " << path.string() << "\n";
}

int run_assemble(const Options &o) {
    const auto rc = resolve_config(o, nullptr);
    const auto plan = ftqc::assemble(rc.assembly);
    std::cout << ftqc::summary_table(plan, rc.assembly);
    // The JSON report is always written, whatever --format says.
    write_json(rc, "report.json", ftqc::assemble_report(rc, plan));
    return plan.feasible ? kExitOk : kExitInfeasible;
}

int run_sweep(const Options &o) {
    const auto rc = resolve_config(o, nullptr);
    auto spec = ftqc::fig4_spec(rc.assembly);
    spec.betas = rc.beta_grid.value_or(ftqc::BetaGrid{}).values();
    spec.extension_ratio = rc.beta_grid.value_or(ftqc::BetaGrid{}).extension_ratio();
    const auto points = ftqc::beta_sweep(spec);
    std::cout << ftqc::sweep_summary(points);
    write_json(rc, "sweep.json", ftqc::sweep_report(rc, points));
    if (rc.output.csv) {
        write_csv(rc, "sweep.csv", [&](std::ostream &os) { ftqc::write_csv_rows(os, 0, rc.assembly, points); });
    }
    return kExitOk;
}

int run_grid(const Options &o) {
    const auto rc = resolve_config(o, o.fig == "1b" ? "fig-1b" : "paper-2024");
    ftqc::SweepSpec spec;
    if (o.fig == "1a") {
        spec = ftqc::fig1a_spec(rc.assembly);
    } else if (o.fig == "1b") {
        spec = ftqc::fig1b_spec(rc.assembly);
    } else {
        spec = ftqc::fig4_spec(rc.assembly);
    }
    if (rc.beta_grid) {
        spec.betas = rc.beta_grid->values();
        spec.extension_ratio = rc.beta_grid->extension_ratio();
    }
    const auto cells = ftqc::grid_sweep(spec);

    std::size_t failed = 0;
    std::cout << "cell  T          Q      lambda_mem  e_prep      points  frontier  S range                 R range [s]\n";
    for (const auto &c : cells) {
        char line[320];
        if (!c.error.empty()) {
            ++failed;
            std::snprintf(line, sizeof line, "%4zu  %-9.3g  %-5llu  %-10.3g  %-10.3g  failed: %s\n", c.index,
                          static_cast<double>(c.config.circuit.t_count),
                          static_cast<unsigned long long>(c.config.circuit.q_logical), c.config.hw.lambda_mem,
                          c.config.pm.mu, c.error.c_str());
        } else {
            const auto &f = c.frontier;
            std::snprintf(line, sizeof line,
                          "%4zu  %-9.3g  %-5llu  %-10.3g  %-10.3g  %6zu  %8zu  %.3e..%.3e  %.3e..%.3e\n", c.index,
                          static_cast<double>(c.config.circuit.t_count),
                          static_cast<unsigned long long>(c.config.circuit.q_logical), c.config.hw.lambda_mem,
                          c.config.pm.mu, c.points.size(), f.size(), f.back().s_physical, f.front().s_physical,
                          f.front().r_seconds, f.back().r_seconds);
        }
        std::cout << line;
    }

    const std::string tag = "grid-" + o.fig;
    write_json(rc, tag + ".json", ftqc::grid_report(rc, o.fig, cells));
    if (rc.output.csv) {
        write_csv(rc, tag + ".csv", [&](std::ostream &os) {
            for (const auto &c : cells) ftqc::write_csv_rows(os, c.index, c.config, c.points);
        });
    }
    return failed == cells.size() ? kExitInfeasible : kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Sizes a magic state factory and core processor for a fault-tolerant quantum computer."};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--config", o.config_path, "JSON config (or a previous report) to load")
            ->check(CLI::ExistingFile);
        sub->add_option("--preset", o.preset, "named parameter set: paper-2024, fig-1b");
        sub->add_option("--beta", o.beta, "target slowdown factor beta (> 0)");
        sub->add_option("--beta-grid", o.beta_grid, "beta grid lo:hi:scale[:points], scale log|linear");
        sub->add_option("--out", o.out, "output directory (default ftqc-out)");
        sub->add_option("--format", o.format, "comma-separated output formats: json,csv");
    };

    auto *assemble = app.add_subcommand("assemble", "size one architecture at a single beta");
    auto *sweep = app.add_subcommand("sweep", "sweep beta and mark the space/time Pareto frontier");
    auto *grid = app.add_subcommand("grid", "run a circuit or hardware parameter grid");
    common(assemble);
    common(sweep);
    common(grid);
    grid->add_option("--fig", o.fig, "grid to run: 1a, 1b or 4")
        ->required()
        ->check(CLI::IsMember({"1a", "1b", "4"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (assemble->parsed()) return run_assemble(o);
        if (sweep->parsed()) return run_sweep(o);
        return run_grid(o);
    } catch (const ftqc::ConfigError &e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ftqc::ModelError &e) {
        if (e.kind() == ftqc::ModelErrorKind::infeasible) {
            std::cerr << "infeasible: " << e.what() << "\n";
            return kExitInfeasible;
        }
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const InvalidInput &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const ftqc::SweepError &e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const ftqc::InfeasibleError &e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
