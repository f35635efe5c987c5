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

#include "ftqc/config.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

namespace ftqc {

using nlohmann::json;

ConfigError::ConfigError(std::string path, const std::string &what)
    : std::runtime_error((path.empty() ? std::string("/") : path) + ": " + what), path_(std::move(path)) {}

namespace {

// Reads one JSON object, remembering which keys were consumed so the rest
// can be rejected as unknown.
class Section {
   public:
    Section(const json *obj, std::string path, std::vector<std::string> *missing, bool defaults_known)
        : obj_(obj), path_(std::move(path)), missing_(missing), defaults_known_(defaults_known) {
        if (obj_ && !obj_->is_object()) throw ConfigError(path_, "expected an object");
    }

    const std::string &path() const { return path_; }
    std::string at(std::string_view key) const { return path_ + "/" + std::string(key); }

    const json *find(std::string_view key) {
        seen_.insert(std::string(key));
        if (!obj_) return nullptr;
        auto it = obj_->find(std::string(key));
        return it == obj_->end() ? nullptr : &*it;
    }

    void number(std::string_view key, double &dst, bool required = false) {
        const json *v = find(key);
        if (!v) return note_missing(key, required);
        if (!v->is_number()) throw ConfigError(at(key), "expected a number");
        dst = v->get<double>();
        if (!std::isfinite(dst)) throw ConfigError(at(key), "expected a finite number");
    }

    template <typename Int>
    void integer(std::string_view key, Int &dst, bool required = false) {
        const json *v = find(key);
        if (!v) return note_missing(key, required);
        if (!v->is_number()) throw ConfigError(at(key), "expected an integer");
        if (v->is_number_unsigned()) {
            const auto u = v->get<std::uint64_t>();
            if (u > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) {
                throw ConfigError(at(key), "integer out of range");
            }
            dst = static_cast<Int>(u);
            return;
        }
        if (v->is_number_integer()) {
            const auto i = v->get<std::int64_t>();
            if (i < static_cast<std::int64_t>(std::numeric_limits<Int>::min())) {
                throw ConfigError(at(key), "integer out of range");
            }
            dst = static_cast<Int>(i);
            return;
        }
        // Accept 1e6-style floats when they are exact integers.
        const double d = v->get<double>();
        if (std::floor(d) != d || d < static_cast<double>(std::numeric_limits<Int>::min()) ||
            d > static_cast<double>(std::numeric_limits<Int>::max())) {
            throw ConfigError(at(key), "expected an integer");
        }
        dst = static_cast<Int>(d);
    }

    void string(std::string_view key, std::string &dst, bool required = false) {
        const json *v = find(key);
        if (!v) return note_missing(key, required);
        if (!v->is_string()) throw ConfigError(at(key), "expected a string");
        dst = v->get<std::string>();
    }

    void finish() const {
        if (!obj_) return;
        for (const auto &[k, _] : obj_->items()) {
            if (!seen_.count(k)) throw ConfigError(at(k), "unknown key");
        }
    }

   private:
    void note_missing(std::string_view key, bool required) {
        if (required && !defaults_known_) missing_->push_back(at(key));
    }

    const json *obj_;
    std::string path_;
    std::vector<std::string> *missing_;
    bool defaults_known_;
    std::set<std::string> seen_;
};

// Runs `check`, re-raising model errors against a config path.
void at_path(const std::string &path, const std::function<void()> &check) {
    try {
        check();
    } catch (const ModelError &e) {
        throw ConfigError(path, e.what());
    }
}

std::string_view prep_form_name(PrepForm f) { return f == PrepForm::linear ? "linear" : "exponential"; }
std::string_view growth_form_name(GrowthForm f) { return f == GrowthForm::zero ? "zero" : "memory_like"; }

AssemblyConfig paper_2024() {
    AssemblyConfig a;
    a.circuit.t_count = 1'000'000;
    a.circuit.t_depth = 200'000;
    a.circuit.q_logical = 1'000;
    a.circuit.alpha = 0.1;
    a.hw = HardwareModel{};
    a.hw.mu_mem = 3.8e-3;
    a.hw.lambda_mem = 10.0;
    a.hw.w_parity = 450e-9;
    a.pm = PrepModel{PrepForm::linear, 1.44e-4, -2.5e-5};
    a.gm = GrowthModel{};
    a.proto = DistillationProtocol{};
    a.error_budget = 0.01;
    a.beta_target = 1.0;
    a.cliff_model = CliffordModel::memory;
    return a;
}

BetaGrid read_beta_grid(const json &v, const std::string &path, std::vector<std::string> *missing) {
    if (v.is_string()) {
        try {
            return parse_beta_grid(v.get<std::string>());
        } catch (const ConfigError &e) {
            throw ConfigError(path, e.what());
        }
    }
    Section s(&v, path, missing, true);
    BetaGrid g;
    s.number("lo", g.lo);
    s.number("hi", g.hi);
    s.integer("points", g.points);
    std::string scale = g.log_scale ? "log" : "linear";
    s.string("scale", scale);
    if (scale != "log" && scale != "linear") throw ConfigError(s.at("scale"), "expected \"log\" or \"linear\"");
    g.log_scale = scale == "log";
    s.finish();
    at_path(path, [&] { g.validate(); });
    return g;
}

}  // namespace

std::vector<std::string> preset_names() { return {"paper-2024", "fig-1b"}; }

RunConfig preset_config(std::string_view name) {
    RunConfig rc;
    rc.preset = std::string(name);
    if (name == "paper-2024") {
        rc.assembly = paper_2024();
        return rc;
    }
    if (name == "fig-1b") {
        rc.assembly = paper_2024();
        rc.assembly.circuit.t_count = 1'000'000'000'000ULL;
        rc.assembly.circuit.t_depth = 200'000'000'000ULL;
        rc.assembly.circuit.q_logical = 100;
        rc.assembly.pm = PrepModel{PrepForm::linear, 1e-5, 0.0};
        return rc;
    }
    std::string known;
    for (const auto &n : preset_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("/preset", "unknown preset \"" + std::string(name) + "\" (known: " + known + ")");
}

BetaGrid parse_beta_grid(std::string_view text) {
    std::vector<std::string> parts;
    std::stringstream ss{std::string(text)};
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 4) {
        throw ConfigError("/optimizer/beta_grid", "expected lo:hi:scale[:points], got \"" + std::string(text) + "\"");
    }
    BetaGrid g;
    try {
        std::size_t used = 0;
        g.lo = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw std::invalid_argument("lo");
        g.hi = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw std::invalid_argument("hi");
        if (parts.size() == 4) {
            g.points = std::stoi(parts[3], &used);
            if (used != parts[3].size()) throw std::invalid_argument("points");
        }
    } catch (const std::logic_error &) {
        throw ConfigError("/optimizer/beta_grid", "malformed number in \"" + std::string(text) + "\"");
    }
    if (parts[2] == "log") {
        g.log_scale = true;
    } else if (parts[2] == "linear" || parts[2] == "lin") {
        g.log_scale = false;
    } else {
        throw ConfigError("/optimizer/beta_grid", "scale must be log or linear, got \"" + parts[2] + "\"");
    }
    at_path("/optimizer/beta_grid", [&] { g.validate(); });
    return g;
}

RunConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw ConfigError("", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(doc);
}

RunConfig parse_config(const json &input) {
    const json *docp = &input;
    if (!docp->is_object()) throw ConfigError("", "expected a JSON object");
    if (auto it = docp->find("schema"); it != docp->end() && *it == kReportSchema) {
        auto cfg = docp->find("config");
        if (cfg == docp->end()) throw ConfigError("/config", "report document has no config echo");
        docp = &*cfg;
        if (!docp->is_object()) throw ConfigError("/config", "expected an object");
    }
    const json &doc = *docp;

    std::vector<std::string> missing;
    Section top(&doc, "", &missing, true);
    std::string schema(kConfigSchema);
    top.string("schema", schema);
    if (schema != kConfigSchema) throw ConfigError("/schema", "unsupported schema \"" + schema + "\"");

    RunConfig rc;
    std::string preset;
    top.string("preset", preset);
    const bool have_preset = !preset.empty();
    if (have_preset) rc = preset_config(preset);
    auto &a = rc.assembly;

    auto section = [&](std::string_view key) {
        return Section(top.find(key), "/" + std::string(key), &missing, have_preset);
    };

    {
        auto s = section("hardware");
        auto &h = a.hw;
        s.number("mu_mem", h.mu_mem, true);
        s.number("lambda_mem", h.lambda_mem, true);
        s.number("mu_x", h.mu_x);
        s.number("lambda_x", h.lambda_x);
        s.number("mu_z", h.mu_z);
        s.number("lambda_z", h.lambda_z);
        s.number("mu_t", h.mu_t);
        s.number("lambda_t", h.lambda_t);
        s.number("mu_surg", h.mu_surg);
        s.number("lambda_surg", h.lambda_surg);
        s.number("tau_b", h.tau_b);
        s.number("tau_d", h.tau_d);
        s.number("w_parity", h.w_parity, true);
        s.finish();
    }
    {
        auto s = section("prep");
        std::string form(prep_form_name(a.pm.form));
        s.string("form", form);
        if (form == "linear") {
            a.pm.form = PrepForm::linear;
        } else if (form == "exponential") {
            a.pm.form = PrepForm::exponential;
        } else {
            throw ConfigError(s.at("form"), "expected \"linear\" or \"exponential\"");
        }
        s.number("mu", a.pm.mu);
        s.number("lambda", a.pm.lambda);
        s.finish();
    }
    {
        auto s = section("growth");
        std::string form(growth_form_name(a.gm.form));
        s.string("form", form);
        if (form == "zero") {
            a.gm.form = GrowthForm::zero;
        } else if (form == "memory_like") {
            a.gm.form = GrowthForm::memory_like;
        } else {
            throw ConfigError(s.at("form"), "expected \"zero\" or \"memory_like\"");
        }
        s.number("mu", a.gm.mu);
        s.number("lambda", a.gm.lambda);
        s.finish();
    }
    {
        auto s = section("protocol");
        auto &p = a.proto;
        s.integer("m_in", p.m_in);
        s.integer("n_out", p.n_out);
        s.integer("o_cycles", p.o_cycles);
        s.number("out_cubic_coeff", p.out_cubic_coeff);
        s.number("out_cliff_coeff", p.out_cliff_coeff);
        s.number("acc_in_coeff", p.acc_in_coeff);
        s.number("acc_cliff_coeff", p.acc_cliff_coeff);
        s.integer("tiles_per_unit", p.tiles_per_unit);
        s.integer("growth_tiles_per_unit", p.growth_tiles_per_unit);
        s.integer("first_level_extra_tiles", p.first_level_extra_tiles);
        s.integer("routing_per_unit", p.routing_per_unit);
        s.integer("routing_base", p.routing_base);
        s.integer("first_level_unit_tiles", p.first_level_unit_tiles);
        s.integer("prep_units_per_first_level_unit", p.prep_units_per_first_level_unit);
        s.number("prep_cycles_per_state", p.prep_cycles_per_state);
        s.finish();
    }
    {
        auto s = section("circuit");
        auto &c = a.circuit;
        s.integer("t_count", c.t_count, true);
        s.integer("t_depth", c.t_depth, true);
        s.integer("q_logical", c.q_logical, true);
        s.number("alpha", c.alpha);
        if (const json *v = s.find("q_per_gate")) {
            if (!v->is_array()) throw ConfigError(s.at("q_per_gate"), "expected an array");
            c.q_per_gate.clear();
            for (std::size_t i = 0; i < v->size(); ++i) {
                const auto &e = (*v)[i];
                if (!e.is_number_unsigned() || e.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
                    throw ConfigError(s.at("q_per_gate") + "/" + std::to_string(i), "expected a positive integer");
                }
                c.q_per_gate.push_back(e.get<std::uint32_t>());
            }
        }
        if (const json *v = s.find("t_per_step")) {
            if (!v->is_array()) throw ConfigError(s.at("t_per_step"), "expected an array");
            c.t_per_step.clear();
            for (std::size_t i = 0; i < v->size(); ++i) {
                const auto &e = (*v)[i];
                if (!e.is_number_unsigned()) {
                    throw ConfigError(s.at("t_per_step") + "/" + std::to_string(i), "expected a non-negative integer");
                }
                c.t_per_step.push_back(e.get<std::uint64_t>());
            }
        }
        s.finish();
    }
    {
        auto s = section("optimizer");
        s.number("error_budget", a.error_budget, true);
        s.number("beta", a.beta_target);
        if (const json *v = s.find("beta_grid")) {
            if (v->is_null()) {
                rc.beta_grid.reset();
            } else {
                rc.beta_grid = read_beta_grid(*v, s.at("beta_grid"), &missing);
            }
        }
        s.integer("d_max", a.d_max);
        s.integer("l_max", a.l_max);
        std::string cm(to_string(a.cliff_model));
        s.string("cliff_model", cm);
        const auto parsed = parse_clifford_model(cm);
        if (!parsed) throw ConfigError(s.at("cliff_model"), "expected \"memory\", \"clifford\" or \"surgery\"");
        a.cliff_model = *parsed;
        s.integer("bus_len_msf", a.bus_len_msf);
        s.finish();

        if (!(a.error_budget > 0.0 && a.error_budget < 1.0) && missing.empty()) {
            throw ConfigError(s.at("error_budget"), "must lie in (0, 1)");
        }
        if (!(a.beta_target > 0.0)) throw ConfigError(s.at("beta"), "must be > 0");
        if (!is_valid_distance(a.d_max)) throw ConfigError(s.at("d_max"), "must be odd and >= 3");
        if (a.l_max < 0) throw ConfigError(s.at("l_max"), "must be >= 0");
        if (a.bus_len_msf < 0) throw ConfigError(s.at("bus_len_msf"), "must be >= 0");
    }
    {
        auto s = section("output");
        s.string("dir", rc.output.dir);
        if (rc.output.dir.empty()) throw ConfigError(s.at("dir"), "must not be empty");
        if (const json *v = s.find("formats")) {
            if (!v->is_array()) throw ConfigError(s.at("formats"), "expected an array of \"json\"/\"csv\"");
            rc.output.json = rc.output.csv = false;
            for (std::size_t i = 0; i < v->size(); ++i) {
                const auto &e = (*v)[i];
                if (e == "json") {
                    rc.output.json = true;
                } else if (e == "csv") {
                    rc.output.csv = true;
                } else {
                    throw ConfigError(s.at("formats") + "/" + std::to_string(i), "expected \"json\" or \"csv\"");
                }
            }
        }
        s.finish();
    }
    top.finish();

    if (!missing.empty()) {
        std::string list;
        for (const auto &m : missing) list += (list.empty() ? "" : ", ") + m;
        throw ConfigError("", "missing required fields: " + list + " (or set \"preset\")");
    }

    at_path("/hardware", [&] { a.hw.validate(); });
    at_path("/prep", [&] { a.pm.validate(); });
    at_path("/growth", [&] { a.gm.validate(); });
    at_path("/protocol", [&] { a.proto.validate(); });
    at_path("/circuit", [&] { a.circuit.validate(); });
    at_path("/optimizer", [&] { a.validate(); });
    return rc;
}

json config_to_json(const RunConfig &rc) {
    const auto &a = rc.assembly;
    json j;
    j["schema"] = kConfigSchema;
    if (!rc.preset.empty()) j["preset"] = rc.preset;
    j["hardware"] = {
        {"mu_mem", a.hw.mu_mem},     {"lambda_mem", a.hw.lambda_mem}, {"mu_x", a.hw.mu_x},
        {"lambda_x", a.hw.lambda_x}, {"mu_z", a.hw.mu_z},             {"lambda_z", a.hw.lambda_z},
        {"mu_t", a.hw.mu_t},         {"lambda_t", a.hw.lambda_t},     {"mu_surg", a.hw.mu_surg},
        {"lambda_surg", a.hw.lambda_surg}, {"tau_b", a.hw.tau_b},     {"tau_d", a.hw.tau_d},
        {"w_parity", a.hw.w_parity},
    };
    j["prep"] = {{"form", prep_form_name(a.pm.form)}, {"mu", a.pm.mu}, {"lambda", a.pm.lambda}};
    j["growth"] = {{"form", growth_form_name(a.gm.form)}, {"mu", a.gm.mu}, {"lambda", a.gm.lambda}};
    const auto &p = a.proto;
    j["protocol"] = {
        {"m_in", p.m_in},
        {"n_out", p.n_out},
        {"o_cycles", p.o_cycles},
        {"out_cubic_coeff", p.out_cubic_coeff},
        {"out_cliff_coeff", p.out_cliff_coeff},
        {"acc_in_coeff", p.acc_in_coeff},
        {"acc_cliff_coeff", p.acc_cliff_coeff},
        {"tiles_per_unit", p.tiles_per_unit},
        {"growth_tiles_per_unit", p.growth_tiles_per_unit},
        {"first_level_extra_tiles", p.first_level_extra_tiles},
        {"routing_per_unit", p.routing_per_unit},
        {"routing_base", p.routing_base},
        {"first_level_unit_tiles", p.first_level_unit_tiles},
        {"prep_units_per_first_level_unit", p.prep_units_per_first_level_unit},
        {"prep_cycles_per_state", p.prep_cycles_per_state},
    };
    j["circuit"] = {
        {"t_count", a.circuit.t_count},
        {"t_depth", a.circuit.t_depth},
        {"q_logical", a.circuit.q_logical},
        {"alpha", a.circuit.alpha},
    };
    if (!a.circuit.q_per_gate.empty()) j["circuit"]["q_per_gate"] = a.circuit.q_per_gate;
    if (!a.circuit.t_per_step.empty()) j["circuit"]["t_per_step"] = a.circuit.t_per_step;
    j["optimizer"] = {
        {"error_budget", a.error_budget},
        {"beta", a.beta_target},
        {"d_max", a.d_max},
        {"l_max", a.l_max},
        {"cliff_model", to_string(a.cliff_model)},
        {"bus_len_msf", a.bus_len_msf},
    };
    if (rc.beta_grid) {
        j["optimizer"]["beta_grid"] = {{"lo", rc.beta_grid->lo},
                                       {"hi", rc.beta_grid->hi},
                                       {"points", rc.beta_grid->points},
                                       {"scale", rc.beta_grid->log_scale ? "log" : "linear"}};
    }
    json formats = json::array();
    if (rc.output.json) formats.push_back("json");
    if (rc.output.csv) formats.push_back("csv");
    j["output"] = {{"dir", rc.output.dir}, {"formats", formats}};
    return j;
}

}  // namespace ftqc
