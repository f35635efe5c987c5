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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ftqc/assembler.hpp"
#include "ftqc/sweep.hpp"

namespace ftqc {

inline constexpr std::string_view kReportSchema = "ftqc-assembler/report/1";
inline constexpr std::string_view kConfigSchema = "ftqc-assembler/config/1";

/// Schema violation; `path()` is a JSON pointer to the offending value.
class ConfigError : public std::runtime_error {
   public:
    ConfigError(std::string path, const std::string &what);
    const std::string &path() const noexcept { return path_; }

   private:
    std::string path_;
};

struct OutputOptions {
    std::string dir = "ftqc-out";
    bool json = true;
    bool csv = true;

    bool operator==(const OutputOptions &) const = default;
};

struct RunConfig {
    std::string preset;  // empty when built from explicit fields only
    AssemblyConfig assembly;
    std::optional<BetaGrid> beta_grid;
    OutputOptions output;

    bool operator==(const RunConfig &) const = default;
};

std::vector<std::string> preset_names();

/// Throws ConfigError for an unknown name.
RunConfig preset_config(std::string_view name);

/// Parses a config document, or a report document (its "config" member).
/// Fields absent from the document keep the preset's value when "preset" is
/// given; otherwise the required fields must all be present.
RunConfig parse_config(std::string_view text);
RunConfig parse_config(const nlohmann::json &doc);

/// Complete echo: every field, full precision. parse_config(config_to_json(c)) == c.
nlohmann::json config_to_json(const RunConfig &cfg);

/// "lo:hi:scale[:points]" with scale log|linear.
BetaGrid parse_beta_grid(std::string_view text);

}  // namespace ftqc
