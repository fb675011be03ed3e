// Copyright 2026 The recinfo Authors
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

#ifndef RECINFO_REQUEST_HPP
#define RECINFO_REQUEST_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "recinfo/models.hpp"

namespace recinfo {

enum class OutputFormat { json, csv, table };

std::string format_name(OutputFormat f);
OutputFormat parse_format(const std::string& s);

/// Parsed command line of the front end.
struct RunRequest {
    std::string command = "report";
    Model model = Model::toric2;
    int L = 8;
    Boundary bc = Boundary::pbc;
    std::string region = "cube:1";
    std::vector<std::string> methods{"definition", "bound", "nlss"};
    std::optional<int> window;
    OutputFormat format = OutputFormat::json;

    bool wants(const std::string& method) const;
    bool operator==(const RunRequest&) const = default;
};

/// Expands "all" and validates names. Throws std::invalid_argument.
std::vector<std::string> parse_methods(const std::string& csv);

void to_json(nlohmann::json& j, const RunRequest& r);
void from_json(const nlohmann::json& j, RunRequest& r);

}  // namespace recinfo

#endif  // RECINFO_REQUEST_HPP
