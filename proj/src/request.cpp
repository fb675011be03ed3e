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

#include "recinfo/request.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace recinfo {

namespace {

const std::vector<std::string> kMethods{"definition", "bound", "nlss"};

}  // namespace

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::json:
            return "json";
        case OutputFormat::csv:
            return "csv";
        case OutputFormat::table:
            return "table";
    }
    return "?";
}

OutputFormat parse_format(const std::string& s) {
    for (OutputFormat f : {OutputFormat::json, OutputFormat::csv, OutputFormat::table}) {
        if (format_name(f) == s) {
            return f;
        }
    }
    throw std::invalid_argument("unknown output format '" + s + "'");
}

bool RunRequest::wants(const std::string& method) const {
    return std::find(methods.begin(), methods.end(), method) != methods.end();
}

std::vector<std::string> parse_methods(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "all") {
            return kMethods;
        }
        if (std::find(kMethods.begin(), kMethods.end(), item) == kMethods.end()) {
            throw std::invalid_argument("unknown method '" + item + "'");
        }
        if (std::find(out.begin(), out.end(), item) == out.end()) {
            out.push_back(item);
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("no methods selected");
    }
    // Canonical order keeps serialization stable.
    std::vector<std::string> sorted;
    for (const auto& m : kMethods) {
        if (std::find(out.begin(), out.end(), m) != out.end()) {
            sorted.push_back(m);
        }
    }
    return sorted;
}

void to_json(nlohmann::json& j, const RunRequest& r) {
    j = nlohmann::json{{"command", r.command},
                       {"model", model_name(r.model)},
                       {"L", r.L},
                       {"bc", boundary_name(r.bc)},
                       {"region", r.region},
                       {"methods", r.methods},
                       {"format", format_name(r.format)}};
    j["window"] = r.window ? nlohmann::json(*r.window) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, RunRequest& r) {
    r.command = j.at("command").get<std::string>();
    r.model = parse_model(j.at("model").get<std::string>());
    r.L = j.at("L").get<int>();
    r.bc = parse_boundary(j.at("bc").get<std::string>());
    r.region = j.at("region").get<std::string>();
    r.methods = j.at("methods").get<std::vector<std::string>>();
    r.format = parse_format(j.at("format").get<std::string>());
    if (j.contains("window") && !j.at("window").is_null()) {
        r.window = j.at("window").get<int>();
    } else {
        r.window.reset();
    }
}

}  // namespace recinfo
