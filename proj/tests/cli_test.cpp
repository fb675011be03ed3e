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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "recinfo/request.hpp"

using namespace recinfo;

namespace {

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(RECINFO_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST(Cli, ReportJson) {
    CliRun r = run_cli("report --model toric3 --L 8 --region cube:3");
    ASSERT_EQ(r.status, 0) << r.out;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["entropy"]["S_A"], 55);
    EXPECT_EQ(j["recinfo"]["d_cut_min"], 111);
    EXPECT_EQ(j["recinfo"]["mu_definition"], 1);
    EXPECT_EQ(j["recinfo"]["mu_bound"], 1);
    EXPECT_EQ(j["recinfo"]["mu_nlss"]["total"], 1);
    EXPECT_EQ(j["agreement"], true);
    EXPECT_EQ(j["request"]["model"], "toric3");
}

TEST(Cli, ReportClusterSquareAndGenerators) {
    CliRun r = run_cli("report --model cluster2 --L 12 --region square:4 --generators");
    ASSERT_EQ(r.status, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["recinfo"]["mu_definition"], 4);
    EXPECT_EQ(j["generators"].size(), 4u);
}

TEST(Cli, ReportCsvHasHeaderAndValues) {
    CliRun r = run_cli("report --model toric2 --L 8 --region square:3 --format csv");
    ASSERT_EQ(r.status, 0);
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].size(), rows[1].size());
}

TEST(Cli, GuardsExitWithUsageError) {
    EXPECT_EQ(run_cli("report --model haah --L 9 --region cube:10").status, 1);
    EXPECT_EQ(run_cli("report --model toric2 --L 8 --region square:3 --methods entropy").status, 1);
    EXPECT_EQ(run_cli("report --model toric2 --L 8 --region square:3 --format yaml").status, 1);
    EXPECT_EQ(run_cli("report --model surface --L 8").status, 1);
    EXPECT_EQ(run_cli("report --L 8").status, 1);
}

TEST(Cli, SweepMatchesClosedForms) {
    CliRun xc = run_cli("sweep --models xcube --R 1..3");
    ASSERT_EQ(xc.status, 0) << xc.out;
    auto rows = csv_rows(xc.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0][5], "mu_def");
    const char* want_x[] = {"12", "18", "24"};
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(rows[i + 1][5], want_x[i]);
        EXPECT_EQ(rows[i + 1][7], want_x[i]);
        EXPECT_EQ(rows[i + 1][9], "yes");
    }
    CliRun hh = run_cli("sweep --models haah --R 2..4");
    ASSERT_EQ(hh.status, 0) << hh.out;
    rows = csv_rows(hh.out);
    ASSERT_EQ(rows.size(), 4u);
    const char* want_h[] = {"22", "34", "46"};
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(rows[i + 1][5], want_h[i]);
        EXPECT_EQ(rows[i + 1][8], want_h[i]);
    }
}

TEST(Cli, VerifySelectedRows) {
    CliRun ok = run_cli("verify --criteria 1,3 --quiet");
    EXPECT_EQ(ok.status, 0) << ok.out;
    EXPECT_NE(ok.out.find("PASS  [1]"), std::string::npos);
    CliRun bad = run_cli("verify --criteria 5 --corrupt-haah");
    EXPECT_NE(bad.status, 0);
    EXPECT_NE(bad.out.find("FAIL  [5]"), std::string::npos) << bad.out;
}

TEST(Cli, ExportTable) {
    CliRun r = run_cli("export --model toric2 --L 3 --bc obc");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 18);
    CliRun j = run_cli("export --model cluster1 --L 4 --format json");
    ASSERT_EQ(j.status, 0);
    EXPECT_EQ(nlohmann::json::parse(j.out)["stabilizers"].size(), 4u);
}

TEST(RunRequest, JsonRoundTrip) {
    RunRequest r;
    r.model = Model::xcube;
    r.L = 10;
    r.bc = Boundary::obc;
    r.region = "cuboid:2x3x4";
    r.methods = parse_methods("nlss,definition");
    r.window = 2;
    r.format = OutputFormat::table;
    nlohmann::json j = r;
    EXPECT_EQ(j.get<RunRequest>(), r);
    r.window.reset();
    j = r;
    EXPECT_TRUE(j["window"].is_null());
    EXPECT_EQ(j.get<RunRequest>(), r);
}

TEST(RunRequest, Methods) {
    EXPECT_EQ(parse_methods("all"), (std::vector<std::string>{"definition", "bound", "nlss"}));
    EXPECT_EQ(parse_methods("nlss,bound"), (std::vector<std::string>{"bound", "nlss"}));
    EXPECT_THROW(parse_methods("entropy"), std::invalid_argument);
    EXPECT_THROW(parse_format("yaml"), std::invalid_argument);
    EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
}
