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

// Command-line front end: report, sweep, verify, export.
//
// Exit codes: 0 success, 1 usage or guard error, 2 method disagreement or
// failed verification.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "recinfo/acceptance.hpp"
#include "recinfo/recinfo.hpp"
#include "recinfo/request.hpp"

using nlohmann::json;
using namespace recinfo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagree = 2;

struct MethodOutcome {
    std::optional<long> definition;
    std::optional<long> bound;
    std::optional<NlssResult> nlss;
    std::size_t d_cut_min = 0;
    bool agreement = true;
};

MethodOutcome run_methods(const StabilizerCode& code, const Region& region, const RunRequest& req) {
    MethodOutcome out;
    const EntropyReport e = entanglement_entropy(code, region);
    if (req.wants("definition") || req.wants("bound")) {
        const BitMatrix nontop = nontopological_subspace(code);
        const CutClassification cut = classify_cut(code, region);
        out.d_cut_min = min_cut_count(cut, nontop);
        if (req.wants("definition")) {
            out.definition = static_cast<long>(out.d_cut_min) - e.S_A - e.S_B;
        }
        if (req.wants("bound")) {
            out.bound = static_cast<long>(cut_topological_dim(code, cut, nontop));
        }
    }
    if (req.wants("nlss")) {
        out.nlss = mu_nlss(code, region, req.window);
    }
    if (out.definition && out.nlss) {
        out.agreement = out.agreement && *out.definition == static_cast<long>(out.nlss->total());
    }
    if (out.definition && out.bound) {
        out.agreement = out.agreement && *out.definition >= *out.bound;
    }
    if (out.definition) {
        out.agreement = out.agreement && *out.definition >= 0;
    }
    return out;
}

json labels(const StabilizerCode& code, const std::vector<std::size_t>& idx) {
    json a = json::array();
    for (std::size_t i : idx) {
        a.push_back(code.stabilizer(i).label);
    }
    return a;
}

json generators_json(const StabilizerCode& code, const Region& region, const RunRequest& req) {
    json out = json::array();
    for (const auto& g : nlss_generators(code, region, req.window)) {
        GaussLaw law = gauss_law_report(g, code, region);
        out.push_back({{"side", g.side == NlssSide::from_A ? "from_A" : "from_B"},
                       {"pauli_type", std::string(1, g.pauli_type)},
                       {"operator", code.render(g.op)},
                       {"generating_set", labels(code, g.generating_set)},
                       {"gauss_law",
                        {{"bulk", labels(code, law.bulk)},
                         {"boundary", labels(code, law.boundary)},
                         {"bulk_product", code.render(law.bulk_product)},
                         {"boundary_restricted", code.render(law.boundary_restricted)},
                         {"holds", law.holds}}}});
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> flat_fields(const json& doc) {
    std::vector<std::pair<std::string, std::string>> f;
    auto put = [&](const std::string& k, const json& v) { f.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump()); };
    put("model", doc["request"]["model"]);
    put("L", doc["request"]["L"]);
    put("bc", doc["request"]["bc"]);
    put("region", doc["region"]["descriptor"]);
    put("size_A", doc["entropy"]["size_A"]);
    put("S_A", doc["entropy"]["S_A"]);
    put("S_B", doc["entropy"]["S_B"]);
    put("cut_raw", doc["cut"]["cut"]);
    for (const char* k : {"d_cut_min", "mu_definition", "mu_bound"}) {
        if (doc["recinfo"].contains(k)) {
            put(k, doc["recinfo"][k]);
        }
    }
    if (doc["recinfo"].contains("mu_nlss")) {
        put("mu_nlss", doc["recinfo"]["mu_nlss"]["total"]);
        put("nlss_window", doc["recinfo"]["mu_nlss"]["window"]);
    }
    put("agreement", doc["agreement"]);
    return f;
}

int cmd_report(const RunRequest& req, bool with_generators) {
    StabilizerCode code = build({req.model, req.L, req.bc});
    Region region = parse_region(code, req.region);
    ValidationReport v = validate(code);
    EntropyReport e = entanglement_entropy(code, region);
    CutClassification cut = classify_cut(code, region);
    MethodOutcome m = run_methods(code, region, req);

    json doc;
    doc["schema"] = 1;
    doc["request"] = req;
    doc["code"] = {{"n_qubits", v.n_qubits},  {"n_stabilizers", v.n_stabilizers}, {"d_G", v.d_G},
                   {"d_logical", v.d_logical}, {"dim_C", v.dim_C},                 {"valid", v.ok}};
    doc["region"] = {{"descriptor", region.descriptor}, {"size", region.qubits.size()}, {"fallback", region.fallback}};
    doc["cut"] = {{"in_A", cut.in_A.size()}, {"in_B", cut.in_B.size()}, {"cut", cut.cut.size()}};
    doc["entropy"] = {{"size_A", e.size_A}, {"size_B", e.size_B},         {"d_GA", e.d_GA}, {"d_GB", e.d_GB},
                      {"d_logical", e.d_logical}, {"S_A", e.S_A}, {"S_B", e.S_B}};
    json ri = json::object();
    if (m.definition || m.bound) {
        ri["d_cut_min"] = m.d_cut_min;
    }
    if (m.definition) {
        ri["mu_definition"] = *m.definition;
    }
    if (m.bound) {
        ri["mu_bound"] = *m.bound;
    }
    if (m.nlss) {
        ri["mu_nlss"] = {{"total", m.nlss->total()}, {"from_A", m.nlss->from_A}, {"from_B", m.nlss->from_B},
                         {"x_type", m.nlss->x_type}, {"z_type", m.nlss->z_type}, {"css", m.nlss->css},
                         {"window", m.nlss->window}};
    }
    doc["recinfo"] = ri;
    doc["agreement"] = m.agreement;
    if (with_generators) {
        doc["generators"] = generators_json(code, region, req);
    }

    switch (req.format) {
        case OutputFormat::json:
            std::cout << doc.dump(2) << "\n";
            break;
        case OutputFormat::csv: {
            auto f = flat_fields(doc);
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::cout << (i ? "," : "") << f[i].first;
            }
            std::cout << "\n";
            for (std::size_t i = 0; i < f.size(); ++i) {
                std::cout << (i ? "," : "") << f[i].second;
            }
            std::cout << "\n";
            break;
        }
        case OutputFormat::table:
            for (const auto& [k, val] : flat_fields(doc)) {
                std::cout << std::left << std::setw(16) << k << val << "\n";
            }
            break;
    }
    if (!m.agreement) {
        std::cerr << "recinfo: methods disagree\n";
        return kExitDisagree;
    }
    return kExitOk;
}

std::optional<long> closed_form(Model m, int R) {
    switch (m) {
        case Model::cluster1:
            return 0;
        case Model::cluster2:
            return 4;
        case Model::toric2:
            return 2;
        case Model::toric3:
            return 1;
        case Model::xcube:
            return 6L * (R + 1);
        case Model::haah:
            return 12L * R - 2;
        default:
            return std::nullopt;
    }
}

struct SweepRow {
    Model model = Model::toric2;
    int R = 0;
    int L = 0;
    RecInfoReport report;
    std::optional<long> expected;
    std::string error;
    bool match() const {
        return error.empty() && report.agreement && (!expected || *expected == report.mu_definition);
    }
};

std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad R range '" + s + "', expected A..B");
    }
}

int thread_budget() {
    int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("RECINFO_THREADS")) {
        try {
            n = std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            throw std::invalid_argument("RECINFO_THREADS must be a positive integer");
        }
    }
    return n;
}

int cmd_sweep(const std::vector<std::string>& models, const std::string& range, std::optional<int> L_opt,
              Boundary bc, OutputFormat fmt) {
    auto [lo, hi] = parse_range(range);
    if (lo < 1 || hi < lo) {
        throw std::invalid_argument("bad R range '" + range + "'");
    }
    std::vector<SweepRow> rows;
    for (const auto& name : models) {
        Model m = parse_model(name);
        for (int R = lo; R <= hi; ++R) {
            SweepRow row;
            row.model = m;
            row.R = R;
            row.L = L_opt.value_or(2 * hi + 4);
            row.expected = closed_form(m, R);
            rows.push_back(row);
        }
    }
    // Validate every row before spending time on any of them.
    for (auto& row : rows) {
        StabilizerCode code = build({row.model, row.L, bc});
        (void)cube_region(code, row.R);
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            auto& row = rows[i];
            try {
                StabilizerCode code = build({row.model, row.L, bc});
                row.report = compute_report(code, cube_region(code, row.R));
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
    };
    const int n = std::min<int>(thread_budget(), static_cast<int>(rows.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }

    bool ok = std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.match(); });
    auto cf = [](const SweepRow& r) { return r.expected ? std::to_string(*r.expected) : std::string("-"); };
    if (fmt == OutputFormat::json) {
        json doc;
        doc["schema"] = 1;
        doc["rows"] = json::array();
        for (const auto& r : rows) {
            json j = {{"model", model_name(r.model)}, {"R", r.R},          {"L", r.L},
                      {"match", r.match()},           {"error", r.error}};
            if (r.error.empty()) {
                j["S_A"] = r.report.entropy.S_A;
                j["d_cut_min"] = r.report.d_cut_min;
                j["mu_definition"] = r.report.mu_definition;
                j["mu_bound"] = r.report.mu_bound;
                j["mu_nlss"] = r.report.nlss.total();
            }
            j["closed_form"] = r.expected ? json(*r.expected) : json(nullptr);
            doc["rows"].push_back(j);
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        const bool md = fmt == OutputFormat::table;
        const char* sep = md ? " | " : ",";
        if (md) {
            std::cout << "| model | R | L | S_A | d_cut_min | mu_def | mu_bound | mu_nlss | closed_form | match |\n"
                      << "|---|---|---|---|---|---|---|---|---|---|\n";
        } else {
            std::cout << "model,R,L,S_A,d_cut_min,mu_def,mu_bound,mu_nlss,closed_form,match\n";
        }
        for (const auto& r : rows) {
            std::cout << (md ? "| " : "") << model_name(r.model) << sep << r.R << sep << r.L << sep;
            if (r.error.empty()) {
                std::cout << r.report.entropy.S_A << sep << r.report.d_cut_min << sep << r.report.mu_definition << sep
                          << r.report.mu_bound << sep << r.report.nlss.total();
            } else {
                std::cout << "error" << sep << sep << sep << sep;
            }
            std::cout << sep << cf(r) << sep << (r.match() ? "yes" : "no") << (md ? " |" : "") << "\n";
            if (!r.error.empty()) {
                std::cerr << "recinfo: " << model_name(r.model) << " R=" << r.R << ": " << r.error << "\n";
            }
        }
    }
    return ok ? kExitOk : kExitDisagree;
}

int cmd_verify(bool conjectures, bool corrupt, const std::vector<int>& only, bool quiet) {
    AcceptanceOptions o;
    o.include_conjectures = conjectures;
    o.corrupt_haah = corrupt;
    o.only = only;
    auto rows = run_acceptance(o);
    std::cout << format_ledger(rows, !quiet);
    const bool ok = required_rows_pass(rows);
    std::cout << (ok ? "verify: all required rows pass\n" : "verify: required rows failed\n");
    return ok ? kExitOk : kExitDisagree;
}

int cmd_export(Model model, int L, Boundary bc, OutputFormat fmt) {
    StabilizerCode code = build({model, L, bc});
    if (fmt != OutputFormat::json) {
        std::cout << export_table(code);
        return kExitOk;
    }
    json doc;
    doc["schema"] = 1;
    doc["model"] = model_name(model);
    doc["L"] = L;
    doc["bc"] = boundary_name(bc);
    doc["n_qubits"] = code.num_qubits();
    doc["stabilizers"] = json::array();
    for (const auto& s : code.stabilizers()) {
        doc["stabilizers"].push_back(
            {{"label", s.label}, {"type", s.type}, {"x", s.op.x().ones()}, {"z", s.op.z().ones()}});
    }
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact entanglement and recoverable-information calculator for stabilizer codes"};
    app.require_subcommand(1);

    RunRequest req;
    std::string model = "toric2";
    std::string bc = "pbc";
    std::string methods = "all";
    std::string format = "json";
    std::optional<int> window;
    bool with_generators = false;

    auto* report = app.add_subcommand("report", "Entropy and mu for one region");
    report->add_option("--model", model, "cluster1|cluster2|cluster3|toric2|toric3|xcube|haah")->required();
    report->add_option("--L", req.L, "Linear lattice size")->required();
    report->add_option("--bc", bc, "pbc or obc");
    report->add_option("--region", req.region, "cube:R, square:R, smooth:R, cuboid:AxBxC, solidtorus:AxBxC:axis:len")
        ->required();
    report->add_option("--methods", methods, "Comma list of definition,bound,nlss or all");
    report->add_option("--window", window, "NLSS window width");
    report->add_option("--format", format, "json, csv or table");
    report->add_flag("--generators", with_generators, "List NLSS generators and their Gauss-law relations");

    std::string sweep_models = "toric2";
    std::string sweep_format = "csv";
    std::string export_format = "table";
    std::string range = "1..3";
    std::optional<int> sweep_L;
    auto* sweep = app.add_subcommand("sweep", "mu over a range of cube sizes");
    sweep->add_option("--models", sweep_models, "Comma-separated model names");
    sweep->add_option("--R", range, "Range A..B");
    sweep->add_option("--L", sweep_L, "Lattice size, default 2*max(R)+4");
    sweep->add_option("--bc", bc, "pbc or obc");
    sweep->add_option("--format", sweep_format, "csv, table (markdown) or json")->default_val("csv");

    bool conjectures = false;
    bool corrupt = false;
    bool quiet = false;
    std::vector<int> only;
    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_flag("--include-conjectures", conjectures, "Also check the conjectured laws");
    verify->add_flag("--corrupt-haah", corrupt, "Negative control: flip one monomial of the Haah map");
    verify->add_option("--criteria", only, "Only these row ids")->delimiter(',');
    verify->add_flag("--quiet", quiet, "Only show failing checks");

    auto* exp = app.add_subcommand("export", "Print the stabilizer table");
    exp->add_option("--model", model)->required();
    exp->add_option("--L", req.L)->required();
    exp->add_option("--bc", bc);
    exp->add_option("--format", export_format, "table or json")->default_val("table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*report) {
            req.command = "report";
            req.model = parse_model(model);
            req.bc = parse_boundary(bc);
            req.methods = parse_methods(methods);
            req.window = window;
            req.format = parse_format(format);
            return cmd_report(req, with_generators);
        }
        if (*sweep) {
            std::vector<std::string> names;
            std::stringstream ss(sweep_models);
            for (std::string s; std::getline(ss, s, ',');) {
                names.push_back(s);
            }
            return cmd_sweep(names, range, sweep_L, parse_boundary(bc), parse_format(sweep_format));
        }
        if (*verify) {
            return cmd_verify(conjectures, corrupt, only, quiet);
        }
        if (*exp) {
            return cmd_export(parse_model(model), req.L, parse_boundary(bc), parse_format(export_format));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "recinfo: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "recinfo: internal check failed: " << e.what() << "\n";
        return kExitDisagree;
    } catch (const std::exception& e) {
        std::cerr << "recinfo: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
