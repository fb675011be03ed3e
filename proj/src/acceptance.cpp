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

#include "recinfo/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "recinfo/recinfo.hpp"

namespace recinfo {

namespace {

class Checker {
   public:
    explicit Checker(AcceptanceRow& row) : row_(row) {}

    void eq(const std::string& what, long expected, long observed) {
        row_.checks.push_back({what, std::to_string(expected), std::to_string(observed), expected == observed});
    }

    void truth(const std::string& what, bool ok, const std::string& expected, const std::string& observed) {
        row_.checks.push_back({what, expected, observed, ok});
    }

   private:
    AcceptanceRow& row_;
};

StabilizerCode make(Model m, int L, Boundary bc = Boundary::pbc) { return build({m, L, bc}); }

std::string tag(const std::string& model, int L, const std::string& region) {
    return model + " L=" + std::to_string(L) + " " + region;
}

// S_A, minimal cut count and mu by the definition and NLSS routes.
void check_core(Checker& c, const std::string& name, const RecInfoReport& r, long s_a, long d_min, long mu) {
    c.eq(name + " S_A", s_a, r.entropy.S_A);
    if (d_min >= 0) {
        c.eq(name + " d_cut_min", d_min, static_cast<long>(r.d_cut_min));
    }
    c.eq(name + " mu_definition", mu, r.mu_definition);
    c.eq(name + " mu_nlss", mu, static_cast<long>(r.nlss.total()));
}

void row_toric2(AcceptanceRow& row) {
    Checker c(row);
    auto code = make(Model::toric2, 8);
    const int R = 3;
    auto region = parse_region(code, "square:3");
    auto r = compute_report(code, region);
    const std::string n = tag("toric2", 8, "square:3");
    check_core(c, n, r, 4 * R - 1, -1, 2);
    c.eq(n + " |S_cut|", 8 * R, static_cast<long>(r.cut_raw));
    c.eq(n + " mu_bound", 2, r.mu_bound);
}

void row_cluster(AcceptanceRow& row) {
    Checker c(row);
    {
        auto code = make(Model::cluster1, 16);
        auto r = compute_report(code, parse_region(code, "cube:5"));
        const std::string n = tag("cluster1", 16, "cube:5");
        check_core(c, n, r, 2, -1, 0);
    }
    {
        auto code = make(Model::cluster2, 12);
        auto r = compute_report(code, parse_region(code, "square:4"));
        const std::string n = tag("cluster2", 12, "square:4");
        c.eq(n + " mu_definition", 4, r.mu_definition);
        c.eq(n + " mu_nlss", 4, static_cast<long>(r.nlss.total()));
    }
    for (Model m : {Model::cluster2, Model::cluster3}) {
        auto code = make(m, 12);
        auto r = compute_report(code, parse_region(code, "smooth:4"));
        const std::string n = tag(model_name(m), 12, "smooth:4");
        c.eq(n + " mu_definition", 0, r.mu_definition);
        c.eq(n + " mu_nlss", 0, static_cast<long>(r.nlss.total()));
    }
}

void row_toric3(AcceptanceRow& row) {
    Checker c(row);
    auto code = make(Model::toric3, 8);
    for (int R : {3, 2}) {
        const std::string d = "cube:" + std::to_string(R);
        auto r = compute_report(code, parse_region(code, d));
        const std::string n = tag("toric3", 8, d);
        check_core(c, n, r, 6 * R * R + 1, 12 * R * R + 3, 1);
        c.eq(n + " mu_bound", 1, r.mu_bound);
    }
}

void row_xcube(AcceptanceRow& row) {
    Checker c(row);
    auto code = make(Model::xcube, 10);
    for (int R : {3, 1, 2}) {
        const std::string d = "cube:" + std::to_string(R);
        MuOptions o;
        o.want_generators = R == 3;
        auto r = compute_report(code, parse_region(code, d), o);
        const std::string n = tag("xcube", 10, d);
        const long mu = 6 * (R + 1);
        if (R == 3) {
            check_core(c, n, r, 6 * R * R + 9 * R - 4, 12 * R * R + 24 * R - 2, mu);
            c.eq(n + " mu_bound", mu, r.mu_bound);
            long z = 0;
            long x = 0;
            for (const auto& g : r.generators) {
                z += g.pauli_type == 'Z' ? 1 : 0;
                x += g.pauli_type == 'X' ? 1 : 0;
            }
            c.eq(n + " Z-type generators 3(R+1)-1", 3 * (R + 1) - 1, z);
            c.eq(n + " X-type generators 3R+6-2", 3 * R + 6 - 2, x);
        } else {
            c.eq(n + " mu_definition", mu, r.mu_definition);
            c.eq(n + " mu_nlss", mu, static_cast<long>(r.nlss.total()));
            c.eq(n + " mu_bound", mu, r.mu_bound);
        }
    }
}

void row_haah(AcceptanceRow& row, bool corrupt) {
    Checker c(row);
    const StabilizerMap map = corrupt ? corrupted_haah_map() : haah_map();
    auto code = map_to_code(map, 10);
    c.truth("haah L=10 map rows equal the lattice builder", same_stabilizer_rows(code, make(Model::haah, 10)), "true",
            same_stabilizer_rows(code, make(Model::haah, 10)) ? "true" : "false");
    for (int R : {3, 2, 4}) {
        const std::string d = "cube:" + std::to_string(R);
        auto r = compute_report(code, parse_region(code, d));
        const std::string n = tag("haah", 10, d);
        const long mu = 12 * R - 2;
        if (R == 3) {
            check_core(c, n, r, 6 * R * R - 6 * R + 2, 12 * R * R + 2, mu);
            c.truth(n + " mu_bound < mu", r.mu_bound < r.mu_definition, "< " + std::to_string(r.mu_definition),
                    std::to_string(r.mu_bound));
        } else {
            c.eq(n + " mu_definition", mu, r.mu_definition);
            c.eq(n + " mu_nlss", mu, static_cast<long>(r.nlss.total()));
        }
        c.eq("polynomial count R=" + std::to_string(R), mu, static_cast<long>(haah_nlss_count(map, R)));
    }
}

void row_conjectures(AcceptanceRow& row) {
    Checker c(row);
    {
        auto code = make(Model::xcube, 12);
        auto r = compute_report(code, parse_region(code, "cuboid:2x3x4"));
        const std::string n = tag("xcube", 12, "cuboid:2x3x4");
        c.eq(n + " mu_definition", 2 * (2 + 3 + 4 + 3), r.mu_definition);
        c.eq(n + " mu_nlss", 2 * (2 + 3 + 4 + 3), static_cast<long>(r.nlss.total()));
    }
    {
        auto code = make(Model::toric3, 10);
        auto r = compute_report(code, parse_region(code, "solidtorus:3x3x3:z:1"));
        const std::string n = tag("toric3", 10, "solidtorus:3x3x3:z:1");
        c.eq(n + " mu_definition (genus 1)", 3, r.mu_definition);
        c.eq(n + " mu_nlss (genus 1)", 3, static_cast<long>(r.nlss.total()));
    }
}

struct DenseInstance {
    Model model;
    int L;
    Boundary bc;
};

void row_dense(AcceptanceRow& row) {
    Checker c(row);
    std::vector<DenseInstance> inst{{Model::toric2, 2, Boundary::pbc}, {Model::toric2, 2, Boundary::obc},
                                    {Model::cluster2, 3, Boundary::pbc}, {Model::cluster2, 3, Boundary::obc}};
    for (int L = 3; L <= 12; ++L) {
        inst.push_back({Model::cluster1, L, Boundary::pbc});
        inst.push_back({Model::cluster1, L, Boundary::obc});
    }
    std::mt19937_64 rng(2026);
    for (const auto& in : inst) {
        auto code = make(in.model, in.L, in.bc);
        std::vector<std::size_t> a(std::max<std::size_t>(1, code.num_qubits() / 3));
        std::iota(a.begin(), a.end(), std::size_t{0});
        Region region = explicit_region(code, a, "first:" + std::to_string(a.size()));
        const long formula = entanglement_entropy(code, region).S_A;
        DenseOracleSetup setup = dense_oracle_setup(code, region);
        double worst = 0;
        for (int s = 0; s < 5; ++s) {
            EigenLabels labels;
            labels.k.assign(setup.stabilizer_basis.size(), false);
            labels.a.assign(setup.logicals.size(), false);
            if (s > 0) {
                for (std::size_t i = 0; i < labels.k.size(); ++i) {
                    labels.k[i] = rng() & 1;
                }
                for (std::size_t i = 0; i < labels.a.size(); ++i) {
                    labels.a[i] = rng() & 1;
                }
                labels.k[rng() % labels.k.size()] = true;  // at least one excitation
            }
            double e = dense_entropy_oracle(code, region, setup, labels, 17 + s);
            worst = std::max(worst, std::abs(e - static_cast<double>(formula)));
        }
        std::ostringstream obs;
        obs << "max |dense - S_A| = " << worst;
        c.truth(model_name(in.model) + " L=" + std::to_string(in.L) + " " + boundary_name(in.bc) + " 5 eigenstates",
                worst < 1e-9, "S_A=" + std::to_string(formula) + " within 1e-9", obs.str());
    }
}

StabilizerCode repetition_pair() {
    // Two disjoint three-qubit chains, each with the redundant Z0 Z2 term.
    std::vector<Stabilizer> s;
    for (std::size_t base : {0u, 3u}) {
        for (auto [i, j] : {std::pair{0u, 1u}, std::pair{1u, 2u}, std::pair{0u, 2u}}) {
            PauliOp p(6);
            p.set(base + i, 'Z');
            p.set(base + j, 'Z');
            s.push_back({"ZZ" + std::to_string(base + i) + std::to_string(base + j), "zz", p, {0, 0, 0}});
        }
        PauliOp x(6);
        for (std::size_t i = 0; i < 3; ++i) {
            x.set(base + i, 'X');
        }
        s.push_back({"XXX" + std::to_string(base), "xxx", x, {0, 0, 0}});
    }
    return StabilizerCode::custom(6, std::move(s));
}

void row_brute(AcceptanceRow& row) {
    Checker c(row);
    auto one = [&](const std::string& name, const StabilizerCode& code, std::vector<std::size_t> a) {
        Region region = explicit_region(code, std::move(a), name);
        const long brute = brute_force_mu(code, region);
        c.eq(name + " brute = mu_definition", brute, mu_definition(code, region));
        c.eq(name + " brute = mu_nlss", brute, static_cast<long>(mu_nlss(code, region).total()));
    };
    one("cluster1 L=6 obc {2,3}", make(Model::cluster1, 6, Boundary::obc), {2, 3});
    one("cluster1 L=7 obc {2,3,4}", make(Model::cluster1, 7, Boundary::obc), {2, 3, 4});
    one("repetition pair {0,1,3}", repetition_pair(), {0, 1, 3});
    one("toric2 L=2 obc {0,1}", make(Model::toric2, 2, Boundary::obc), {0, 1});
}

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (rng() & 1) {
                m.set(i, j, true);
            }
        }
    }
    return m;
}

void row_properties(AcceptanceRow& row) {
    Checker c(row);
    std::mt19937_64 rng(9);

    {
        auto code = make(Model::toric3, 4);
        auto ops = code.ops();
        std::size_t bad = 0;
        for (int t = 0; t < 200; ++t) {
            std::vector<std::size_t> s1;
            std::vector<std::size_t> s2;
            std::vector<std::size_t> sym;
            for (std::size_t i = 0; i < ops.size(); ++i) {
                bool a = rng() & 1;
                bool b = rng() & 1;
                if (a) s1.push_back(i);
                if (b) s2.push_back(i);
                if (a != b) sym.push_back(i);
            }
            const std::size_t n = code.num_qubits();
            bad += product(ops, s1, n) * product(ops, s2, n) == product(ops, sym, n) ? 0 : 1;
        }
        c.eq("symmetric-difference law, 200 pairs", 0, static_cast<long>(bad));
    }

    {
        std::size_t bad = 0;
        std::size_t built = 0;
        for (Model m : {Model::cluster1, Model::cluster2, Model::cluster3, Model::toric2, Model::toric3, Model::xcube,
                        Model::haah}) {
            for (Boundary bc : {Boundary::pbc, Boundary::obc}) {
                if (m == Model::haah && bc == Boundary::obc) {
                    continue;
                }
                bad += find_anticommuting_pair(make(m, 5, bc)) ? 1 : 0;
                ++built;
            }
        }
        c.eq("anticommuting pairs over " + std::to_string(built) + " builds", 0, static_cast<long>(bad));
    }

    {
        struct Inst {
            Model m;
            int L;
            Boundary bc;
            const char* region;
        };
        const std::vector<Inst> inst{
            {Model::toric2, 8, Boundary::pbc, "square:3"}, {Model::cluster2, 12, Boundary::pbc, "square:4"},
            {Model::toric3, 8, Boundary::pbc, "cube:2"},   {Model::xcube, 10, Boundary::pbc, "cube:2"},
            {Model::haah, 10, Boundary::pbc, "cube:2"},    {Model::cluster3, 10, Boundary::pbc, "cube:3"},
            {Model::toric2, 8, Boundary::obc, "square:3"}, {Model::cluster2, 8, Boundary::obc, "square:3"},
            {Model::toric3, 6, Boundary::obc, "cube:2"},   {Model::xcube, 6, Boundary::obc, "cube:2"},
        };
        std::size_t bad_entropy = 0;
        std::size_t bad_mu = 0;
        for (const auto& in : inst) {
            auto code = make(in.m, in.L, in.bc);
            auto r = compute_report(code, parse_region(code, in.region));
            bad_entropy += r.entropy.S_A == r.entropy.S_B ? 0 : 1;
            bad_mu += r.mu_definition >= 0 && r.mu_definition >= r.mu_bound ? 0 : 1;
        }
        const std::string n = " over " + std::to_string(inst.size()) + " instances";
        c.eq("S_A != S_B" + n, 0, static_cast<long>(bad_entropy));
        c.eq("mu < 0 or mu < mu_bound" + n, 0, static_cast<long>(bad_mu));
    }

    {
        struct Inst {
            Model m;
            int L;
            const char* region;
        };
        const std::vector<Inst> inst{{Model::toric2, 14, "square:3"},
                                     {Model::cluster2, 14, "square:3"},
                                     {Model::toric3, 12, "cube:2"},
                                     {Model::xcube, 12, "cube:2"},
                                     {Model::haah, 12, "cube:2"}};
        for (const auto& in : inst) {
            auto code = make(in.m, in.L);
            auto region = parse_region(code, in.region);
            std::ostringstream obs;
            bool same = true;
            std::size_t first = mu_nlss(code, region, 2).total();
            obs << first;
            for (int w : {3, 4}) {
                std::size_t v = mu_nlss(code, region, w).total();
                obs << "," << v;
                same = same && v == first;
            }
            c.truth("window independence w=2,3,4 " + tag(model_name(in.m), in.L, in.region), same, "equal",
                    obs.str());
        }
    }

    {
        auto code = make(Model::toric3, 3, Boundary::obc);
        auto region = cuboid_region(code, {1, 1, 1}, {1, 1, 1});
        auto cut = classify_cut(code, region);
        const std::size_t target = min_cut_count(cut, nontopological_subspace(code));
        std::vector<std::size_t> order(code.num_stabilizers());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::size_t stuck = 0;
        for (int t = 0; t < 50; ++t) {
            std::shuffle(order.begin(), order.end(), rng);
            stuck += greedy_exchange_cut_count(code, cut, order) == target ? 0 : 1;
        }
        c.eq("greedy exchange stuck above the minimum, 50 starts on toric3 L=3 obc", 0, static_cast<long>(stuck));
    }

    {
        std::size_t bad = 0;
        for (int t = 0; t < 500; ++t) {
            const std::size_t cols = 8 + rng() % 40;
            BitMatrix u = random_matrix(rng, 1 + rng() % 12, cols);
            BitMatrix w = random_matrix(rng, 1 + rng() % 12, cols);
            const std::size_t sum = rank(BitMatrix::stack(u, w));
            const std::size_t cap = rank(intersect(u, w));
            bad += rank(u) + rank(w) == sum + cap ? 0 : 1;
        }
        c.eq("dim U + dim W != dim(U+W) + dim(U^W), 500 pairs", 0, static_cast<long>(bad));
    }
}

struct RowSpec {
    int id;
    const char* title;
    bool conjecture;
    double budget;
    std::function<void(AcceptanceRow&)> run;
};

}  // namespace

bool AcceptanceRow::pass() const {
    if (!error.empty()) {
        return false;
    }
    if (budget_seconds > 0 && seconds > budget_seconds) {
        return false;
    }
    return std::all_of(checks.begin(), checks.end(), [](const AcceptanceCheck& c) { return c.pass; });
}

StabilizerMap corrupted_haah_map() {
    StabilizerMap m = haah_map();
    LaurentPoly3& alpha = m.entries[0][0];
    alpha.toggle({1, 0, 0});
    alpha.toggle({2, 0, 0});
    return m;
}

std::vector<AcceptanceRow> run_acceptance(const AcceptanceOptions& opts) {
    const std::vector<RowSpec> specs{
        {1, "toric2 square: entropy, cut count, mu = 2", false, 1, row_toric2},
        {2, "cluster models: segment, square corners, smooth cuts", false, 5, row_cluster},
        {3, "toric3 cube R=3, R=2: mu = 1", false, 10, row_toric3},
        {4, "xcube cube R=1..3: mu = 6(R+1), generator split", false, 20, row_xcube},
        {5, "haah cube R=2..4: mu = 12R-2, polynomial count", false, 30,
         [&](AcceptanceRow& r) { row_haah(r, opts.corrupt_haah); }},
        {6, "conjectures: xcube cuboid, toric3 genus 1", true, 0, row_conjectures},
        {7, "dense state-vector oracle, N <= 12", false, 10, row_dense},
        {8, "exhaustive basis search on tiny open codes", false, 10, row_brute},
        {9, "randomized property suites", false, 30, row_properties},
    };
    std::vector<AcceptanceRow> rows;
    for (const auto& s : specs) {
        if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), s.id) == opts.only.end()) {
            continue;
        }
        if (s.conjecture && !opts.include_conjectures) {
            continue;
        }
        AcceptanceRow row;
        row.id = s.id;
        row.title = s.title;
        row.conjecture = s.conjecture;
        row.budget_seconds = s.budget;
        auto t0 = std::chrono::steady_clock::now();
        try {
            s.run(row);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_ledger(const std::vector<AcceptanceRow>& rows, bool verbose) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    for (const auto& r : rows) {
        out << (r.pass() ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title;
        if (r.conjecture) {
            out << " (conjecture, non-blocking)";
        }
        out << "  " << r.seconds << "s";
        if (r.budget_seconds > 0) {
            out << " / " << r.budget_seconds << "s";
        }
        out << "\n";
        if (!r.error.empty()) {
            out << "      error: " << r.error << "\n";
        }
        for (const auto& c : r.checks) {
            if (verbose || !c.pass) {
                out << "      " << (c.pass ? "ok  " : "BAD ") << c.what << ": expected " << c.expected << ", got "
                    << c.observed << "\n";
            }
        }
    }
    return out.str();
}

bool required_rows_pass(const std::vector<AcceptanceRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const AcceptanceRow& r) { return r.conjecture || r.pass(); });
}

}  // namespace recinfo
