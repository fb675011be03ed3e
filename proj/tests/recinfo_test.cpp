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

#include <algorithm>
#include <iterator>
#include <numeric>
#include <random>

#include "recinfo/recinfo.hpp"

using namespace recinfo;

namespace {

struct Fixture {
    StabilizerCode code;
    Region region;
    CutClassification cut;
};

Fixture make(Model m, int L, const std::string& d, Boundary bc = Boundary::pbc) {
    auto code = build({m, L, bc});
    auto region = parse_region(code, d);
    auto cut = classify_cut(code, region);
    return {std::move(code), std::move(region), std::move(cut)};
}

bool in_group(const StabilizerCode& code, const PauliOp& p) {
    return membership(p.symplectic(), code.stabilizer_matrix());
}

bool supported_in(const PauliOp& p, const BitVector& mask) { return (p.support_mask() & mask) == p.support_mask(); }

BitVector complement_mask(const Region& r) {
    BitVector all(r.mask.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all.set(i);
    }
    return all ^ r.mask;
}

// Cube constraints of toric3 whose plaquettes split as 4 cut, 1 in A, 1 in
// B: the cut part is a closed tube straddling the boundary.
std::vector<std::vector<std::size_t>> straddling_tubes(const Fixture& f) {
    std::vector<bool> is_cut(f.code.num_stabilizers(), false);
    std::vector<bool> is_a(f.code.num_stabilizers(), false);
    for (std::size_t i : f.cut.cut) {
        is_cut[i] = true;
    }
    for (std::size_t i : f.cut.in_A) {
        is_a[i] = true;
    }
    std::vector<std::vector<std::size_t>> tubes;
    for (const auto& cube : declared_local_constraints(f.code)) {
        std::vector<std::size_t> tube;
        std::size_t in_a = 0;
        for (std::size_t i : cube) {
            if (is_cut[i]) {
                tube.push_back(i);
            }
            in_a += is_a[i] ? 1 : 0;
        }
        if (tube.size() == 4 && in_a == 1) {
            tubes.push_back(tube);
        }
    }
    return tubes;
}

}  // namespace

TEST(MinCut, ClosedForms) {
    for (int R : {2, 3}) {
        auto t3 = make(Model::toric3, 8, "cube:" + std::to_string(R));
        EXPECT_EQ(min_cut_count(t3.cut, nontopological_subspace(t3.code)), static_cast<std::size_t>(12 * R * R + 3));
        auto xc = make(Model::xcube, 10, "cube:" + std::to_string(R));
        EXPECT_EQ(min_cut_count(xc.cut, nontopological_subspace(xc.code)),
                  static_cast<std::size_t>(12 * R * R + 24 * R - 2));
        auto hh = make(Model::haah, 10, "cube:" + std::to_string(R));
        EXPECT_EQ(min_cut_count(hh.cut, nontopological_subspace(hh.code)), static_cast<std::size_t>(12 * R * R + 2));
    }
}

TEST(MuDefinition, ClosedForms) {
    auto t2 = make(Model::toric2, 8, "square:3");
    EXPECT_EQ(mu_definition(t2.code, t2.region), 2);
    auto c1 = make(Model::cluster1, 16, "cube:5");
    EXPECT_EQ(mu_definition(c1.code, c1.region), 0);
    auto hh = make(Model::haah, 10, "cube:2");
    EXPECT_EQ(mu_definition(hh.code, hh.region), 22);
}

TEST(MuBound, TightForToricAndXCubeLooseForHaah) {
    auto t3 = make(Model::toric3, 8, "cube:3");
    EXPECT_EQ(mu_bound(t3.code, t3.region), 1);
    auto xc = make(Model::xcube, 10, "cube:2");
    EXPECT_EQ(mu_bound(xc.code, xc.region), 18);
    auto hh = make(Model::haah, 10, "cube:3");
    EXPECT_LT(mu_bound(hh.code, hh.region), mu_definition(hh.code, hh.region));
}

TEST(MuNlss, CountsAndCssSplit) {
    auto t3 = make(Model::toric3, 8, "cube:2");
    auto n3 = mu_nlss(t3.code, t3.region);
    EXPECT_EQ(n3.total(), 1u);
    EXPECT_TRUE(n3.css);
    EXPECT_EQ(n3.x_type, 1u);

    auto c2 = make(Model::cluster2, 12, "square:4");
    auto nc = mu_nlss(c2.code, c2.region);
    EXPECT_EQ(nc.total(), 4u);
    EXPECT_FALSE(nc.css);

    auto hh = make(Model::haah, 10, "cube:3");
    auto nh = mu_nlss(hh.code, hh.region);
    EXPECT_EQ(nh.from_A, 34u);
    EXPECT_EQ(nh.from_B, 0u);
    EXPECT_EQ(nh.x_type, nh.z_type);
}

TEST(MuNlss, WindowIndependence) {
    for (const auto& [m, L, d] : std::vector<std::tuple<Model, int, std::string>>{
             {Model::toric2, 14, "square:3"}, {Model::toric3, 12, "cube:2"}, {Model::xcube, 12, "cube:2"}}) {
        auto f = make(m, L, d);
        const std::size_t ref = mu_nlss(f.code, f.region, 2).total();
        for (int w : {3, 4}) {
            EXPECT_EQ(mu_nlss(f.code, f.region, w).total(), ref) << model_name(m) << " w=" << w;
        }
    }
}

TEST(Window, GuardAndDefault) {
    auto f = make(Model::toric3, 8, "cube:3");
    EXPECT_EQ(default_window(f.code, f.region).value_or(-1), 1);
    EXPECT_THROW(check_window(f.code, f.region, 2), std::invalid_argument);
    EXPECT_THROW(mu_nlss(f.code, f.region, 2), std::invalid_argument);
    auto g = make(Model::toric2, 8, "square:3");
    EXPECT_EQ(default_window(g.code, g.region).value_or(-1), 1);
    EXPECT_THROW(check_window(g.code, g.region, 2), std::invalid_argument);
    auto c = make(Model::cluster2, 12, "square:4");
    EXPECT_EQ(default_window(c.code, c.region).value_or(-1), 3);
    auto tight = make(Model::toric2, 5, "square:2");
    EXPECT_FALSE(default_window(tight.code, tight.region).has_value());
    auto o = make(Model::toric2, 8, "square:3", Boundary::obc);
    EXPECT_EQ(mu_nlss(o.code, o.region).window, 0);
    EXPECT_EQ(window_stabilizers(o.code, o.region, 1).size(), o.code.num_stabilizers());
}

TEST(Generators, ToricCodeLoops) {
    auto f = make(Model::toric2, 8, "square:3");
    auto gens = nlss_generators(f.code, f.region);
    ASSERT_EQ(gens.size(), 2u);
    std::string types;
    BitVector b = complement_mask(f.region);
    for (const auto& g : gens) {
        types += g.pauli_type;
        EXPECT_EQ(g.side, NlssSide::from_A);
        EXPECT_TRUE(in_group(f.code, g.op));
        EXPECT_TRUE(supported_in(g.op, b));
        EXPECT_FALSE(g.op.is_identity());
    }
    std::sort(types.begin(), types.end());
    EXPECT_EQ(types, "XZ");
}

TEST(Generators, XCubeRibbonSplit) {
    const int R = 2;
    auto f = make(Model::xcube, 10, "cube:2");
    auto gens = nlss_generators(f.code, f.region);
    std::size_t x = 0;
    std::size_t z = 0;
    for (const auto& g : gens) {
        x += g.pauli_type == 'X' ? 1 : 0;
        z += g.pauli_type == 'Z' ? 1 : 0;
        EXPECT_TRUE(in_group(f.code, g.op));
    }
    EXPECT_EQ(z, static_cast<std::size_t>(3 * (R + 1) - 1));
    EXPECT_EQ(x, static_cast<std::size_t>(3 * R + 6 - 2));
}

TEST(Generators, HaahAllFromA) {
    auto f = make(Model::haah, 10, "cube:2");
    auto gens = nlss_generators(f.code, f.region);
    EXPECT_EQ(gens.size(), 22u);
    BitVector b = complement_mask(f.region);
    for (const auto& g : gens) {
        EXPECT_EQ(g.side, NlssSide::from_A);
        EXPECT_TRUE(supported_in(g.op, b));
    }
    // Independent modulo the B-side stabilizers of the window. Modulo all
    // of S_B some become dependent through the global product relations.
    auto w = window_stabilizers(f.code, f.region, default_window(f.code, f.region).value());
    std::vector<std::size_t> wb;
    std::set_intersection(w.begin(), w.end(), f.cut.in_B.begin(), f.cut.in_B.end(), std::back_inserter(wb));
    BitMatrix s_b = f.code.stabilizer_matrix().select_rows(wb);
    BitMatrix g_rows(0, 2 * f.code.num_qubits());
    for (const auto& g : gens) {
        g_rows.append_row(g.op.symplectic());
    }
    EXPECT_EQ(quotient_dim(g_rows, s_b), gens.size());
}

TEST(GaussLaw, ToricCodeStarGenerator) {
    auto f = make(Model::toric2, 8, "square:3");
    for (const auto& g : nlss_generators(f.code, f.region)) {
        GaussLaw law = gauss_law_report(g, f.code, f.region);
        EXPECT_TRUE(law.holds);
        EXPECT_EQ(law.bulk_product, law.boundary_restricted);
        if (g.pauli_type == 'X') {
            // Electric law: every star inside A takes part.
            std::size_t stars_in_a = 0;
            for (std::size_t i : f.cut.in_A) {
                stars_in_a += f.code.stabilizer(i).type == "star" ? 1 : 0;
            }
            EXPECT_EQ(law.bulk.size(), stars_in_a);
            EXPECT_GT(law.boundary.size(), 0u);
        }
    }
}

TEST(GaussLaw, ToricCode3DMembrane) {
    auto f = make(Model::toric3, 8, "cube:2");
    auto gens = nlss_generators(f.code, f.region);
    ASSERT_EQ(gens.size(), 1u);
    EXPECT_EQ(gens[0].pauli_type, 'X');
    GaussLaw law = gauss_law_report(gens[0], f.code, f.region);
    EXPECT_TRUE(law.holds);
    std::vector<std::size_t> stars;
    for (std::size_t i : f.cut.in_A) {
        if (f.code.stabilizer(i).type == "star") {
            stars.push_back(i);
        }
    }
    std::vector<std::size_t> bulk = law.bulk;
    std::sort(bulk.begin(), bulk.end());
    EXPECT_EQ(bulk, stars);
    // The product of all bulk stars lives on the edges leaving the cube
    // surface, which are inside A.
    EXPECT_TRUE(supported_in(law.bulk_product, f.region.mask));
    EXPECT_FALSE(law.bulk_product.is_identity());
}

TEST(Minimality, NaiveBasisAdmitsStraddlingTube) {
    auto f = make(Model::toric3, 8, "cube:2");
    BitMatrix nontop = nontopological_subspace(f.code);
    auto tubes = straddling_tubes(f);
    ASSERT_FALSE(tubes.empty());
    auto v = verify_minimality(f.code, f.region, f.cut.cut, {tubes.front()}, nontop);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_TRUE(is_constraint(f.code, v[0].constraint));
}

TEST(Minimality, MinimalBasisAdmitsNoTube) {
    auto f = make(Model::toric3, 8, "cube:2");
    BitMatrix nontop = nontopological_subspace(f.code);
    auto basis = minimal_cut_basis(f.code, f.region, nontop);
    EXPECT_EQ(basis.size(), min_cut_count(f.cut, nontop));
    std::vector<std::vector<std::size_t>> inside;
    for (const auto& t : straddling_tubes(f)) {
        if (std::all_of(t.begin(), t.end(), [&](std::size_t i) {
                return std::find(basis.begin(), basis.end(), i) != basis.end();
            })) {
            inside.push_back(t);
        }
    }
    EXPECT_TRUE(inside.empty());
    // No non-topological constraint has a nonzero cut part inside the
    // basis: dropping the basis columns loses no rank.
    std::sort(basis.begin(), basis.end());
    std::vector<std::size_t> rest;
    std::set_difference(f.cut.cut.begin(), f.cut.cut.end(), basis.begin(), basis.end(), std::back_inserter(rest));
    EXPECT_EQ(rank(nontop.select_columns(rest)), rank(nontop.select_columns(f.cut.cut)));
    // A from-A NLSS generating set restricted to the basis is accepted.
    for (const auto& g : nlss_generators(f.code, f.region)) {
        std::vector<std::size_t> cut_part;
        for (std::size_t i : g.generating_set) {
            if (std::find(f.cut.cut.begin(), f.cut.cut.end(), i) != f.cut.cut.end()) {
                cut_part.push_back(i);
            }
        }
        bool within = std::all_of(cut_part.begin(), cut_part.end(), [&](std::size_t i) {
            return std::find(basis.begin(), basis.end(), i) != basis.end();
        });
        if (within) {
            EXPECT_TRUE(verify_minimality(f.code, f.region, basis, {cut_part}, nontop).empty());
        }
    }
}

TEST(Minimality, RejectsBadCandidates) {
    auto f = make(Model::toric3, 8, "cube:2");
    BitMatrix nontop = nontopological_subspace(f.code);
    EXPECT_THROW(verify_minimality(f.code, f.region, f.cut.cut, {{f.cut.in_A.front()}}, nontop),
                 std::invalid_argument);
    EXPECT_THROW(verify_minimality(f.code, f.region, f.cut.cut, {{f.cut.cut.front()}}, nontop),
                 std::invalid_argument);
}

TEST(BruteForce, AgreesWithFormulas) {
    {
        auto code = build({Model::cluster1, 6, Boundary::obc});
        auto region = explicit_region(code, {2, 3}, "middle");
        EXPECT_EQ(brute_force_mu(code, region), 0);
        EXPECT_EQ(mu_definition(code, region), 0);
        EXPECT_EQ(mu_nlss(code, region).total(), 0u);
    }
    {
        // Two three-qubit repetition chains with a redundant check each.
        std::vector<Stabilizer> s;
        for (std::size_t base : {0u, 3u}) {
            for (auto [i, j] : {std::pair{0u, 1u}, std::pair{1u, 2u}, std::pair{0u, 2u}}) {
                PauliOp p(6);
                p.set(base + i, 'Z');
                p.set(base + j, 'Z');
                s.push_back({"zz", "zz", p, {}});
            }
            PauliOp x(6);
            for (std::size_t i = 0; i < 3; ++i) {
                x.set(base + i, 'X');
            }
            s.push_back({"xxx", "xxx", x, {}});
        }
        auto code = StabilizerCode::custom(6, std::move(s));
        for (std::vector<std::size_t> a : {std::vector<std::size_t>{0, 1, 3}, {0, 3}, {1, 4, 5}}) {
            auto region = explicit_region(code, a, "cut");
            const long brute = brute_force_mu(code, region);
            EXPECT_EQ(mu_definition(code, region), brute);
            EXPECT_EQ(static_cast<long>(mu_nlss(code, region).total()), brute);
        }
    }
    {
        auto code = build({Model::toric2, 2, Boundary::obc});
        auto region = explicit_region(code, {0, 1}, "pair");
        EXPECT_EQ(brute_force_mu(code, region), mu_definition(code, region));
        EXPECT_EQ(brute_force_mu(code, region), static_cast<long>(mu_nlss(code, region).total()));
    }
}

TEST(BruteForce, RefusesLargeCodes) {
    auto f = make(Model::toric2, 8, "square:3");
    EXPECT_THROW(brute_force_mu(f.code, f.region), std::invalid_argument);
}

TEST(GreedyExchange, NoLocalMinima) {
    auto code = build({Model::toric3, 3, Boundary::obc});
    auto region = cuboid_region(code, {1, 1, 1}, {1, 1, 1});
    auto cut = classify_cut(code, region);
    const std::size_t target = min_cut_count(cut, nontopological_subspace(code));
    std::vector<std::size_t> order(code.num_stabilizers());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(50);
    for (int t = 0; t < 50; ++t) {
        std::shuffle(order.begin(), order.end(), rng);
        EXPECT_EQ(greedy_exchange_cut_count(code, cut, order), target);
    }
    // The worst start puts every cut stabilizer first.
    std::stable_partition(order.begin(), order.end(), [&](std::size_t i) {
        return std::find(cut.cut.begin(), cut.cut.end(), i) != cut.cut.end();
    });
    EXPECT_EQ(greedy_exchange_cut_count(code, cut, order), target);
}

TEST(Report, AllMethodsAgree) {
    for (const auto& [m, L, d] : std::vector<std::tuple<Model, int, std::string>>{
             {Model::toric2, 8, "square:3"}, {Model::toric3, 8, "cube:3"}, {Model::xcube, 10, "cube:3"},
             {Model::haah, 10, "cube:3"},    {Model::cluster2, 12, "square:4"}}) {
        auto f = make(m, L, d);
        auto r = compute_report(f.code, f.region);
        EXPECT_TRUE(r.agreement) << model_name(m);
        EXPECT_EQ(r.entropy.S_A, r.entropy.S_B);
        EXPECT_GE(r.mu_definition, r.mu_bound);
    }
}
