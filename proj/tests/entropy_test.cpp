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

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "recinfo/entropy.hpp"

using namespace recinfo;

namespace {

// For K_v = Z_v X_{N(v)} the code state is a graph state after a global
// Hadamard, and the entropy of A is the F2 rank of the adjacency block
// between A and its complement.
std::size_t graph_state_entropy(const StabilizerCode& code, const Region& region) {
    const std::size_t n = code.num_qubits();
    oracle::Mat gamma;
    for (std::size_t a : region.qubits) {
        oracle::Row row;
        const PauliOp& k = code.stabilizer(a).op;  // stabilizer a sits on vertex a
        for (std::size_t b = 0; b < n; ++b) {
            if (!region.contains(b)) {
                row.push_back(k.x().get(b) ? 1 : 0);
            }
        }
        gamma.push_back(row);
    }
    return oracle::naive_rank(gamma);
}

// Number of stabilizer-group elements supported in A, by enumerating all
// 2^|S| products.
std::size_t enumerate_group_in(const StabilizerCode& code, const Region& region) {
    auto ops = code.ops();
    std::set<BitVector> seen;
    const std::size_t s = ops.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        PauliOp p(code.num_qubits());
        for (std::size_t i = 0; i < s; ++i) {
            if ((mask >> i) & 1) {
                p *= ops[i];
            }
        }
        if ((p.support_mask() & region.mask) == p.support_mask()) {
            seen.insert(p.symplectic());
        }
    }
    return seen.size();
}

}  // namespace

TEST(SubgroupDim, MatchesEnumerationOnSmallCodes) {
    std::mt19937_64 rng(6);
    for (auto [m, L, bc] : std::vector<std::tuple<Model, int, Boundary>>{{Model::toric2, 2, Boundary::pbc},
                                                                          {Model::toric2, 2, Boundary::obc},
                                                                          {Model::cluster2, 3, Boundary::pbc},
                                                                          {Model::cluster1, 12, Boundary::obc}}) {
        auto code = build({m, L, bc});
        for (int t = 0; t < 10; ++t) {
            std::vector<std::size_t> a;
            for (std::size_t q = 0; q < code.num_qubits(); ++q) {
                if (rng() % 3 != 0) {
                    a.push_back(q);
                }
            }
            if (a.empty() || a.size() == code.num_qubits()) {
                continue;
            }
            auto region = explicit_region(code, a, "random");
            EXPECT_EQ(std::size_t{1} << subgroup_dim_in(code, region), enumerate_group_in(code, region));
        }
    }
}

TEST(SubgroupDim, ClusterSegmentKeepsInteriorStabilizers) {
    auto code = build({Model::cluster1, 16, Boundary::pbc});
    for (int R : {3, 4, 5, 6}) {
        auto region = parse_region(code, "cube:" + std::to_string(R));
        EXPECT_EQ(subgroup_dim_in(code, region), static_cast<std::size_t>(R - 2));
    }
}

TEST(Entropy, ToricCode2D) {
    auto code = build({Model::toric2, 10, Boundary::pbc});
    for (int R : {1, 2, 3, 4}) {
        auto e = entanglement_entropy(code, parse_region(code, "square:" + std::to_string(R)));
        EXPECT_EQ(e.S_A, 4 * R - 1);
        EXPECT_EQ(e.S_B, e.S_A);
        EXPECT_EQ(e.d_logical, 2u);
    }
}

TEST(Entropy, ToricCode3D) {
    auto code = build({Model::toric3, 8, Boundary::pbc});
    for (int R : {1, 2, 3}) {
        auto e = entanglement_entropy(code, parse_region(code, "cube:" + std::to_string(R)));
        EXPECT_EQ(e.S_A, 6 * R * R + 1);
        EXPECT_EQ(static_cast<long>(e.size_A) - static_cast<long>(e.d_GA), 6 * R * R + 1);
    }
}

TEST(Entropy, XCube) {
    auto code = build({Model::xcube, 10, Boundary::pbc});
    for (int R : {1, 2, 3}) {
        auto e = entanglement_entropy(code, parse_region(code, "cube:" + std::to_string(R)));
        EXPECT_EQ(e.S_A, 6 * R * R + 9 * R - 4) << R;
    }
}

TEST(Entropy, Haah) {
    auto code = build({Model::haah, 10, Boundary::pbc});
    for (int R : {2, 3, 4}) {
        auto e = entanglement_entropy(code, parse_region(code, "cube:" + std::to_string(R)));
        EXPECT_EQ(e.S_A, 6 * R * R - 6 * R + 2) << R;
    }
}

TEST(Entropy, ClusterMatchesGraphStateRank) {
    std::mt19937_64 rng(41);
    for (auto [m, L] : std::vector<std::pair<Model, int>>{{Model::cluster1, 16}, {Model::cluster2, 12}, {Model::cluster3, 10}}) {
        auto code = build({m, L, Boundary::pbc});
        std::vector<Region> regions{parse_region(code, "cube:3")};
        if (m != Model::cluster1) {
            regions.push_back(parse_region(code, "smooth:4"));
        }
        for (int t = 0; t < 5; ++t) {
            std::vector<std::size_t> a;
            for (std::size_t q = 0; q < code.num_qubits(); ++q) {
                if (rng() % 4 == 0) {
                    a.push_back(q);
                }
            }
            regions.push_back(explicit_region(code, a, "random"));
        }
        for (const auto& r : regions) {
            EXPECT_EQ(entanglement_entropy(code, r).S_A, static_cast<long>(graph_state_entropy(code, r)))
                << model_name(m) << " " << r.descriptor;
        }
    }
}

TEST(LogicalDim, KnownModels) {
    EXPECT_EQ(logical_dim(build({Model::toric2, 6, Boundary::pbc})), 2u);
    EXPECT_EQ(logical_dim(build({Model::toric2, 6, Boundary::obc})), 0u);
    for (Model m : {Model::cluster1, Model::cluster2, Model::cluster3}) {
        EXPECT_EQ(logical_dim(build({m, 4, Boundary::pbc})), 0u);
    }
}

TEST(DenseOracle, ToricCodeMinimalInstance) {
    auto code = build({Model::toric2, 2, Boundary::pbc});
    auto region = explicit_region(code, {0, 1}, "pair");
    const long formula = entanglement_entropy(code, region).S_A;
    auto setup = dense_oracle_setup(code, region);
    EXPECT_EQ(setup.logicals.size(), 2u);
    EigenLabels ground;
    ground.k.assign(setup.stabilizer_basis.size(), false);
    ground.a.assign(setup.logicals.size(), false);
    EXPECT_NEAR(dense_entropy_oracle(code, region, setup, ground), static_cast<double>(formula), 1e-9);
    for (std::size_t i = 0; i < ground.k.size(); ++i) {
        EigenLabels excited = ground;
        excited.k[i] = true;
        EXPECT_NEAR(dense_entropy_oracle(code, region, setup, excited, 3 + i), static_cast<double>(formula), 1e-9);
    }
}

TEST(DenseOracle, RandomRegionsOnSmallCodes) {
    std::mt19937_64 rng(77);
    for (auto [m, L, bc] : std::vector<std::tuple<Model, int, Boundary>>{{Model::cluster1, 10, Boundary::pbc},
                                                                          {Model::cluster2, 3, Boundary::obc},
                                                                          {Model::toric2, 2, Boundary::obc}}) {
        auto code = build({m, L, bc});
        for (int t = 0; t < 4; ++t) {
            std::vector<std::size_t> a;
            for (std::size_t q = 0; q < code.num_qubits(); ++q) {
                if (rng() % 2) {
                    a.push_back(q);
                }
            }
            if (a.empty() || a.size() == code.num_qubits()) {
                continue;
            }
            auto region = explicit_region(code, a, "random");
            auto setup = dense_oracle_setup(code, region);
            EigenLabels labels;
            for (std::size_t i = 0; i < setup.stabilizer_basis.size(); ++i) {
                labels.k.push_back(rng() & 1);
            }
            labels.a.assign(setup.logicals.size(), false);
            EXPECT_NEAR(dense_entropy_oracle(code, region, setup, labels, t),
                        static_cast<double>(entanglement_entropy(code, region).S_A), 1e-9);
        }
    }
}

TEST(DenseOracle, RefusesLargeCodes) {
    auto code = build({Model::toric2, 3, Boundary::pbc});
    auto region = explicit_region(code, {0}, "one");
    auto setup = dense_oracle_setup(code, region);
    EigenLabels labels;
    labels.k.assign(setup.stabilizer_basis.size(), false);
    labels.a.assign(setup.logicals.size(), false);
    EXPECT_THROW(dense_entropy_oracle(code, region, setup, labels), std::invalid_argument);
}

TEST(SymplecticColumns, XThenZ) {
    std::vector<std::size_t> q{1, 3};
    EXPECT_EQ(symplectic_columns(5, q), (std::vector<std::size_t>{1, 3, 6, 8}));
}
