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
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "recinfo/models.hpp"

using namespace recinfo;

namespace {

const Model kLattice[] = {Model::cluster1, Model::cluster2, Model::cluster3, Model::toric2,
                          Model::toric3,   Model::xcube,    Model::haah};

std::set<Coord> sites_of(const StabilizerCode& code, const PauliOp& p) {
    std::set<Coord> out;
    for (std::size_t q : p.support()) {
        out.insert(code.qubits()[q].pos);
    }
    return out;
}

Coord shifted(Coord a, int dx, int dy, int dz, int L) {
    a[0] = (a[0] + dx) % L;
    a[1] = (a[1] + dy) % L;
    a[2] = (a[2] + dz) % L;
    return a;
}

}  // namespace

TEST(Build, ClusterChain) {
    auto code = build({Model::cluster1, 8, Boundary::pbc});
    auto v = validate(code);
    EXPECT_TRUE(v.ok);
    EXPECT_EQ(v.n_qubits, 8u);
    EXPECT_EQ(v.n_stabilizers, 8u);
    EXPECT_EQ(v.dim_C, 0u);
    for (const auto& s : code.stabilizers()) {
        EXPECT_EQ(s.op.z().popcount(), 1u);
        EXPECT_EQ(s.op.x().popcount(), 2u);
    }
}

TEST(Build, ClusterWeightsInEveryDimension) {
    for (Model m : {Model::cluster1, Model::cluster2, Model::cluster3}) {
        auto code = build({m, 5, Boundary::pbc});
        for (const auto& s : code.stabilizers()) {
            EXPECT_EQ(s.op.support().size(), 2u * model_dim(m) + 1);
        }
        EXPECT_EQ(validate(code).d_logical, 0u);
    }
}

TEST(Build, ToricCodeL4) {
    auto code = build({Model::toric2, 4, Boundary::pbc});
    auto v = validate(code);
    EXPECT_TRUE(v.ok);
    EXPECT_EQ(v.n_qubits, 32u);
    EXPECT_EQ(v.n_stabilizers, 32u);
    EXPECT_EQ(v.d_G, 30u);
    EXPECT_EQ(v.d_logical, 2u);
    EXPECT_EQ(code.stabilizer(0).type, "star");
    EXPECT_EQ(code.stabilizer(16).type, "plaquette");
}

TEST(Build, HaahCubeCorners) {
    const int L = 4;
    auto code = build({Model::haah, L, Boundary::pbc});
    EXPECT_EQ(code.num_qubits(), 128u);
    EXPECT_EQ(code.num_stabilizers(), 128u);
    for (const auto& s : code.stabilizers()) {
        int slot_count[2] = {0, 0};
        for (std::size_t q : s.op.support()) {
            ++slot_count[code.qubits()[q].slot];
        }
        EXPECT_EQ(slot_count[0], 4);
        EXPECT_EQ(slot_count[1], 4);
        // Seven of the eight corners are touched; the untouched one is the
        // corner opposite the doubly occupied one.
        auto sites = sites_of(code, s.op);
        EXPECT_EQ(sites.size(), 7u);
        const Coord a = s.anchor;
        if (s.type == "GX") {
            EXPECT_EQ(sites.count(shifted(a, 1, 1, 1, L)), 0u);
            EXPECT_EQ(s.op.at(code.qubit_index(a, -1, 0)), 'X');
            EXPECT_EQ(s.op.at(code.qubit_index(a, -1, 1)), 'X');
            EXPECT_TRUE(s.op.z().none());
        } else {
            EXPECT_EQ(s.type, "GZ");
            EXPECT_EQ(sites.count(a), 0u);
            EXPECT_TRUE(s.op.x().none());
        }
    }
}

TEST(Build, ToricCode3DAndXCubeLogicalCounts) {
    auto t3 = build({Model::toric3, 4, Boundary::pbc});
    auto v = validate(t3);
    EXPECT_TRUE(v.ok);
    EXPECT_EQ(v.d_logical, 3u);
    for (int L : {3, 4, 5}) {
        auto xc = build({Model::xcube, L, Boundary::pbc});
        auto vx = validate(xc);
        EXPECT_TRUE(vx.ok);
        EXPECT_EQ(vx.d_logical, static_cast<std::size_t>(6 * L - 3)) << L;
    }
}

TEST(Build, ToricCode3DStringLogicals) {
    // Z strings along each axis commute with every stabilizer and are
    // independent modulo the stabilizer group: three logical directions.
    const int L = 4;
    auto code = build({Model::toric3, L, Boundary::pbc});
    const std::size_t n = code.num_qubits();
    BitMatrix stack = code.stabilizer_matrix();
    const std::size_t base = oracle::naive_rank(oracle::to_mat(stack));
    for (int dir = 0; dir < 3; ++dir) {
        PauliOp s(n);
        for (int t = 0; t < L; ++t) {
            Coord c{0, 0, 0};
            c[dir] = t;
            s.set(code.qubit_index(c, dir, 0), 'Z');
        }
        for (const auto& st : code.stabilizers()) {
            ASSERT_TRUE(s.commutes(st.op));
        }
        stack.append_row(s.symplectic());
    }
    EXPECT_EQ(oracle::naive_rank(oracle::to_mat(stack)), base + 3);
}

TEST(Build, NaiveRankAgreesWithValidate) {
    for (Model m : kLattice) {
        auto code = build({m, 3, Boundary::pbc});
        EXPECT_EQ(validate(code).d_G, oracle::naive_rank(oracle::to_mat(code.stabilizer_matrix())))
            << model_name(m);
    }
}

TEST(Build, EveryModelCommutes) {
    for (Model m : kLattice) {
        for (Boundary bc : {Boundary::pbc, Boundary::obc}) {
            if (m == Model::haah && bc == Boundary::obc) {
                continue;
            }
            for (int L : {3, 4, 5}) {
                auto code = build({m, L, bc});
                EXPECT_FALSE(find_anticommuting_pair(code).has_value()) << model_name(m) << " " << L;
                EXPECT_TRUE(validate(code).ok) << model_name(m) << " " << L;
            }
        }
    }
}

TEST(Build, OpenBoundariesRemoveToricLogicals) {
    for (int L : {3, 4, 6}) {
        auto v = validate(build({Model::toric2, L, Boundary::obc}));
        EXPECT_EQ(v.d_G, v.n_qubits);
        EXPECT_EQ(v.n_stabilizers, static_cast<std::size_t>(2 * L * L));
    }
}

TEST(Build, Guards) {
    EXPECT_THROW(build({Model::haah, 6, Boundary::obc}), std::invalid_argument);
    EXPECT_THROW(build({Model::toric3, 2, Boundary::pbc}), std::invalid_argument);
    EXPECT_THROW(build({Model::custom, 4, Boundary::pbc}), std::invalid_argument);
    EXPECT_NO_THROW(build({Model::toric2, 2, Boundary::pbc}));
    EXPECT_NO_THROW(build({Model::haah, 2, Boundary::pbc}));
    EXPECT_THROW(parse_model("surface"), std::invalid_argument);
    EXPECT_THROW(parse_boundary("twisted"), std::invalid_argument);
}

TEST(Build, DetectsAnticommutingReplacement) {
    auto code = build({Model::toric2, 4, Boundary::pbc});
    PauliOp bad = code.stabilizer(0).op;
    bad.set(bad.support()[0], 'Y');
    code.replace_stabilizer(0, bad);
    auto pair = find_anticommuting_pair(code);
    ASSERT_TRUE(pair.has_value());
    EXPECT_EQ(pair->first, 0u);
    auto v = validate(code);
    EXPECT_FALSE(v.ok);
    EXPECT_FALSE(v.failures.empty());
}

TEST(DeclaredConstraints, ToricCode3DCubes) {
    auto code = build({Model::toric3, 4, Boundary::pbc});
    auto sets = declared_local_constraints(code);
    ASSERT_EQ(sets.size(), 64u);
    auto ops = code.ops();
    for (const auto& s : sets) {
        EXPECT_EQ(s.size(), 6u);
        for (std::size_t i : s) {
            EXPECT_EQ(code.stabilizer(i).type.rfind("plaquette", 0), 0u);
        }
        EXPECT_TRUE(product(ops, s, code.num_qubits()).is_identity());
    }
}

TEST(DeclaredConstraints, XCubeVertexTriples) {
    auto code = build({Model::xcube, 4, Boundary::pbc});
    auto sets = declared_local_constraints(code);
    ASSERT_EQ(sets.size(), 64u);
    auto ops = code.ops();
    for (const auto& s : sets) {
        EXPECT_EQ(s.size(), 3u);
        EXPECT_TRUE(product(ops, s, code.num_qubits()).is_identity());
    }
}

TEST(DeclaredConstraints, NoneForOtherModels) {
    for (Model m : {Model::cluster1, Model::cluster2, Model::toric2, Model::haah}) {
        EXPECT_TRUE(declared_local_constraints(build({m, 4, Boundary::pbc})).empty()) << model_name(m);
    }
}

TEST(StabilizerCode, QubitIndexingAndLabels) {
    auto code = build({Model::toric3, 4, Boundary::pbc});
    std::size_t q = code.qubit_index({1, 2, 3}, 2, 0);
    EXPECT_EQ(code.qubits()[q].pos, (Coord{1, 2, 3}));
    EXPECT_EQ(code.qubits()[q].dir, 2);
    EXPECT_EQ(code.qubit_label(q), "[1,2,3]z");
    EXPECT_EQ(code.qubit_index({5, 2, -1}, 2, 0), q);
    auto verts = code.qubit_vertices(q);
    ASSERT_EQ(verts.size(), 2u);
    EXPECT_EQ(verts[1], (Coord{1, 2, 0}));

    auto haah = build({Model::haah, 3, Boundary::pbc});
    std::size_t h = haah.qubit_index({0, 1, 2}, -1, 1);
    EXPECT_EQ(haah.qubit_label(h), "[0,1,2]b");
}

TEST(StabilizerCode, ExportTable) {
    auto code = build({Model::toric2, 3, Boundary::obc});
    std::istringstream in(export_table(code));
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        ++count;
        std::size_t tabs = std::count(line.begin(), line.end(), '\t');
        EXPECT_EQ(tabs, 3u);
    }
    EXPECT_EQ(count, code.num_stabilizers());
}

TEST(StabilizerCode, CustomCode) {
    PauliOp zz(3);
    zz.set(0, 'Z');
    zz.set(1, 'Z');
    PauliOp xx(3);
    xx.set(0, 'X');
    xx.set(1, 'X');
    PauliOp z3 = PauliOp::single(3, 2, 'Z');
    auto code = StabilizerCode::custom(3, {{"zz", "z", zz, {}}, {"xx", "x", xx, {}}, {"z3", "z", z3, {}}});
    auto v = validate(code);
    EXPECT_TRUE(v.ok);
    EXPECT_EQ(v.d_logical, 0u);
    EXPECT_EQ(code.bc(), Boundary::obc);
}
