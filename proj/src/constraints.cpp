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

#include "recinfo/constraints.hpp"

#include <stdexcept>

namespace recinfo {

namespace {

int wrap(int v, int L) { return ((v % L) + L) % L; }

std::size_t num_vertices(const StabilizerCode& code) {
    std::size_t n = 1;
    for (int i = 0; i < code.dim(); ++i) {
        n *= static_cast<std::size_t>(code.L());
    }
    return n;
}

Coord vertex_coord(const StabilizerCode& code, std::size_t v) {
    Coord c{0, 0, 0};
    for (int i = 0; i < code.dim(); ++i) {
        c[i] = static_cast<int>(v % static_cast<std::size_t>(code.L()));
        v /= static_cast<std::size_t>(code.L());
    }
    return c;
}

// Lifts kernel rows over a stabilizer subset back to full indicator rows.
void lift_into(RowSpace& span, const BitMatrix& ker, std::span<const std::size_t> subset, std::size_t n_stabs) {
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        BitVector full(n_stabs);
        for (std::size_t j = 0; j < subset.size(); ++j) {
            if (ker.get(r, j)) {
                full.set(subset[j]);
            }
        }
        span.insert(std::move(full));
    }
}

}  // namespace

std::string tag_name(ConstraintTag t) {
    switch (t) {
        case ConstraintTag::declared_local:
            return "declared-local";
        case ConstraintTag::mined_local:
            return "local-mined";
        case ConstraintTag::topological:
            return "topological";
        case ConstraintTag::unclassified:
            break;
    }
    return "unclassified";
}

ConstraintSpace constraint_space(const StabilizerCode& code) {
    ConstraintSpace cs;
    cs.basis = kernel_basis(code.stabilizer_matrix());
    cs.tags.assign(cs.basis.rows(), ConstraintTag::unclassified);
    return cs;
}

bool is_constraint(const StabilizerCode& code, const BitVector& row) {
    PauliOp p(code.num_qubits());
    for (std::size_t i : row.ones()) {
        p *= code.stabilizer(i).op;
    }
    return p.is_identity();
}

BitMatrix declared_constraint_span(const StabilizerCode& code) {
    RowSpace span(code.num_stabilizers());
    for (const auto& set : declared_local_constraints(code)) {
        span.insert(BitVector::from_indices(code.num_stabilizers(), set));
    }
    return span.basis();
}

BitMatrix local_constraint_miner(const StabilizerCode& code, int window) {
    if (window < 1) {
        throw std::invalid_argument("mining window must be at least one cell");
    }
    const std::size_t n_stabs = code.num_stabilizers();
    RowSpace span(n_stabs);
    BitMatrix m = code.stabilizer_matrix();
    auto fps = footprints(code);
    Coord extent{0, 0, 0};
    for (int i = 0; i < code.dim(); ++i) {
        extent[i] = window;
    }
    const bool pbc = code.bc() == Boundary::pbc;
    // Under obc the box also slides past the lattice edge so that truncated
    // stabilizers near the boundary are covered.
    std::vector<Coord> origins;
    if (pbc) {
        for (std::size_t v = 0; v < num_vertices(code); ++v) {
            origins.push_back(vertex_coord(code, v));
        }
    } else {
        const int lo = -window;
        const int hi = code.L();
        Coord c{0, 0, 0};
        std::function<void(int)> rec = [&](int d) {
            if (d == code.dim()) {
                origins.push_back(c);
                return;
            }
            for (int x = lo; x <= hi; ++x) {
                c[d] = x;
                rec(d + 1);
            }
        };
        rec(0);
    }
    for (const Coord& o : origins) {
        auto subset = stabilizers_in_box(code, fps, o, extent);
        if (subset.size() < 2) {
            continue;
        }
        lift_into(span, kernel_basis(m.select_rows(subset)), subset, n_stabs);
    }
    return span.basis();
}

BitMatrix nontopological_subspace(const StabilizerCode& code, int window) {
    if (code.bc() == Boundary::obc) {
        return row_basis(constraint_space(code).basis);
    }
    RowSpace span(code.num_stabilizers());
    span.insert_all(declared_constraint_span(code));
    span.insert_all(local_constraint_miner(code, window));
    return span.basis();
}

void tag_constraints(const StabilizerCode& code, ConstraintSpace& cs, const BitMatrix& declared,
                     const BitMatrix& mined) {
    RowSpace d(code.num_stabilizers());
    d.insert_all(declared);
    RowSpace both = d;
    both.insert_all(mined);
    for (std::size_t r = 0; r < cs.basis.rows(); ++r) {
        BitVector v = cs.basis.row(r);
        if (d.contains(v)) {
            cs.tags[r] = ConstraintTag::declared_local;
        } else if (both.contains(v)) {
            cs.tags[r] = ConstraintTag::mined_local;
        } else {
            cs.tags[r] = ConstraintTag::unclassified;
        }
    }
}

std::size_t topological_dim(const StabilizerCode& pbc, const StabilizerCode& obc) {
    if (pbc.num_stabilizers() != obc.num_stabilizers() || pbc.num_qubits() != obc.num_qubits()) {
        throw std::invalid_argument("pbc and obc codes are not index-aligned");
    }
    for (std::size_t i = 0; i < pbc.num_stabilizers(); ++i) {
        if (pbc.stabilizer(i).label != obc.stabilizer(i).label) {
            throw std::invalid_argument("pbc and obc codes are not index-aligned");
        }
    }
    BitMatrix c = kernel_basis(pbc.stabilizer_matrix());
    BitMatrix c_obc = kernel_basis(obc.stabilizer_matrix());
    return c.rows() - intersect(c, c_obc).rows();
}

std::vector<std::size_t> translated_stabilizer_map(const StabilizerCode& pbc, Coord shift) {
    const std::size_t nv = num_vertices(pbc);
    std::vector<std::size_t> map(pbc.num_stabilizers());
    for (std::size_t j = 0; j < map.size(); ++j) {
        std::size_t block = j / nv;
        Coord a = vertex_coord(pbc, j % nv);
        std::size_t v = 0;
        for (int i = pbc.dim() - 1; i >= 0; --i) {
            v = v * static_cast<std::size_t>(pbc.L()) + static_cast<std::size_t>(wrap(a[i] + shift[i], pbc.L()));
        }
        map[j] = block * nv + v;
    }
    return map;
}

std::size_t topological_dim_all_seams(const StabilizerCode& pbc) {
    if (pbc.bc() != Boundary::pbc || pbc.model() == Model::custom || pbc.model() == Model::haah) {
        throw std::invalid_argument("seam translation needs a periodic lattice model with open variant");
    }
    StabilizerCode obc = build({pbc.model(), pbc.L(), Boundary::obc});
    BitMatrix c = kernel_basis(pbc.stabilizer_matrix());
    BitMatrix c_obc = kernel_basis(obc.stabilizer_matrix());
    const std::size_t n_stabs = pbc.num_stabilizers();
    RowSpace survivors(n_stabs);
    for (std::size_t v = 0; v < num_vertices(pbc); ++v) {
        auto map = translated_stabilizer_map(pbc, vertex_coord(pbc, v));
        BitMatrix moved(c_obc.rows(), n_stabs);
        for (std::size_t r = 0; r < c_obc.rows(); ++r) {
            for (std::size_t j : c_obc.row(r).ones()) {
                moved.set(r, map[j]);
            }
        }
        survivors.insert_all(intersect(c, moved));
    }
    return c.rows() - survivors.dim();
}

std::size_t cut_topological_dim(const StabilizerCode& code, const CutClassification& cut, const BitMatrix& nontop) {
    BitMatrix c = kernel_basis(code.stabilizer_matrix());
    const std::size_t dim_c = c.rows();
    if (nontop.rows() > 0 && rank(BitMatrix::stack(c, nontop)) != dim_c) {
        throw std::invalid_argument("non-topological subspace is not inside the constraint space");
    }
    std::vector<std::size_t> uncut = cut.in_A;
    uncut.insert(uncut.end(), cut.in_B.begin(), cut.in_B.end());
    BitMatrix c_uncut = coordinate_section(c, uncut);
    return dim_c - rank(BitMatrix::stack(c_uncut, nontop.rows() ? nontop : BitMatrix(0, c.cols())));
}

}  // namespace recinfo
