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

#ifndef RECINFO_CONSTRAINTS_HPP
#define RECINFO_CONSTRAINTS_HPP

#include <string>
#include <vector>

#include "recinfo/regions.hpp"

namespace recinfo {

enum class ConstraintTag { unclassified, declared_local, mined_local, topological };

std::string tag_name(ConstraintTag t);

/// Subsets of the stabilizer list multiplying to the identity. Rows are
/// indicator vectors over stabilizer indices.
struct ConstraintSpace {
    BitMatrix basis;
    std::vector<ConstraintTag> tags;
    std::size_t dim() const { return basis.rows(); }
};

ConstraintSpace constraint_space(const StabilizerCode& code);

/// True if the stabilizers selected by `row` multiply to the identity.
bool is_constraint(const StabilizerCode& code, const BitVector& row);

/// Span of the declared local constraints, as echelon rows.
BitMatrix declared_constraint_span(const StabilizerCode& code);

/// Span of all constraints made only of stabilizers that fit inside a
/// translate of a box of `window` cells per direction.
BitMatrix local_constraint_miner(const StabilizerCode& code, int window);

/// Span of declared and mined local constraints, the subspace treated as
/// non-topological downstream. Under obc every constraint is local.
BitMatrix nontopological_subspace(const StabilizerCode& code, int window = 3);

/// Marks each basis row of `cs` by the first span that contains it.
void tag_constraints(const StabilizerCode& code, ConstraintSpace& cs, const BitMatrix& declared,
                     const BitMatrix& mined);

/// dim C(pbc) minus the dimension of the pbc constraints that survive as
/// constraints of the index-aligned obc code.
std::size_t topological_dim(const StabilizerCode& pbc, const StabilizerCode& obc);

/// As topological_dim, but a pbc constraint counts as surviving if it is a
/// sum of constraints each of which survives for some placement of the
/// open seams. Seams are moved by translating the obc code.
std::size_t topological_dim_all_seams(const StabilizerCode& pbc);

/// Stabilizer indices of the pbc code matching the obc code built with its
/// seams shifted by `shift`.
std::vector<std::size_t> translated_stabilizer_map(const StabilizerCode& pbc, Coord shift);

/// dim(C / (C_uncut + nontop)); throws if nontop is not inside C.
std::size_t cut_topological_dim(const StabilizerCode& code, const CutClassification& cut, const BitMatrix& nontop);

}  // namespace recinfo

#endif  // RECINFO_CONSTRAINTS_HPP
