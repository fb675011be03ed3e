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

#ifndef RECINFO_ENTROPY_HPP
#define RECINFO_ENTROPY_HPP

#include <cstdint>

#include "recinfo/regions.hpp"

namespace recinfo {

struct EntropyReport {
    std::size_t size_A = 0;
    std::size_t size_B = 0;
    std::size_t d_GA = 0;
    std::size_t d_GB = 0;
    std::size_t d_logical = 0;
    long S_A = 0;
    long S_B = 0;
};

/// Dimension of the subgroup of stabilizer-group elements supported on the
/// given qubits.
std::size_t subgroup_dim_in(const StabilizerCode& code, std::span<const std::size_t> qubits);
std::size_t subgroup_dim_in(const StabilizerCode& code, const Region& region);

std::size_t logical_dim(const StabilizerCode& code);

/// Exact entropies in bits. Throws std::logic_error if S_A != S_B.
EntropyReport entanglement_entropy(const StabilizerCode& code, const Region& region);

/// Symplectic columns (x and z) of a qubit set.
std::vector<std::size_t> symplectic_columns(std::size_t n, std::span<const std::size_t> qubits);

/// Eigenvalue labels of a simultaneous eigenstate: one bit per chosen
/// stabilizer generator and one per chosen logical generator (1 means -1).
struct EigenLabels {
    std::vector<bool> k;
    std::vector<bool> a;
};

struct DenseOracleSetup {
    std::vector<std::size_t> stabilizer_basis;  // indices into the code's stabilizers
    std::vector<PauliOp> logicals;              // commuting, supported in B
};

/// Picks a stabilizer basis and a maximal commuting set of logical
/// operators supported in B.
DenseOracleSetup dense_oracle_setup(const StabilizerCode& code, const Region& region);

/// Von Neumann entropy of A in bits for the eigenstate with the given
/// labels, computed from the explicit 2^N state vector. Requires N <= 12.
double dense_entropy_oracle(const StabilizerCode& code, const Region& region, const DenseOracleSetup& setup,
                            const EigenLabels& labels, std::uint64_t seed = 1);

}  // namespace recinfo

#endif  // RECINFO_ENTROPY_HPP
