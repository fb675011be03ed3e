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

#ifndef RECINFO_PAULI_HPP
#define RECINFO_PAULI_HPP

#include <span>

#include "recinfo/f2.hpp"

namespace recinfo {

/// Phase-free Pauli operator on n qubits. Y on a qubit is stored as both an
/// X bit and a Z bit.
class PauliOp {
   public:
    PauliOp() = default;
    explicit PauliOp(std::size_t n) : x_(n), z_(n) {}
    PauliOp(BitVector x, BitVector z);

    static PauliOp identity(std::size_t n) { return PauliOp(n); }
    static PauliOp single(std::size_t n, std::size_t qubit, char kind);
    /// Inverse of `symplectic()`: reads [x | z] from a 2n-bit row.
    static PauliOp from_symplectic(const BitVector& row);

    std::size_t num_qubits() const { return x_.size(); }
    const BitVector& x() const { return x_; }
    const BitVector& z() const { return z_; }
    BitVector& x() { return x_; }
    BitVector& z() { return z_; }

    /// 'I', 'X', 'Y' or 'Z'.
    char at(std::size_t q) const;
    void set(std::size_t q, char kind);

    PauliOp& operator*=(const PauliOp& other);
    friend PauliOp operator*(PauliOp a, const PauliOp& b) { return a *= b; }
    bool operator==(const PauliOp& other) const = default;

    bool commutes(const PauliOp& other) const;
    bool is_identity() const { return x_.none() && z_.none(); }
    /// Qubits on which the operator acts non-trivially.
    std::vector<std::size_t> support() const;
    BitVector support_mask() const { return x_ | z_; }
    /// Zeroes every qubit outside `qubits`.
    PauliOp restrict(std::span<const std::size_t> qubits) const;
    PauliOp restrict(const BitVector& mask) const;
    /// Row [x | z] of length 2n.
    BitVector symplectic() const;

   private:
    BitVector x_;
    BitVector z_;
};

/// Product of the operators picked out by `indices`.
PauliOp product(std::span<const PauliOp> ops, std::span<const std::size_t> indices, std::size_t n);

}  // namespace recinfo

#endif  // RECINFO_PAULI_HPP
