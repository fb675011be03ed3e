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

#include "recinfo/pauli.hpp"

namespace recinfo {

PauliOp::PauliOp(BitVector x, BitVector z) : x_(std::move(x)), z_(std::move(z)) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("x and z parts differ in length");
    }
}

PauliOp PauliOp::single(std::size_t n, std::size_t qubit, char kind) {
    PauliOp p(n);
    p.set(qubit, kind);
    return p;
}

PauliOp PauliOp::from_symplectic(const BitVector& row) {
    if (row.size() % 2) {
        throw std::invalid_argument("symplectic row has odd length");
    }
    std::size_t n = row.size() / 2;
    PauliOp p(n);
    for (std::size_t i : row.ones()) {
        if (i < n) {
            p.x_.set(i);
        } else {
            p.z_.set(i - n);
        }
    }
    return p;
}

char PauliOp::at(std::size_t q) const {
    bool x = x_.get(q);
    bool z = z_.get(q);
    if (x && z) {
        return 'Y';
    }
    return x ? 'X' : (z ? 'Z' : 'I');
}

void PauliOp::set(std::size_t q, char kind) {
    switch (kind) {
        case 'I':
            x_.set(q, false);
            z_.set(q, false);
            break;
        case 'X':
            x_.set(q, true);
            z_.set(q, false);
            break;
        case 'Y':
            x_.set(q, true);
            z_.set(q, true);
            break;
        case 'Z':
            x_.set(q, false);
            z_.set(q, true);
            break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli letter ") + kind);
    }
}

PauliOp& PauliOp::operator*=(const PauliOp& other) {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument("qubit count mismatch");
    }
    x_ ^= other.x_;
    z_ ^= other.z_;
    return *this;
}

bool PauliOp::commutes(const PauliOp& other) const {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument("qubit count mismatch");
    }
    return x_.dot(other.z_) == z_.dot(other.x_);
}

std::vector<std::size_t> PauliOp::support() const { return support_mask().ones(); }

PauliOp PauliOp::restrict(std::span<const std::size_t> qubits) const {
    return restrict(BitVector::from_indices(num_qubits(), qubits));
}

PauliOp PauliOp::restrict(const BitVector& mask) const { return PauliOp(x_ & mask, z_ & mask); }

BitVector PauliOp::symplectic() const {
    std::size_t n = num_qubits();
    BitVector row(2 * n);
    for (std::size_t i : x_.ones()) {
        row.set(i);
    }
    for (std::size_t i : z_.ones()) {
        row.set(n + i);
    }
    return row;
}

PauliOp product(std::span<const PauliOp> ops, std::span<const std::size_t> indices, std::size_t n) {
    PauliOp p(n);
    for (std::size_t i : indices) {
        p *= ops[i];
    }
    return p;
}

}  // namespace recinfo
