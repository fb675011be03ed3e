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

#include "recinfo/entropy.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

namespace recinfo {

std::vector<std::size_t> symplectic_columns(std::size_t n, std::span<const std::size_t> qubits) {
    std::vector<std::size_t> cols;
    cols.reserve(2 * qubits.size());
    for (std::size_t q : qubits) {
        cols.push_back(q);
    }
    for (std::size_t q : qubits) {
        cols.push_back(n + q);
    }
    std::sort(cols.begin(), cols.end());
    return cols;
}

std::size_t subgroup_dim_in(const StabilizerCode& code, std::span<const std::size_t> qubits) {
    return coordinate_section_dim(code.stabilizer_matrix(), symplectic_columns(code.num_qubits(), qubits));
}

std::size_t subgroup_dim_in(const StabilizerCode& code, const Region& region) {
    return subgroup_dim_in(code, region.qubits);
}

std::size_t logical_dim(const StabilizerCode& code) { return code.num_qubits() - rank(code.stabilizer_matrix()); }

EntropyReport entanglement_entropy(const StabilizerCode& code, const Region& region) {
    const std::size_t n = code.num_qubits();
    BitMatrix m = code.stabilizer_matrix();
    const std::size_t d_G = rank(m);
    auto a_cols = symplectic_columns(n, region.qubits);
    auto b_qubits = region.complement();
    auto b_cols = symplectic_columns(n, b_qubits);
    EntropyReport r;
    r.size_A = region.qubits.size();
    r.size_B = b_qubits.size();
    r.d_GA = d_G - rank(m.select_columns(b_cols));
    r.d_GB = d_G - rank(m.select_columns(a_cols));
    r.d_logical = n - d_G;
    r.S_A = static_cast<long>(r.size_A) - static_cast<long>(r.d_GA);
    r.S_B = static_cast<long>(r.size_B) - static_cast<long>(r.d_GB) - static_cast<long>(r.d_logical);
    if (r.S_A != r.S_B) {
        throw std::logic_error("S_A != S_B: " + std::to_string(r.S_A) + " vs " + std::to_string(r.S_B));
    }
    return r;
}

DenseOracleSetup dense_oracle_setup(const StabilizerCode& code, const Region& region) {
    const std::size_t n = code.num_qubits();
    DenseOracleSetup setup;
    RowSpace span(2 * n);
    for (std::size_t i = 0; i < code.num_stabilizers(); ++i) {
        if (span.insert(code.stabilizer(i).op.symplectic())) {
            setup.stabilizer_basis.push_back(i);
        }
    }
    const std::size_t d_logical = n - span.dim();
    auto b_qubits = region.complement();
    const std::size_t nb = b_qubits.size();

    // Unknown p = (x_B, z_B). Each column of `sys` is one commutation
    // condition; the left kernel is the set of valid p.
    while (setup.logicals.size() < d_logical) {
        std::vector<PauliOp> conds;
        for (std::size_t i : setup.stabilizer_basis) {
            conds.push_back(code.stabilizer(i).op);
        }
        for (const auto& l : setup.logicals) {
            conds.push_back(l);
        }
        BitMatrix sys(2 * nb, conds.size());
        for (std::size_t c = 0; c < conds.size(); ++c) {
            for (std::size_t j = 0; j < nb; ++j) {
                std::size_t q = b_qubits[j];
                sys.set(j, c, conds[c].z().get(q));
                sys.set(nb + j, c, conds[c].x().get(q));
            }
        }
        BitMatrix ker = kernel_basis(sys);
        bool found = false;
        for (std::size_t r = 0; r < ker.rows() && !found; ++r) {
            PauliOp p(n);
            for (std::size_t j = 0; j < nb; ++j) {
                p.x().set(b_qubits[j], ker.get(r, j));
                p.z().set(b_qubits[j], ker.get(r, nb + j));
            }
            if (span.insert(p.symplectic())) {
                setup.logicals.push_back(p);
                found = true;
            }
        }
        if (!found) {
            throw std::runtime_error("could not place a full set of logical operators in B");
        }
    }
    return setup;
}

namespace {

using cplx = std::complex<double>;

void apply_projector(Eigen::VectorXcd& psi, const PauliOp& p, bool minus) {
    const std::size_t n = p.num_qubits();
    std::uint64_t xm = 0;
    std::uint64_t zm = 0;
    for (std::size_t q = 0; q < n; ++q) {
        xm |= static_cast<std::uint64_t>(p.x().get(q)) << q;
        zm |= static_cast<std::uint64_t>(p.z().get(q)) << q;
    }
    static const cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const cplx yphase = kIPow[std::popcount(xm & zm) % 4];
    const double s = minus ? -1.0 : 1.0;
    Eigen::VectorXcd out = psi;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(psi.size()); ++i) {
        double sign = (std::popcount(zm & i) & 1) ? -1.0 : 1.0;
        out[static_cast<Eigen::Index>(i ^ xm)] += s * sign * yphase * psi[static_cast<Eigen::Index>(i)];
    }
    psi = 0.5 * out;
}

}  // namespace

double dense_entropy_oracle(const StabilizerCode& code, const Region& region, const DenseOracleSetup& setup,
                            const EigenLabels& labels, std::uint64_t seed) {
    const std::size_t n = code.num_qubits();
    if (n > 12) {
        throw std::invalid_argument("dense oracle needs N <= 12");
    }
    if (labels.k.size() != setup.stabilizer_basis.size() || labels.a.size() != setup.logicals.size()) {
        throw std::invalid_argument("eigenvalue label lengths do not match the oracle setup");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd psi(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        psi[i] = cplx(gauss(rng), gauss(rng));
    }
    for (std::size_t i = 0; i < setup.stabilizer_basis.size(); ++i) {
        apply_projector(psi, code.stabilizer(setup.stabilizer_basis[i]).op, labels.k[i]);
    }
    for (std::size_t i = 0; i < setup.logicals.size(); ++i) {
        apply_projector(psi, setup.logicals[i], labels.a[i]);
    }
    double norm = psi.norm();
    if (norm < 1e-8) {
        throw std::runtime_error("projected state vanished");
    }
    psi /= norm;

    const auto& a = region.qubits;
    auto b = region.complement();
    const Eigen::Index da = Eigen::Index{1} << a.size();
    const Eigen::Index db = Eigen::Index{1} << b.size();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(da, db);
    for (Eigen::Index i = 0; i < dim; ++i) {
        Eigen::Index ia = 0;
        Eigen::Index ib = 0;
        for (std::size_t j = 0; j < a.size(); ++j) {
            ia |= ((i >> a[j]) & 1) << j;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            ib |= ((i >> b[j]) & 1) << j;
        }
        m(ia, ib) = psi[i];
    }
    Eigen::MatrixXcd rho = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        double lam = solver.eigenvalues()[i];
        if (lam > 1e-14) {
            s -= lam * std::log2(lam);
        }
    }
    return s;
}

}  // namespace recinfo
