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

#ifndef RECINFO_MODELS_HPP
#define RECINFO_MODELS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "recinfo/pauli.hpp"

namespace recinfo {

using Coord = std::array<int, 3>;

enum class Model { cluster1, cluster2, cluster3, toric2, toric3, xcube, haah, custom };
enum class Boundary { pbc, obc };

std::string model_name(Model m);
/// Parses "cluster1", "toric3", "xcube", ... Throws std::invalid_argument.
Model parse_model(const std::string& name);
std::string boundary_name(Boundary b);
Boundary parse_boundary(const std::string& name);
/// Lattice dimension of a model (1, 2 or 3).
int model_dim(Model m);
/// True for models whose qubits live on edges.
bool edge_model(Model m);

struct ModelSpec {
    Model model = Model::toric2;
    int L = 4;
    Boundary bc = Boundary::pbc;
};

/// A qubit sits on a site: a vertex (cluster, haah) or an edge (toric,
/// xcube). Edges are stored as (base vertex, direction).
struct Qubit {
    Coord pos{};
    int dir = -1;   // edge direction 0..2, or -1 for vertex qubits
    int slot = 0;   // intra-site index (haah has two qubits per vertex)
    std::size_t site = 0;
};

struct Stabilizer {
    std::string label;
    std::string type;
    PauliOp op;
    Coord anchor{};
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::size_t n_qubits = 0;
    std::size_t n_stabilizers = 0;
    std::size_t d_G = 0;
    std::size_t d_logical = 0;
    std::size_t dim_C = 0;
};

/// Lattice stabilizer code. Immutable after construction.
class StabilizerCode {
   public:
    /// A code with qubits on a line and caller-supplied stabilizers; used for
    /// toy instances. Qubit i sits at (i, 0, 0).
    static StabilizerCode custom(std::size_t n, std::vector<Stabilizer> stabilizers);
    /// A periodic L^3 code with `q` qubits per vertex (qubit q*v + slot).
    static StabilizerCode vertex_lattice(Model tag, int L, int q, std::vector<Stabilizer> stabilizers);

    Model model() const { return model_; }
    int L() const { return L_; }
    Boundary bc() const { return bc_; }
    int dim() const { return dim_; }

    std::size_t num_qubits() const { return qubits_.size(); }
    std::size_t num_sites() const { return num_sites_; }
    std::size_t num_stabilizers() const { return stabs_.size(); }
    const std::vector<Qubit>& qubits() const { return qubits_; }
    const std::vector<Stabilizer>& stabilizers() const { return stabs_; }
    const Stabilizer& stabilizer(std::size_t i) const { return stabs_[i]; }
    std::vector<PauliOp> ops() const;

    /// Index of the qubit at (pos, dir, slot), with pos wrapped mod L.
    std::size_t qubit_index(Coord pos, int dir, int slot) const;
    /// Lattice vertices touched by a qubit (two for edges, one otherwise).
    std::vector<Coord> qubit_vertices(std::size_t q) const;
    std::string qubit_label(std::size_t q) const;

    /// |S| x 2N matrix of symplectic rows.
    BitMatrix stabilizer_matrix() const;
    /// Sites where `p` acts non-trivially.
    std::vector<std::size_t> site_support(const PauliOp& p) const;
    /// Sparse rendering such as "X[3,2,0]a Z[1,1,1]b".
    std::string render(const PauliOp& p) const;

    void replace_stabilizer(std::size_t i, PauliOp op);

   private:
    friend StabilizerCode build(const ModelSpec& spec);
    Model model_ = Model::custom;
    int L_ = 0;
    Boundary bc_ = Boundary::obc;
    int dim_ = 1;
    std::size_t num_sites_ = 0;
    int per_site_ = 1;
    std::vector<Qubit> qubits_;
    std::vector<Stabilizer> stabs_;
};

/// Builds a model. Throws std::invalid_argument for unsupported
/// combinations and std::runtime_error if stabilizers fail to commute.
StabilizerCode build(const ModelSpec& spec);

/// Stabilizer index sets known to multiply to the identity.
std::vector<std::vector<std::size_t>> declared_local_constraints(const StabilizerCode& code);

ValidationReport validate(const StabilizerCode& code);

/// First anticommuting stabilizer pair, if any.
std::optional<std::pair<std::size_t, std::size_t>> find_anticommuting_pair(const StabilizerCode& code);

/// One line per stabilizer: "label type X-support Z-support".
std::string export_table(const StabilizerCode& code);

}  // namespace recinfo

#endif  // RECINFO_MODELS_HPP
