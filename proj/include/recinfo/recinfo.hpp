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

#ifndef RECINFO_RECINFO_HPP
#define RECINFO_RECINFO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recinfo/constraints.hpp"
#include "recinfo/entropy.hpp"

namespace recinfo {

enum class NlssSide { from_A, from_B };

/// A non-local surface stabilizer: the product of `generating_set` (drawn
/// from one side plus the cut) acting only on the other side.
struct NLSSGenerator {
    PauliOp op;
    std::vector<std::size_t> generating_set;
    NlssSide side = NlssSide::from_A;
    /// 'X' or 'Z' for pure generators of CSS codes, '?' otherwise.
    char pauli_type = '?';
};

struct GaussLaw {
    std::vector<std::size_t> bulk;      // F ∩ S_A (from_A) or F ∩ S_B (from_B)
    std::vector<std::size_t> boundary;  // F ∩ S_cut
    PauliOp bulk_product;
    PauliOp boundary_restricted;  // product of the boundary set, restricted to the bulk side
    bool holds = false;
};

struct NlssResult {
    std::size_t from_A = 0;  // dim G_B / span S_B
    std::size_t from_B = 0;  // dim G_A / span S_A
    std::size_t x_type = 0;  // CSS split, zero for non-CSS codes
    std::size_t z_type = 0;
    bool css = false;
    int window = 0;  // 0 under obc
    std::size_t total() const { return from_A + from_B; }
};

struct RecInfoReport {
    EntropyReport entropy;
    std::size_t cut_raw = 0;
    std::size_t d_cut_min = 0;
    long mu_definition = 0;
    long mu_bound = 0;
    NlssResult nlss;
    std::vector<NLSSGenerator> generators;
    bool agreement = false;
};

struct MuOptions {
    std::optional<int> window;  // nlss window, default is the largest allowed up to 3
    int mining_window = 3;
    bool want_generators = false;
};

/// |S_cut| - rank of the non-topological constraints projected onto the cut.
std::size_t min_cut_count(const CutClassification& cut, const BitMatrix& nontop);

long mu_definition(const StabilizerCode& code, const Region& region, const BitMatrix& nontop);
long mu_definition(const StabilizerCode& code, const Region& region);

long mu_bound(const StabilizerCode& code, const Region& region, const BitMatrix& nontop);
long mu_bound(const StabilizerCode& code, const Region& region);

/// Largest window <= 3 passing the pbc guard extent + 2w <= L - 2, or
/// nullopt when even w = 1 fails.
std::optional<int> default_window(const StabilizerCode& code, const Region& region);
/// Throws std::invalid_argument when the window guard fails.
void check_window(const StabilizerCode& code, const Region& region, int window);

/// Stabilizers taken into account by the windowed computation: every
/// stabilizer under obc, otherwise those inside the window box around A.
std::vector<std::size_t> window_stabilizers(const StabilizerCode& code, const Region& region, int window);

NlssResult mu_nlss(const StabilizerCode& code, const Region& region, std::optional<int> window = std::nullopt);

std::vector<NLSSGenerator> nlss_generators(const StabilizerCode& code, const Region& region,
                                           std::optional<int> window = std::nullopt);

GaussLaw gauss_law_report(const NLSSGenerator& g, const StabilizerCode& code, const Region& region);

/// Cut stabilizers that form a minimal cut basis: S_cut minus the pivot
/// columns of the projected non-topological constraints.
std::vector<std::size_t> minimal_cut_basis(const StabilizerCode& code, const Region& region,
                                           const BitMatrix& nontop);

struct MinimalityViolation {
    std::vector<std::size_t> candidates;  // indices into the candidate list
    BitVector constraint;                 // a non-topological constraint consuming their cut part
};

/// Each candidate is a set of cut stabilizers whose product factors as
/// g_A g_B. Reports candidates (or combinations of them) whose cut set is
/// the cut part of a non-topological constraint. Throws
/// std::invalid_argument for a candidate outside `cut_basis` or whose
/// product does not factor.
std::vector<MinimalityViolation> verify_minimality(const StabilizerCode& code, const Region& region,
                                                   const std::vector<std::size_t>& cut_basis,
                                                   const std::vector<std::vector<std::size_t>>& candidates,
                                                   const BitMatrix& nontop);

/// Exhaustive minimum of (cut stabilizers in a basis) - S_A - S_B over all
/// stabilizer bases. Requires |S| <= 16 and dim C <= 4.
long brute_force_mu(const StabilizerCode& code, const Region& region);

/// Cut count of a greedy basis built from `order` and then improved by
/// single exchanges until no exchange lowers the count.
std::size_t greedy_exchange_cut_count(const StabilizerCode& code, const CutClassification& cut,
                                      const std::vector<std::size_t>& order);

/// All three methods plus entropies.
RecInfoReport compute_report(const StabilizerCode& code, const Region& region, const MuOptions& opts = {});

}  // namespace recinfo

#endif  // RECINFO_RECINFO_HPP
