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

#include "recinfo/recinfo.hpp"

#include <algorithm>
#include <stdexcept>

namespace recinfo {

namespace {

BitMatrix rows_of(const BitMatrix& m, std::span<const std::size_t> idx) { return m.select_rows(idx); }

std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Splits stabilizer indices by Pauli type. Returns false if some stabilizer
// mixes X and Z.
bool css_split(const StabilizerCode& code, std::span<const std::size_t> idx, std::vector<std::size_t>& xs,
               std::vector<std::size_t>& zs) {
    xs.clear();
    zs.clear();
    for (std::size_t i : idx) {
        const PauliOp& p = code.stabilizer(i).op;
        bool hx = p.x().any();
        bool hz = p.z().any();
        if (hx && hz) {
            return false;
        }
        (hx ? xs : zs).push_back(i);
    }
    return true;
}

bool is_css(const StabilizerCode& code) {
    std::vector<std::size_t> all(code.num_stabilizers());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = i;
    }
    std::vector<std::size_t> xs;
    std::vector<std::size_t> zs;
    return css_split(code, all, xs, zs);
}

struct Sides {
    std::size_t from_A = 0;
    std::size_t from_B = 0;
};

// Quotient dimensions computed within the stabilizer subset `w`.
Sides quotient_dims(const BitMatrix& m, const std::vector<std::size_t>& w, const std::vector<std::size_t>& in_A,
                    const std::vector<std::size_t>& in_B, std::span<const std::size_t> a_cols,
                    std::span<const std::size_t> b_cols) {
    BitMatrix mw = rows_of(m, w);
    auto wa = intersect_sorted(w, in_A);
    auto wb = intersect_sorted(w, in_B);
    Sides s;
    s.from_B = coordinate_section_dim(mw, a_cols) - rank(rows_of(m, wa));
    s.from_A = coordinate_section_dim(mw, b_cols) - rank(rows_of(m, wb));
    return s;
}

// Coset representatives of (elements of span(w) living on `keep_cols`)
// modulo span(w ∩ same_side). Each comes with its generating set.
void collect_reps(const StabilizerCode& code, const BitMatrix& m, const std::vector<std::size_t>& w,
                  const std::vector<std::size_t>& same_side, std::span<const std::size_t> other_cols,
                  const std::vector<std::size_t>& drop, NlssSide side, char type,
                  std::vector<NLSSGenerator>& out) {
    BitMatrix mw = rows_of(m, w);
    BitMatrix ker = kernel_basis(mw.select_columns(other_cols));
    RowSpace span(m.cols());
    for (std::size_t i : intersect_sorted(w, same_side)) {
        span.insert(m.row(i));
    }
    std::vector<bool> dropped(code.num_stabilizers(), false);
    for (std::size_t i : drop) {
        dropped[i] = true;
    }
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        BitVector sel = ker.row(r);
        BitVector value = mw.combine_rows(sel);
        if (!span.insert(value)) {
            continue;
        }
        NLSSGenerator g;
        g.side = side;
        g.pauli_type = type;
        g.op = PauliOp(code.num_qubits());
        for (std::size_t j : sel.ones()) {
            std::size_t s = w[j];
            if (!dropped[s]) {
                g.generating_set.push_back(s);
                g.op *= code.stabilizer(s).op;
            }
        }
        out.push_back(std::move(g));
    }
}

}  // namespace

std::size_t min_cut_count(const CutClassification& cut, const BitMatrix& nontop) {
    if (nontop.rows() == 0) {
        return cut.cut.size();
    }
    return cut.cut.size() - rank(nontop.select_columns(cut.cut));
}

long mu_definition(const StabilizerCode& code, const Region& region, const BitMatrix& nontop) {
    EntropyReport e = entanglement_entropy(code, region);
    CutClassification cut = classify_cut(code, region);
    return static_cast<long>(min_cut_count(cut, nontop)) - e.S_A - e.S_B;
}

long mu_definition(const StabilizerCode& code, const Region& region) {
    return mu_definition(code, region, nontopological_subspace(code));
}

long mu_bound(const StabilizerCode& code, const Region& region, const BitMatrix& nontop) {
    return static_cast<long>(cut_topological_dim(code, classify_cut(code, region), nontop));
}

long mu_bound(const StabilizerCode& code, const Region& region) {
    return mu_bound(code, region, nontopological_subspace(code));
}

std::optional<int> default_window(const StabilizerCode& code, const Region& region) {
    for (int w = 3; w >= 1; --w) {
        bool ok = true;
        for (int d = 0; d < code.dim(); ++d) {
            ok = ok && region.box_extent[d] + 2 * w <= code.L() - 2;
        }
        if (ok) {
            return w;
        }
    }
    return std::nullopt;
}

void check_window(const StabilizerCode& code, const Region& region, int window) {
    if (code.bc() == Boundary::obc) {
        return;
    }
    if (window < 1) {
        throw std::invalid_argument("window must be at least 1");
    }
    for (int d = 0; d < code.dim(); ++d) {
        if (region.box_extent[d] + 2 * window > code.L() - 2) {
            throw std::invalid_argument("window " + std::to_string(window) + " too large for L=" +
                                        std::to_string(code.L()) + " around this region");
        }
    }
}

std::vector<std::size_t> window_stabilizers(const StabilizerCode& code, const Region& region, int window) {
    if (code.bc() == Boundary::obc) {
        std::vector<std::size_t> all(code.num_stabilizers());
        for (std::size_t i = 0; i < all.size(); ++i) {
            all[i] = i;
        }
        return all;
    }
    Coord lo{0, 0, 0};
    Coord ext{0, 0, 0};
    for (int d = 0; d < code.dim(); ++d) {
        lo[d] = region.box_origin[d] - window;
        ext[d] = region.box_extent[d] + 2 * window;
    }
    return stabilizers_in_box(code, lo, ext);
}

namespace {

int resolve_window(const StabilizerCode& code, const Region& region, std::optional<int> window) {
    if (code.bc() == Boundary::obc) {
        return 0;
    }
    int w = 0;
    if (window) {
        w = *window;
    } else {
        auto d = default_window(code, region);
        if (!d) {
            throw std::invalid_argument("lattice too small for a window around this region");
        }
        w = *d;
    }
    check_window(code, region, w);
    return w;
}

void check_window_covers(const CutClassification& cut, const std::vector<std::size_t>& w) {
    std::vector<bool> in(w.empty() ? 0 : w.back() + 1, false);
    for (std::size_t i : w) {
        in[i] = true;
    }
    for (const auto* set : {&cut.in_A, &cut.cut}) {
        for (std::size_t i : *set) {
            if (i >= in.size() || !in[i]) {
                throw std::invalid_argument("window too small to contain every stabilizer touching A");
            }
        }
    }
}

}  // namespace

NlssResult mu_nlss(const StabilizerCode& code, const Region& region, std::optional<int> window) {
    NlssResult res;
    res.window = resolve_window(code, region, window);
    CutClassification cut = classify_cut(code, region);
    auto w = window_stabilizers(code, region, res.window);
    check_window_covers(cut, w);
    BitMatrix m = code.stabilizer_matrix();
    const std::size_t n = code.num_qubits();
    auto a_cols = symplectic_columns(n, region.qubits);
    auto b_cols = symplectic_columns(n, region.complement());
    Sides s = quotient_dims(m, w, cut.in_A, cut.in_B, a_cols, b_cols);
    res.from_A = s.from_A;
    res.from_B = s.from_B;
    std::vector<std::size_t> xs;
    std::vector<std::size_t> zs;
    if (is_css(code) && css_split(code, w, xs, zs)) {
        res.css = true;
        Sides sx = quotient_dims(m, xs, cut.in_A, cut.in_B, a_cols, b_cols);
        Sides sz = quotient_dims(m, zs, cut.in_A, cut.in_B, a_cols, b_cols);
        res.x_type = sx.from_A + sx.from_B;
        res.z_type = sz.from_A + sz.from_B;
        if (res.x_type + res.z_type != res.total()) {
            throw std::logic_error("CSS split of the NLSS count does not add up");
        }
    }
    return res;
}

std::vector<NLSSGenerator> nlss_generators(const StabilizerCode& code, const Region& region,
                                           std::optional<int> window) {
    int win = resolve_window(code, region, window);
    CutClassification cut = classify_cut(code, region);
    auto w = window_stabilizers(code, region, win);
    check_window_covers(cut, w);
    BitMatrix m = code.stabilizer_matrix();
    const std::size_t n = code.num_qubits();
    auto a_cols = symplectic_columns(n, region.qubits);
    auto b_cols = symplectic_columns(n, region.complement());
    std::vector<std::vector<std::size_t>> groups;
    std::vector<char> types;
    std::vector<std::size_t> xs;
    std::vector<std::size_t> zs;
    if (is_css(code) && css_split(code, w, xs, zs)) {
        groups = {xs, zs};
        types = {'X', 'Z'};
    } else {
        groups = {w};
        types = {'?'};
    }
    std::vector<NLSSGenerator> out;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        // From A: products over A and cut landing in B; the S_B factors are dropped.
        collect_reps(code, m, groups[g], cut.in_B, a_cols, cut.in_B, NlssSide::from_A, types[g], out);
        collect_reps(code, m, groups[g], cut.in_A, b_cols, cut.in_A, NlssSide::from_B, types[g], out);
    }
    return out;
}

GaussLaw gauss_law_report(const NLSSGenerator& g, const StabilizerCode& code, const Region& region) {
    CutClassification cut = classify_cut(code, region);
    const auto& bulk_side = g.side == NlssSide::from_A ? cut.in_A : cut.in_B;
    std::vector<std::size_t> f = g.generating_set;
    std::sort(f.begin(), f.end());
    GaussLaw law;
    law.bulk = intersect_sorted(f, bulk_side);
    law.boundary = intersect_sorted(f, cut.cut);
    if (law.bulk.size() + law.boundary.size() != f.size()) {
        throw std::logic_error("generating set reaches the wrong side of the cut");
    }
    const std::size_t n = code.num_qubits();
    auto ops = code.ops();
    law.bulk_product = product(ops, law.bulk, n);
    PauliOp g_cut = product(ops, law.boundary, n);
    BitVector bulk_mask = region.mask;
    if (g.side == NlssSide::from_B) {
        for (std::size_t q = 0; q < n; ++q) {
            bulk_mask.flip(q);
        }
    }
    law.boundary_restricted = g_cut.restrict(bulk_mask);
    PauliOp total = law.bulk_product * g_cut;
    law.holds = law.bulk_product == law.boundary_restricted && total == g.op &&
                (g.op.support_mask() & bulk_mask).none();
    if (!law.holds) {
        throw std::logic_error("Gauss-law identity failed");
    }
    return law;
}

std::vector<std::size_t> minimal_cut_basis(const StabilizerCode& code, const Region& region,
                                           const BitMatrix& nontop) {
    CutClassification cut = classify_cut(code, region);
    if (nontop.rows() == 0) {
        return cut.cut;
    }
    Echelon e = echelon(nontop.select_columns(cut.cut));
    std::vector<bool> pivot(cut.cut.size(), false);
    for (std::size_t p : e.pivots) {
        pivot[p] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < cut.cut.size(); ++j) {
        if (!pivot[j]) {
            out.push_back(cut.cut[j]);
        }
    }
    return out;
}

std::vector<MinimalityViolation> verify_minimality(const StabilizerCode& code, const Region& region,
                                                   const std::vector<std::size_t>& cut_basis,
                                                   const std::vector<std::vector<std::size_t>>& candidates,
                                                   const BitMatrix& nontop) {
    std::vector<MinimalityViolation> out;
    if (candidates.empty()) {
        return out;
    }
    CutClassification cut = classify_cut(code, region);
    std::vector<std::size_t> basis = cut_basis;
    std::sort(basis.begin(), basis.end());
    const std::size_t n = code.num_qubits();
    BitMatrix m = code.stabilizer_matrix();
    RowSpace g_a(2 * n);
    g_a.insert_all(coordinate_section(m, symplectic_columns(n, region.qubits)));
    RowSpace g_b(2 * n);
    g_b.insert_all(coordinate_section(m, symplectic_columns(n, region.complement())));
    std::vector<long> cut_pos(code.num_stabilizers(), -1);
    for (std::size_t j = 0; j < cut.cut.size(); ++j) {
        cut_pos[cut.cut[j]] = static_cast<long>(j);
    }
    auto ops = code.ops();
    BitMatrix indicators(candidates.size(), cut.cut.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        for (std::size_t s : candidates[c]) {
            if (!std::binary_search(basis.begin(), basis.end(), s) || cut_pos[s] < 0) {
                throw std::invalid_argument("candidate uses a stabilizer outside the cut basis");
            }
            indicators.set(c, static_cast<std::size_t>(cut_pos[s]), !indicators.get(c, cut_pos[s]));
        }
        PauliOp p = product(ops, candidates[c], n);
        PauliOp mask_b = p.restrict(region.complement());
        PauliOp mask_a = p.restrict(region.qubits);
        if (!g_a.contains(mask_a.symplectic()) || !g_b.contains(mask_b.symplectic())) {
            throw std::invalid_argument("candidate product does not factor into G_A x G_B");
        }
    }
    BitMatrix proj = nontop.rows() ? nontop.select_columns(cut.cut) : BitMatrix(0, cut.cut.size());
    RowSpace proj_span(cut.cut.size());
    proj_span.insert_all(proj);
    auto constraint_for = [&](const BitVector& cut_part) {
        BitVector x;
        if (!solve_left(proj, cut_part, x)) {
            throw std::logic_error("projection lost while building a violation");
        }
        return nontop.combine_rows(x);
    };
    RowSpace single_span(cut.cut.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        BitVector ind = indicators.row(c);
        if (ind.any() && proj_span.contains(ind)) {
            out.push_back({{c}, constraint_for(ind)});
            single_span.insert(ind);
        }
    }
    BitMatrix both = intersect(indicators, proj.rows() ? proj : BitMatrix(0, cut.cut.size()));
    for (std::size_t r = 0; r < both.rows(); ++r) {
        BitVector v = both.row(r);
        if (!single_span.insert(v)) {
            continue;
        }
        BitVector x;
        solve_left(indicators, v, x);
        out.push_back({x.ones(), constraint_for(v)});
    }
    return out;
}

long brute_force_mu(const StabilizerCode& code, const Region& region) {
    const std::size_t n_stabs = code.num_stabilizers();
    BitMatrix m = code.stabilizer_matrix();
    const std::size_t d_g = rank(m);
    if (n_stabs > 16 || n_stabs - d_g > 4) {
        throw std::invalid_argument("instance too large for exhaustive basis search");
    }
    EntropyReport e = entanglement_entropy(code, region);
    CutClassification cut = classify_cut(code, region);
    std::uint32_t cut_mask = 0;
    for (std::size_t i : cut.cut) {
        cut_mask |= 1u << i;
    }
    long best = -1;
    for (std::uint32_t sel = 0; sel < (1u << n_stabs); ++sel) {
        if (static_cast<std::size_t>(std::popcount(sel)) != d_g) {
            continue;
        }
        long cost = std::popcount(sel & cut_mask);
        if (best >= 0 && cost >= best) {
            continue;
        }
        RowSpace span(m.cols());
        bool independent = true;
        for (std::size_t i = 0; i < n_stabs && independent; ++i) {
            if ((sel >> i) & 1u) {
                independent = span.insert(m.row(i));
            }
        }
        if (independent) {
            best = cost;
        }
    }
    return best - e.S_A - e.S_B;
}

std::size_t greedy_exchange_cut_count(const StabilizerCode& code, const CutClassification& cut,
                                      const std::vector<std::size_t>& order) {
    BitMatrix m = code.stabilizer_matrix();
    std::vector<bool> is_cut(code.num_stabilizers(), false);
    for (std::size_t i : cut.cut) {
        is_cut[i] = true;
    }
    std::vector<std::size_t> basis;
    {
        RowSpace span(m.cols());
        for (std::size_t i : order) {
            if (span.insert(m.row(i))) {
                basis.push_back(i);
            }
        }
    }
    auto independent = [&](const std::vector<std::size_t>& set) {
        RowSpace span(m.cols());
        for (std::size_t i : set) {
            if (!span.insert(m.row(i))) {
                return false;
            }
        }
        return true;
    };
    bool improved = true;
    while (improved) {
        improved = false;
        std::vector<bool> in_basis(code.num_stabilizers(), false);
        for (std::size_t i : basis) {
            in_basis[i] = true;
        }
        for (std::size_t bi = 0; bi < basis.size() && !improved; ++bi) {
            if (!is_cut[basis[bi]]) {
                continue;
            }
            for (std::size_t s = 0; s < code.num_stabilizers() && !improved; ++s) {
                if (in_basis[s] || is_cut[s]) {
                    continue;
                }
                std::vector<std::size_t> trial = basis;
                trial[bi] = s;
                if (independent(trial)) {
                    basis = std::move(trial);
                    improved = true;
                }
            }
        }
    }
    std::size_t count = 0;
    for (std::size_t i : basis) {
        count += is_cut[i] ? 1 : 0;
    }
    return count;
}

RecInfoReport compute_report(const StabilizerCode& code, const Region& region, const MuOptions& opts) {
    RecInfoReport r;
    r.entropy = entanglement_entropy(code, region);
    CutClassification cut = classify_cut(code, region);
    r.cut_raw = cut.cut.size();
    BitMatrix nontop = nontopological_subspace(code, opts.mining_window);
    r.d_cut_min = min_cut_count(cut, nontop);
    r.mu_definition = static_cast<long>(r.d_cut_min) - r.entropy.S_A - r.entropy.S_B;
    r.mu_bound = static_cast<long>(cut_topological_dim(code, cut, nontop));
    r.nlss = mu_nlss(code, region, opts.window);
    if (opts.want_generators) {
        r.generators = nlss_generators(code, region, opts.window);
    }
    r.agreement = r.mu_definition == static_cast<long>(r.nlss.total()) && r.mu_definition >= r.mu_bound &&
                  r.mu_definition >= 0;
    return r;
}

}  // namespace recinfo
