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

#include "recinfo/polyring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace recinfo {

namespace {

int wrap(int v, int L) { return ((v % L) + L) % L; }

Coord add(const Coord& a, const Coord& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Coord sub(const Coord& a, const Coord& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

std::size_t vertex_index(const Coord& c, int L) {
    return static_cast<std::size_t>(wrap(c[0], L) + L * (wrap(c[1], L) + L * wrap(c[2], L)));
}

}  // namespace

LaurentPoly3::LaurentPoly3(std::initializer_list<Coord> monomials) {
    for (const Coord& m : monomials) {
        toggle(m);
    }
}

void LaurentPoly3::toggle(const Coord& m) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.insert(m);
    } else {
        terms_.erase(it);
    }
}

LaurentPoly3& LaurentPoly3::operator+=(const LaurentPoly3& o) {
    for (const Coord& m : o.terms_) {
        toggle(m);
    }
    return *this;
}

LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b) {
    LaurentPoly3 out;
    for (const Coord& u : a.terms_) {
        for (const Coord& v : b.terms_) {
            out.toggle(add(u, v));
        }
    }
    return out;
}

LaurentPoly3 LaurentPoly3::bar() const {
    LaurentPoly3 out;
    for (const Coord& m : terms_) {
        out.toggle({-m[0], -m[1], -m[2]});
    }
    return out;
}

std::string LaurentPoly3::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string s;
    for (const Coord& m : terms_) {
        if (!s.empty()) {
            s += " + ";
        }
        std::string t;
        for (int i = 0; i < 3; ++i) {
            if (m[i] == 0) {
                continue;
            }
            t += "xyz"[i];
            if (m[i] != 1) {
                t += "^" + std::to_string(m[i]);
            }
        }
        s += t.empty() ? "1" : t;
    }
    return s;
}

StabilizerMap haah_map() {
    LaurentPoly3 alpha{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    LaurentPoly3 beta{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    StabilizerMap m;
    m.q = 2;
    m.m = 2;
    m.entries = {{alpha, {}}, {beta, {}}, {{}, beta.bar()}, {{}, alpha.bar()}};
    return m;
}

PauliOp expand(const StabilizerMap& map, int col, const LaurentPoly3& P, int L) {
    const std::size_t n = static_cast<std::size_t>(map.q) * L * L * L;
    PauliOp op(n);
    for (const Coord& shift : P.terms()) {
        for (int row = 0; row < 2 * map.q; ++row) {
            const int slot = row % map.q;
            const bool is_x = row < map.q;
            for (const Coord& m : map.at(row, col).terms()) {
                std::size_t q = static_cast<std::size_t>(map.q) * vertex_index(add(shift, m), L) + slot;
                if (is_x) {
                    op.x().flip(q);
                } else {
                    op.z().flip(q);
                }
            }
        }
    }
    return op;
}

StabilizerCode map_to_code(const StabilizerMap& map, int L) {
    std::vector<Stabilizer> stabs;
    for (int col = 0; col < map.m; ++col) {
        for (int z = 0; z < L; ++z) {
            for (int y = 0; y < L; ++y) {
                for (int x = 0; x < L; ++x) {
                    Coord a{x, y, z};
                    std::string label = "col" + std::to_string(col) + "[" + std::to_string(x) + "," +
                                        std::to_string(y) + "," + std::to_string(z) + "]";
                    stabs.push_back({label, "col" + std::to_string(col), expand(map, col, {a}, L), a});
                }
            }
        }
    }
    Model tag = map.q == 2 ? Model::haah : Model::custom;
    return StabilizerCode::vertex_lattice(tag, L, map.q, std::move(stabs));
}

bool same_stabilizer_rows(const StabilizerCode& a, const StabilizerCode& b) {
    if (a.num_qubits() != b.num_qubits() || a.num_stabilizers() != b.num_stabilizers()) {
        return false;
    }
    auto rows = [](const StabilizerCode& c) {
        std::vector<BitVector> r;
        for (const auto& s : c.stabilizers()) {
            r.push_back(s.op.symplectic());
        }
        std::sort(r.begin(), r.end());
        return r;
    };
    return rows(a) == rows(b);
}

PolyCount nlss_poly_count(const StabilizerMap& map, int col, int R) {
    if (R < 1) {
        throw std::invalid_argument("R must be positive");
    }
    Coord lo_off{1 << 20, 1 << 20, 1 << 20};
    Coord hi_off{-(1 << 20), -(1 << 20), -(1 << 20)};
    for (int row = 0; row < 2 * map.q; ++row) {
        for (const Coord& m : map.at(row, col).terms()) {
            for (int d = 0; d < 3; ++d) {
                lo_off[d] = std::min(lo_off[d], m[d]);
                hi_off[d] = std::max(hi_off[d], m[d]);
            }
        }
    }
    if (lo_off[0] > hi_off[0]) {
        throw std::invalid_argument("empty map column");
    }
    // A = [1, R]^3. Unknowns: translates whose bounding box meets A.
    Coord lo{};
    Coord hi{};
    for (int d = 0; d < 3; ++d) {
        lo[d] = 1 - hi_off[d];
        hi[d] = R - lo_off[d];
    }
    std::map<Coord, std::size_t> unknown;
    std::vector<Coord> unknown_list;
    for (int z = lo[2]; z <= hi[2]; ++z) {
        for (int y = lo[1]; y <= hi[1]; ++y) {
            for (int x = lo[0]; x <= hi[0]; ++x) {
                unknown[{x, y, z}] = unknown_list.size();
                unknown_list.push_back({x, y, z});
            }
        }
    }
    PolyCount pc;
    pc.unknowns = unknown_list.size();
    for (const Coord& a : unknown_list) {
        bool inner = true;
        for (int d = 0; d < 3; ++d) {
            inner = inner && a[d] >= 1 && a[d] <= R;
        }
        pc.boundary_plane += inner ? 0 : 1;
    }

    // One equation per (qubit slot, Pauli part, vertex b in A): the
    // coefficient of that Pauli letter at b must vanish.
    std::vector<BitVector> eqs;
    std::vector<bool> used(unknown_list.size(), false);
    for (int row = 0; row < 2 * map.q; ++row) {
        const LaurentPoly3& poly = map.at(row, col);
        if (poly.is_zero()) {
            continue;
        }
        for (int z = 1; z <= R; ++z) {
            for (int y = 1; y <= R; ++y) {
                for (int x = 1; x <= R; ++x) {
                    BitVector e(unknown_list.size());
                    for (const Coord& m : poly.terms()) {
                        auto it = unknown.find(sub({x, y, z}, m));
                        if (it != unknown.end()) {
                            e.flip(it->second);
                            used[it->second] = true;
                        }
                    }
                    eqs.push_back(std::move(e));
                }
            }
        }
    }
    pc.equations = eqs.size();
    BitMatrix sys = BitMatrix::from_rows(unknown_list.size(), eqs);
    pc.equation_rank = rank(sys);
    pc.solution_dim = pc.unknowns - pc.equation_rank;
    pc.dead = static_cast<std::size_t>(std::count(used.begin(), used.end(), false));

    // Injectivity on a lattice big enough that no translate wraps.
    int L = 0;
    for (int d = 0; d < 3; ++d) {
        L = std::max(L, (hi[d] + hi_off[d]) - (lo[d] + lo_off[d]) + 2);
    }
    std::vector<BitVector> images;
    for (const Coord& a : unknown_list) {
        images.push_back(expand(map, col, {sub(a, add(lo, lo_off))}, L).symplectic());
    }
    BitMatrix img = BitMatrix::from_rows(images.front().size(), images);
    pc.injective = rank(img) == unknown_list.size();
    return pc;
}

std::size_t haah_nlss_count(const StabilizerMap& map, int R) {
    PolyCount x = nlss_poly_count(map, 0, R);
    PolyCount z = nlss_poly_count(map, 1, R);
    if (!x.injective || !z.injective) {
        throw std::runtime_error("polynomial-to-operator map is not injective on the box");
    }
    if (x.nlss() != z.nlss()) {
        throw std::runtime_error("X and Z polynomial counts differ");
    }
    return x.nlss() + z.nlss();
}

std::size_t haah_nlss_count(int R) { return haah_nlss_count(haah_map(), R); }

}  // namespace recinfo
