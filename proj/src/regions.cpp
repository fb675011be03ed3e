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

#include "recinfo/regions.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace recinfo {

namespace {

int wrap(int v, int L) { return ((v % L) + L) % L; }

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) {
        throw std::invalid_argument("bad integer '" + s + "' in region descriptor");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

Coord parse_extents(const std::string& s, int dim) {
    auto parts = split(s, 'x');
    if (static_cast<int>(parts.size()) != dim) {
        throw std::invalid_argument("expected " + std::to_string(dim) + " extents in '" + s + "'");
    }
    Coord e{1, 1, 1};
    for (int i = 0; i < dim; ++i) {
        e[i] = parse_int(parts[i]);
    }
    return e;
}

// Offset of every lattice vertex of qubit q relative to `origin`, wrapped
// into [0, L) under pbc. Returns false under obc if the qubit's vertices
// wrap around the lattice.
bool relative_vertices(const StabilizerCode& code, std::size_t q, const Coord& origin, std::vector<Coord>& out) {
    out.clear();
    const auto& qb = code.qubits()[q];
    const int L = code.L();
    Coord base = qb.pos;
    std::vector<Coord> verts{base};
    if (qb.dir >= 0) {
        Coord b = base;
        b[qb.dir] += 1;
        if (code.bc() == Boundary::obc && b[qb.dir] >= L) {
            return false;
        }
        verts.push_back(b);
    }
    for (Coord v : verts) {
        for (int i = 0; i < code.dim(); ++i) {
            v[i] = code.bc() == Boundary::pbc ? wrap(v[i] - origin[i], L) : v[i] - origin[i];
        }
        out.push_back(v);
    }
    return true;
}

Region from_vertex_predicate(const StabilizerCode& code, const Coord& origin,
                             const std::function<bool(const Coord&)>& inside) {
    Region r;
    r.mask = BitVector(code.num_qubits());
    std::vector<Coord> rel;
    for (std::size_t q = 0; q < code.num_qubits(); ++q) {
        if (!relative_vertices(code, q, origin, rel)) {
            continue;
        }
        if (std::all_of(rel.begin(), rel.end(), inside)) {
            r.qubits.push_back(q);
            r.mask.set(q);
        }
    }
    r.box_origin = origin;
    return r;
}

void check_box(const StabilizerCode& code, const Coord& origin, const Coord& box_extent, const Coord& extents) {
    const int L = code.L();
    for (int i = 0; i < code.dim(); ++i) {
        if (extents[i] < 1) {
            throw std::invalid_argument("region extents must be positive");
        }
        if (2 * extents[i] >= L) {
            throw std::invalid_argument("region extent " + std::to_string(extents[i]) +
                                        " violates the boundedness guard R < L/2 for L=" + std::to_string(L));
        }
        if (code.bc() == Boundary::obc && (origin[i] < 0 || origin[i] + box_extent[i] > L - 1)) {
            throw std::invalid_argument("region does not fit inside the open lattice");
        }
    }
}

void finish(const StabilizerCode& code, Region& r) {
    if (r.qubits.empty() || r.qubits.size() == code.num_qubits()) {
        throw std::invalid_argument("region must be a nonempty proper subset of the qubits");
    }
}

}  // namespace

std::vector<std::size_t> Region::complement() const { return complement_indices(mask.size(), qubits); }

Region cuboid_region(const StabilizerCode& code, Coord origin, Coord extents) {
    const bool edges = edge_model(code.model());
    Coord box{0, 0, 0};
    for (int i = 0; i < code.dim(); ++i) {
        box[i] = edges ? extents[i] : extents[i] - 1;
    }
    check_box(code, origin, box, extents);
    const int dim = code.dim();
    Region r = from_vertex_predicate(code, origin, [&](const Coord& v) {
        for (int i = 0; i < dim; ++i) {
            if (v[i] < 0 || v[i] > box[i]) {
                return false;
            }
        }
        return true;
    });
    r.box_extent = box;
    std::ostringstream d;
    d << "cuboid:";
    for (int i = 0; i < dim; ++i) {
        d << (i ? "x" : "") << extents[i];
    }
    r.descriptor = d.str();
    finish(code, r);
    return r;
}

Region cube_region(const StabilizerCode& code, int R) {
    const bool edges = edge_model(code.model());
    int ext = edges ? R : R - 1;
    int o = std::max(0, (code.L() - 1 - ext) / 2);
    Coord origin{0, 0, 0};
    Coord extents{1, 1, 1};
    for (int i = 0; i < code.dim(); ++i) {
        origin[i] = o;
        extents[i] = R;
    }
    Region r = cuboid_region(code, origin, extents);
    r.descriptor = "cube:" + std::to_string(R);
    return r;
}

Region smooth_cluster_region(const StabilizerCode& code, int R) {
    if (code.model() != Model::cluster1 && code.model() != Model::cluster2 && code.model() != Model::cluster3) {
        throw std::invalid_argument("smooth regions are defined for cluster models only");
    }
    if (R < 1) {
        throw std::invalid_argument("region extents must be positive");
    }
    const int dim = code.dim();
    if (R < 3 || dim == 1) {
        // Too small to chamfer, or a segment with no corners at all.
        Region r = cube_region(code, dim == 1 ? R : 1);
        r.descriptor = "smooth:" + std::to_string(R);
        r.fallback = dim > 1;
        return r;
    }
    // Same R^d vertex box as cube:R with every pair of axes cut at 45
    // degrees: keep v when d_i + d_j >= c for all i < j, where d_i is the
    // distance to the nearest face along axis i.
    const int ext = R - 1;
    const int c = std::max(1, R / 3);
    Coord origin{0, 0, 0};
    Coord box{0, 0, 0};
    Coord extents{1, 1, 1};
    for (int i = 0; i < dim; ++i) {
        origin[i] = std::max(0, (code.L() - 1 - ext) / 2);
        box[i] = ext;
        extents[i] = R;
    }
    check_box(code, origin, box, extents);
    Region r = from_vertex_predicate(code, origin, [&](const Coord& v) {
        std::array<int, 3> d{};
        for (int i = 0; i < dim; ++i) {
            if (v[i] < 0 || v[i] > ext) {
                return false;
            }
            d[i] = std::min(v[i], ext - v[i]);
        }
        for (int i = 0; i < dim; ++i) {
            for (int j = i + 1; j < dim; ++j) {
                if (d[i] + d[j] < c) {
                    return false;
                }
            }
        }
        return true;
    });
    r.box_extent = box;
    r.descriptor = "smooth:" + std::to_string(R);
    finish(code, r);
    return r;
}

Region solid_torus_region(const StabilizerCode& code, Coord extents, int axis, int len) {
    if (code.model() != Model::toric3) {
        throw std::invalid_argument("solid-torus regions are defined for toric3 only");
    }
    if (axis < 0 || axis > 2 || len < 0) {
        throw std::invalid_argument("bad tunnel specification");
    }
    Coord origin{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        origin[i] = std::max(0, (code.L() - 1 - extents[i]) / 2);
    }
    Region outer = cuboid_region(code, origin, extents);
    std::ostringstream d;
    d << "solidtorus:" << extents[0] << "x" << extents[1] << "x" << extents[2] << ":" << "xyz"[axis] << ":" << len;
    outer.descriptor = d.str();
    if (len == 0) {
        return outer;
    }
    Coord lo{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        if (i == axis) {
            continue;
        }
        lo[i] = (extents[i] - len) / 2;
        if (lo[i] < 1 || lo[i] + len > extents[i] - 1) {
            throw std::invalid_argument("tunnel touches the outer surface of the solid torus");
        }
    }
    Region tunnel = from_vertex_predicate(code, origin, [&](const Coord& v) {
        for (int i = 0; i < 3; ++i) {
            if (v[i] < 0 || v[i] > extents[i]) {
                return false;
            }
            if (i != axis && (v[i] < lo[i] || v[i] > lo[i] + len)) {
                return false;
            }
        }
        return true;
    });
    Region r = outer;
    r.qubits.clear();
    for (std::size_t q : outer.qubits) {
        if (!tunnel.mask.get(q)) {
            r.qubits.push_back(q);
        } else {
            r.mask.set(q, false);
        }
    }
    finish(code, r);
    return r;
}

Region explicit_region(const StabilizerCode& code, std::vector<std::size_t> qubits, std::string descriptor) {
    Region r;
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    if (qubits.empty() || qubits.size() >= code.num_qubits()) {
        throw std::invalid_argument("region must be a proper non-empty subset of the qubits");
    }
    if (qubits.back() >= code.num_qubits()) {
        throw std::invalid_argument("qubit index out of range");
    }
    r.mask = BitVector::from_indices(code.num_qubits(), qubits);
    r.qubits = std::move(qubits);
    r.descriptor = std::move(descriptor);
    Coord lo{1 << 30, 1 << 30, 1 << 30};
    Coord hi{-1, -1, -1};
    for (std::size_t q : r.qubits) {
        for (const Coord& v : code.qubit_vertices(q)) {
            for (int i = 0; i < 3; ++i) {
                lo[i] = std::min(lo[i], v[i]);
                hi[i] = std::max(hi[i], v[i]);
            }
        }
    }
    if (!r.qubits.empty()) {
        r.box_origin = lo;
        for (int i = 0; i < 3; ++i) {
            r.box_extent[i] = hi[i] - lo[i];
        }
    }
    return r;
}

Region parse_region(const StabilizerCode& code, const std::string& descriptor) {
    auto parts = split(descriptor, ':');
    if (parts.size() < 2) {
        throw std::invalid_argument("bad region descriptor '" + descriptor + "'");
    }
    const std::string& kind = parts[0];
    if ((kind == "cube" || kind == "square" || kind == "smooth") && parts.size() == 2) {
        int R = parse_int(parts[1]);
        if (kind == "smooth") {
            return smooth_cluster_region(code, R);
        }
        if (kind == "square" && code.dim() != 2) {
            throw std::invalid_argument("square regions need a two-dimensional model");
        }
        if (R < 1) {
            throw std::invalid_argument("region extents must be positive");
        }
        Region r = cube_region(code, R);
        r.descriptor = descriptor;
        return r;
    }
    if (kind == "cuboid" && parts.size() == 2) {
        Coord e = parse_extents(parts[1], code.dim());
        Coord origin{0, 0, 0};
        const bool edges = edge_model(code.model());
        for (int i = 0; i < code.dim(); ++i) {
            origin[i] = std::max(0, (code.L() - 1 - (edges ? e[i] : e[i] - 1)) / 2);
        }
        Region r = cuboid_region(code, origin, e);
        r.descriptor = descriptor;
        return r;
    }
    if (kind == "solidtorus" && parts.size() == 4) {
        Coord e = parse_extents(parts[1], 3);
        int axis = -1;
        if (parts[2].size() == 1 && parts[2][0] >= 'x' && parts[2][0] <= 'z') {
            axis = parts[2][0] - 'x';
        } else {
            axis = parse_int(parts[2]);
        }
        return solid_torus_region(code, e, axis, parse_int(parts[3]));
    }
    throw std::invalid_argument("bad region descriptor '" + descriptor + "'");
}

CutClassification classify_cut(const StabilizerCode& code, const Region& region) {
    CutClassification c;
    const auto& stabs = code.stabilizers();
    for (std::size_t i = 0; i < stabs.size(); ++i) {
        bool a = false;
        bool b = false;
        for (std::size_t q : stabs[i].op.support()) {
            (region.mask.get(q) ? a : b) = true;
        }
        if (a && b) {
            c.cut.push_back(i);
        } else if (a) {
            c.in_A.push_back(i);
        } else {
            c.in_B.push_back(i);
        }
    }
    return c;
}

std::vector<Footprint> footprints(const StabilizerCode& code) {
    const int L = code.L();
    const bool pbc = code.bc() == Boundary::pbc;
    std::vector<Footprint> out(code.num_stabilizers());
    for (std::size_t i = 0; i < code.num_stabilizers(); ++i) {
        auto support = code.stabilizer(i).op.support();
        if (support.empty()) {
            continue;
        }
        Coord ref = code.qubit_vertices(support.front()).front();
        Coord lo{0, 0, 0};
        Coord hi{0, 0, 0};
        for (std::size_t q : support) {
            for (const Coord& v : code.qubit_vertices(q)) {
                for (int d = 0; d < code.dim(); ++d) {
                    int off = v[d] - ref[d];
                    if (pbc) {
                        off = wrap(off + L / 2, L) - L / 2;
                    }
                    lo[d] = std::min(lo[d], off);
                    hi[d] = std::max(hi[d], off);
                }
            }
        }
        for (int d = 0; d < code.dim(); ++d) {
            out[i].lo[d] = ref[d] + lo[d];
            out[i].span[d] = hi[d] - lo[d];
        }
    }
    return out;
}

std::vector<std::size_t> stabilizers_in_box(const StabilizerCode& code, const std::vector<Footprint>& fps, Coord lo,
                                            Coord extent) {
    const int L = code.L();
    const bool pbc = code.bc() == Boundary::pbc;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < fps.size(); ++i) {
        bool inside = true;
        for (int d = 0; d < code.dim() && inside; ++d) {
            int rel = pbc ? wrap(fps[i].lo[d] - lo[d], L) : fps[i].lo[d] - lo[d];
            inside = rel >= 0 && rel + fps[i].span[d] <= extent[d];
        }
        if (inside) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> stabilizers_in_box(const StabilizerCode& code, Coord lo, Coord extent) {
    return stabilizers_in_box(code, footprints(code), lo, extent);
}

Region translate_region(const StabilizerCode& code, const Region& region, Coord shift) {
    if (code.bc() != Boundary::pbc) {
        throw std::invalid_argument("translation needs periodic boundaries");
    }
    std::vector<std::size_t> moved;
    for (std::size_t q : region.qubits) {
        const auto& qb = code.qubits()[q];
        Coord p = qb.pos;
        for (int i = 0; i < code.dim(); ++i) {
            p[i] += shift[i];
        }
        moved.push_back(code.qubit_index(p, qb.dir, qb.slot));
    }
    Region r = explicit_region(code, moved, region.descriptor);
    for (int i = 0; i < code.dim(); ++i) {
        r.box_origin[i] = wrap(region.box_origin[i] + shift[i], code.L());
    }
    r.box_extent = region.box_extent;
    r.fallback = region.fallback;
    return r;
}

}  // namespace recinfo
