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

#include "recinfo/models.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace recinfo {

namespace {

struct Term {
    Coord offset;
    int dir;
    int slot;
    char kind;
};

struct Template {
    std::string type;
    std::vector<Term> terms;
};

int wrap(int v, int L) { return ((v % L) + L) % L; }

std::string coord_str(const Coord& c, int dim) {
    std::string s = "[";
    for (int i = 0; i < dim; ++i) {
        if (i) {
            s += ",";
        }
        s += std::to_string(c[i]);
    }
    return s + "]";
}

Coord unit(int d) {
    Coord c{0, 0, 0};
    c[d] = 1;
    return c;
}

Coord add(Coord a, const Coord& b) {
    for (int i = 0; i < 3; ++i) {
        a[i] += b[i];
    }
    return a;
}

Coord neg(Coord a) {
    for (int& v : a) {
        v = -v;
    }
    return a;
}

// Four edges bounding the plaquette spanned by directions a and b at the
// origin vertex.
std::vector<Term> plaquette_terms(int a, int b, char kind) {
    return {{{0, 0, 0}, a, 0, kind}, {unit(b), a, 0, kind}, {{0, 0, 0}, b, 0, kind}, {unit(a), b, 0, kind}};
}

std::vector<Template> templates(Model m) {
    switch (m) {
        case Model::cluster1:
        case Model::cluster2:
        case Model::cluster3: {
            int d = model_dim(m);
            Template t{"cluster", {{{0, 0, 0}, -1, 0, 'Z'}}};
            for (int i = 0; i < d; ++i) {
                t.terms.push_back({unit(i), -1, 0, 'X'});
                t.terms.push_back({neg(unit(i)), -1, 0, 'X'});
            }
            return {t};
        }
        case Model::toric2: {
            Template star{"star", {}};
            for (int i = 0; i < 2; ++i) {
                star.terms.push_back({{0, 0, 0}, i, 0, 'X'});
                star.terms.push_back({neg(unit(i)), i, 0, 'X'});
            }
            return {star, {"plaquette", plaquette_terms(0, 1, 'Z')}};
        }
        case Model::toric3: {
            Template star{"star", {}};
            for (int i = 0; i < 3; ++i) {
                star.terms.push_back({{0, 0, 0}, i, 0, 'X'});
                star.terms.push_back({neg(unit(i)), i, 0, 'X'});
            }
            return {star,
                    {"plaquette_xy", plaquette_terms(0, 1, 'Z')},
                    {"plaquette_yz", plaquette_terms(1, 2, 'Z')},
                    {"plaquette_zx", plaquette_terms(2, 0, 'Z')}};
        }
        case Model::xcube: {
            auto vertex = [](int a, int b) {
                std::vector<Term> t;
                for (int i : {a, b}) {
                    t.push_back({{0, 0, 0}, i, 0, 'Z'});
                    t.push_back({neg(unit(i)), i, 0, 'Z'});
                }
                return t;
            };
            Template cube{"cube", {}};
            for (int d = 0; d < 3; ++d) {
                int e = (d + 1) % 3;
                int f = (d + 2) % 3;
                for (Coord o : {Coord{0, 0, 0}, unit(e), unit(f), add(unit(e), unit(f))}) {
                    cube.terms.push_back({o, d, 0, 'X'});
                }
            }
            return {{"vertex_xy", vertex(0, 1)}, {"vertex_yz", vertex(1, 2)}, {"vertex_zx", vertex(2, 0)}, cube};
        }
        case Model::haah: {
            Template gx{"GX", {}};
            for (Coord o : {Coord{0, 0, 0}, Coord{1, 0, 0}, Coord{0, 1, 0}, Coord{0, 0, 1}}) {
                gx.terms.push_back({o, -1, 0, 'X'});
            }
            for (Coord o : {Coord{0, 0, 0}, Coord{1, 1, 0}, Coord{0, 1, 1}, Coord{1, 0, 1}}) {
                gx.terms.push_back({o, -1, 1, 'X'});
            }
            Template gz{"GZ", {}};
            for (Coord o : {Coord{1, 1, 1}, Coord{0, 0, 1}, Coord{1, 0, 0}, Coord{0, 1, 0}}) {
                gz.terms.push_back({o, -1, 0, 'Z'});
            }
            for (Coord o : {Coord{1, 1, 1}, Coord{0, 1, 1}, Coord{1, 0, 1}, Coord{1, 1, 0}}) {
                gz.terms.push_back({o, -1, 1, 'Z'});
            }
            return {gx, gz};
        }
        case Model::custom:
            break;
    }
    throw std::invalid_argument("no lattice templates for custom codes");
}

void fail_if_anticommuting(const StabilizerCode& code) {
    auto bad = find_anticommuting_pair(code);
    if (bad) {
        throw std::runtime_error("stabilizers " + code.stabilizer(bad->first).label + " and " +
                                 code.stabilizer(bad->second).label + " anticommute");
    }
}

}  // namespace

std::string model_name(Model m) {
    switch (m) {
        case Model::cluster1:
            return "cluster1";
        case Model::cluster2:
            return "cluster2";
        case Model::cluster3:
            return "cluster3";
        case Model::toric2:
            return "toric2";
        case Model::toric3:
            return "toric3";
        case Model::xcube:
            return "xcube";
        case Model::haah:
            return "haah";
        case Model::custom:
            return "custom";
    }
    return "?";
}

Model parse_model(const std::string& name) {
    for (Model m : {Model::cluster1, Model::cluster2, Model::cluster3, Model::toric2, Model::toric3, Model::xcube,
                    Model::haah}) {
        if (model_name(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown model '" + name + "'");
}

std::string boundary_name(Boundary b) { return b == Boundary::pbc ? "pbc" : "obc"; }

Boundary parse_boundary(const std::string& name) {
    if (name == "pbc") {
        return Boundary::pbc;
    }
    if (name == "obc") {
        return Boundary::obc;
    }
    throw std::invalid_argument("unknown boundary condition '" + name + "'");
}

int model_dim(Model m) {
    switch (m) {
        case Model::cluster1:
        case Model::custom:
            return 1;
        case Model::cluster2:
        case Model::toric2:
            return 2;
        default:
            return 3;
    }
}

bool edge_model(Model m) { return m == Model::toric2 || m == Model::toric3 || m == Model::xcube; }

StabilizerCode build(const ModelSpec& spec) {
    if (spec.model == Model::custom) {
        throw std::invalid_argument("custom codes are built with StabilizerCode::custom");
    }
    if (spec.model == Model::haah && spec.bc == Boundary::obc) {
        throw std::invalid_argument("open boundaries are not supported for haah");
    }
    const int L = spec.L;
    // toric2 and haah admit L = 2 as degenerate but valid wrapped instances.
    int min_L = (spec.model == Model::toric2 || spec.model == Model::haah) ? 2 : 3;
    if (L < min_L || L > 64) {
        throw std::invalid_argument("L out of range for " + model_name(spec.model));
    }

    StabilizerCode code;
    code.model_ = spec.model;
    code.L_ = L;
    code.bc_ = spec.bc;
    code.dim_ = model_dim(spec.model);
    const int d = code.dim_;
    std::size_t n_vertices = 1;
    for (int i = 0; i < d; ++i) {
        n_vertices *= static_cast<std::size_t>(L);
    }
    auto vertex_coord = [&](std::size_t v) {
        Coord c{0, 0, 0};
        for (int i = 0; i < d; ++i) {
            c[i] = static_cast<int>(v % static_cast<std::size_t>(L));
            v /= static_cast<std::size_t>(L);
        }
        return c;
    };

    if (edge_model(spec.model)) {
        code.num_sites_ = n_vertices * static_cast<std::size_t>(d);
        for (std::size_t v = 0; v < n_vertices; ++v) {
            for (int dir = 0; dir < d; ++dir) {
                code.qubits_.push_back({vertex_coord(v), dir, 0, code.qubits_.size()});
            }
        }
    } else if (spec.model == Model::haah) {
        code.num_sites_ = n_vertices;
        code.per_site_ = 2;
        for (std::size_t v = 0; v < n_vertices; ++v) {
            code.qubits_.push_back({vertex_coord(v), -1, 0, v});
            code.qubits_.push_back({vertex_coord(v), -1, 1, v});
        }
    } else {
        code.num_sites_ = n_vertices;
        for (std::size_t v = 0; v < n_vertices; ++v) {
            code.qubits_.push_back({vertex_coord(v), -1, 0, v});
        }
    }

    const std::size_t n = code.qubits_.size();
    for (const Template& t : templates(spec.model)) {
        for (std::size_t v = 0; v < n_vertices; ++v) {
            Coord anchor = vertex_coord(v);
            PauliOp op(n);
            for (const Term& term : t.terms) {
                Coord p = add(anchor, term.offset);
                bool inside = true;
                for (int i = 0; i < d; ++i) {
                    inside = inside && p[i] >= 0 && p[i] < L;
                }
                if (!inside && spec.bc == Boundary::obc) {
                    continue;
                }
                std::size_t q = code.qubit_index(p, term.dir, term.slot);
                // Terms on a shared qubit multiply (relevant only for tiny L).
                PauliOp single = PauliOp::single(n, q, term.kind);
                op *= single;
            }
            code.stabs_.push_back({t.type + coord_str(anchor, d), t.type, std::move(op), anchor});
        }
    }
    fail_if_anticommuting(code);
    return code;
}

StabilizerCode StabilizerCode::custom(std::size_t n, std::vector<Stabilizer> stabilizers) {
    StabilizerCode code;
    code.model_ = Model::custom;
    code.L_ = static_cast<int>(n);
    code.bc_ = Boundary::obc;
    code.dim_ = 1;
    code.num_sites_ = n;
    for (std::size_t i = 0; i < n; ++i) {
        code.qubits_.push_back({{static_cast<int>(i), 0, 0}, -1, 0, i});
    }
    for (auto& s : stabilizers) {
        if (s.op.num_qubits() != n) {
            throw std::invalid_argument("stabilizer " + s.label + " has the wrong qubit count");
        }
    }
    code.stabs_ = std::move(stabilizers);
    fail_if_anticommuting(code);
    return code;
}

StabilizerCode StabilizerCode::vertex_lattice(Model tag, int L, int q, std::vector<Stabilizer> stabilizers) {
    if (edge_model(tag) || L < 2 || q < 1) {
        throw std::invalid_argument("bad vertex lattice parameters");
    }
    StabilizerCode code;
    code.model_ = tag;
    code.L_ = L;
    code.bc_ = Boundary::pbc;
    code.dim_ = 3;
    code.per_site_ = q;
    code.num_sites_ = static_cast<std::size_t>(L) * L * L;
    for (std::size_t v = 0; v < code.num_sites_; ++v) {
        Coord c{static_cast<int>(v % L), static_cast<int>((v / L) % L), static_cast<int>(v / (L * L))};
        for (int s = 0; s < q; ++s) {
            code.qubits_.push_back({c, -1, s, v});
        }
    }
    for (auto& s : stabilizers) {
        if (s.op.num_qubits() != code.qubits_.size()) {
            throw std::invalid_argument("stabilizer " + s.label + " has the wrong qubit count");
        }
    }
    code.stabs_ = std::move(stabilizers);
    fail_if_anticommuting(code);
    return code;
}

std::vector<PauliOp> StabilizerCode::ops() const {
    std::vector<PauliOp> out;
    out.reserve(stabs_.size());
    for (const auto& s : stabs_) {
        out.push_back(s.op);
    }
    return out;
}

std::size_t StabilizerCode::qubit_index(Coord pos, int dir, int slot) const {
    std::size_t v = 0;
    for (int i = dim_ - 1; i >= 0; --i) {
        v = v * static_cast<std::size_t>(L_) + static_cast<std::size_t>(wrap(pos[i], L_));
    }
    if (model_ == Model::custom && dim_ == 1) {
        return static_cast<std::size_t>(pos[0]);
    }
    if (edge_model(model_)) {
        return v * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(dir);
    }
    return v * static_cast<std::size_t>(per_site_) + static_cast<std::size_t>(slot);
}

std::vector<Coord> StabilizerCode::qubit_vertices(std::size_t q) const {
    const Qubit& qb = qubits_.at(q);
    if (qb.dir < 0) {
        return {qb.pos};
    }
    Coord b = qb.pos;
    // Under obc the far end of a boundary edge stays at coordinate L.
    b[qb.dir] = bc_ == Boundary::pbc ? wrap(b[qb.dir] + 1, L_) : b[qb.dir] + 1;
    return {qb.pos, b};
}

std::string StabilizerCode::qubit_label(std::size_t q) const {
    const Qubit& qb = qubits_.at(q);
    std::string s = coord_str(qb.pos, dim_);
    if (qb.dir >= 0) {
        s += "xyz"[qb.dir];
    } else if (per_site_ > 1) {
        s += static_cast<char>('a' + qb.slot);
    }
    return s;
}

BitMatrix StabilizerCode::stabilizer_matrix() const {
    BitMatrix m(stabs_.size(), 2 * num_qubits());
    for (std::size_t i = 0; i < stabs_.size(); ++i) {
        m.set_row(i, stabs_[i].op.symplectic());
    }
    return m;
}

std::vector<std::size_t> StabilizerCode::site_support(const PauliOp& p) const {
    std::vector<std::size_t> sites;
    for (std::size_t q : p.support()) {
        std::size_t s = qubits_[q].site;
        if (sites.empty() || sites.back() != s) {
            sites.push_back(s);
        }
    }
    return sites;
}

std::string StabilizerCode::render(const PauliOp& p) const {
    std::string out;
    for (std::size_t q : p.support()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += p.at(q);
        out += qubit_label(q);
    }
    return out.empty() ? "I" : out;
}

void StabilizerCode::replace_stabilizer(std::size_t i, PauliOp op) { stabs_.at(i).op = std::move(op); }

std::vector<std::vector<std::size_t>> declared_local_constraints(const StabilizerCode& code) {
    std::vector<std::vector<std::size_t>> out;
    if (code.bc() != Boundary::pbc) {
        return out;
    }
    const int L = code.L();
    const std::size_t nv = static_cast<std::size_t>(L) * L * L;
    auto vid = [&](Coord c) {
        return static_cast<std::size_t>(wrap(c[0], L) + L * (wrap(c[1], L) + L * wrap(c[2], L)));
    };
    if (code.model() == Model::toric3) {
        // Stabilizer blocks: stars, then xy, yz, zx plaquettes.
        for (std::size_t v = 0; v < nv; ++v) {
            Coord c = code.stabilizer(v).anchor;
            out.push_back({nv + vid(c), nv + vid(add(c, unit(2))), 2 * nv + vid(c), 2 * nv + vid(add(c, unit(0))),
                           3 * nv + vid(c), 3 * nv + vid(add(c, unit(1)))});
        }
    } else if (code.model() == Model::xcube) {
        for (std::size_t v = 0; v < nv; ++v) {
            out.push_back({v, nv + v, 2 * nv + v});
        }
    }
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_anticommuting_pair(const StabilizerCode& code) {
    const auto& stabs = code.stabilizers();
    std::vector<std::vector<std::size_t>> by_qubit(code.num_qubits());
    for (std::size_t i = 0; i < stabs.size(); ++i) {
        for (std::size_t q : stabs[i].op.support()) {
            by_qubit[q].push_back(i);
        }
    }
    for (std::size_t i = 0; i < stabs.size(); ++i) {
        std::vector<std::size_t> partners;
        for (std::size_t q : stabs[i].op.support()) {
            for (std::size_t j : by_qubit[q]) {
                if (j > i) {
                    partners.push_back(j);
                }
            }
        }
        std::sort(partners.begin(), partners.end());
        partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
        for (std::size_t j : partners) {
            if (!stabs[i].op.commutes(stabs[j].op)) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

ValidationReport validate(const StabilizerCode& code) {
    ValidationReport r;
    r.n_qubits = code.num_qubits();
    r.n_stabilizers = code.num_stabilizers();
    if (auto bad = find_anticommuting_pair(code)) {
        r.ok = false;
        r.failures.push_back("anticommuting pair: " + code.stabilizer(bad->first).label + ", " +
                             code.stabilizer(bad->second).label);
    }
    BitVector covered(code.num_qubits());
    for (const auto& s : code.stabilizers()) {
        covered |= s.op.support_mask();
    }
    std::vector<bool> site_hit(code.num_sites(), false);
    for (std::size_t q : covered.ones()) {
        site_hit[code.qubits()[q].site] = true;
    }
    for (std::size_t s = 0; s < site_hit.size(); ++s) {
        if (!site_hit[s]) {
            r.ok = false;
            r.failures.push_back("site " + std::to_string(s) + " is not covered by any stabilizer");
            break;
        }
    }
    if (r.n_stabilizers < r.n_qubits) {
        r.ok = false;
        r.failures.push_back("fewer stabilizers than qubits");
    }
    r.d_G = rank(code.stabilizer_matrix());
    r.d_logical = r.n_qubits - r.d_G;
    r.dim_C = r.n_stabilizers - r.d_G;
    return r;
}

std::string export_table(const StabilizerCode& code) {
    std::ostringstream out;
    for (const auto& s : code.stabilizers()) {
        auto part = [&](const BitVector& bits) {
            std::string t;
            for (std::size_t q : bits.ones()) {
                if (!t.empty()) {
                    t += ',';
                }
                t += code.qubit_label(q);
            }
            return t.empty() ? std::string("-") : t;
        };
        out << s.label << '\t' << s.type << '\t' << part(s.op.x()) << '\t' << part(s.op.z()) << '\n';
    }
    return out.str();
}

}  // namespace recinfo
