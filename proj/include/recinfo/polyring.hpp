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

#ifndef RECINFO_POLYRING_HPP
#define RECINFO_POLYRING_HPP

#include <set>
#include <string>
#include <vector>

#include "recinfo/models.hpp"

namespace recinfo {

/// Laurent polynomial in x, y, z over F2, stored as its set of exponents.
class LaurentPoly3 {
   public:
    LaurentPoly3() = default;
    LaurentPoly3(std::initializer_list<Coord> monomials);

    static LaurentPoly3 one() { return {Coord{0, 0, 0}}; }
    static LaurentPoly3 monomial(int a, int b, int c) { return {Coord{a, b, c}}; }

    const std::set<Coord>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool contains(const Coord& m) const { return terms_.count(m) > 0; }
    void toggle(const Coord& m);

    LaurentPoly3& operator+=(const LaurentPoly3& o);
    friend LaurentPoly3 operator+(LaurentPoly3 a, const LaurentPoly3& b) { return a += b; }
    friend LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b);
    bool operator==(const LaurentPoly3& o) const = default;

    /// x -> 1/x, y -> 1/y, z -> 1/z.
    LaurentPoly3 bar() const;
    std::string str() const;

   private:
    std::set<Coord> terms_;
};

/// 2q x m matrix over the Laurent ring: rows are X slots then Z slots of
/// the q qubits per vertex, columns are stabilizer types.
struct StabilizerMap {
    int q = 1;
    int m = 1;
    std::vector<std::vector<LaurentPoly3>> entries;  // [row][col]

    const LaurentPoly3& at(int row, int col) const { return entries.at(row).at(col); }
};

/// The Haah cubic code map with alpha = 1+x+y+z and beta = 1+xy+yz+zx:
/// column 0 is (alpha, beta, 0, 0), column 1 is (0, 0, bar beta, bar alpha).
StabilizerMap haah_map();

/// Product of the column-`col` stabilizers translated by each monomial of
/// P, on the periodic L^3 lattice with q qubits per vertex.
PauliOp expand(const StabilizerMap& map, int col, const LaurentPoly3& P, int L);

/// Every column at every translate, as a code with q qubits per vertex.
StabilizerCode map_to_code(const StabilizerMap& map, int L);

/// True if the two codes hold the same set of stabilizer rows.
bool same_stabilizer_rows(const StabilizerCode& a, const StabilizerCode& b);

struct PolyCount {
    std::size_t unknowns = 0;          // translates whose cube meets A
    std::size_t dead = 0;              // unknowns appearing in no equation
    std::size_t equations = 0;
    std::size_t equation_rank = 0;
    std::size_t solution_dim = 0;      // n: dimension of the solution space
    std::size_t boundary_plane = 0;    // unknowns on the three planes through the origin
    bool injective = false;            // P -> operator is injective on the unknown box
    std::size_t nlss() const { return solution_dim - dead; }
};

/// Solves "the column-`col` product has no support in A = [1, R]^3" for
/// polynomials on the translates meeting A.
PolyCount nlss_poly_count(const StabilizerMap& map, int col, int R);

/// 2 (n_X - dead) for the Haah map; checks the mirrored Z count agrees.
std::size_t haah_nlss_count(int R);
std::size_t haah_nlss_count(const StabilizerMap& map, int R);

}  // namespace recinfo

#endif  // RECINFO_POLYRING_HPP
