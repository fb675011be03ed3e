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

#ifndef RECINFO_REGIONS_HPP
#define RECINFO_REGIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "recinfo/models.hpp"

namespace recinfo {

/// Subsystem A as a set of qubits, plus the closed vertex box that bounds it.
struct Region {
    std::vector<std::size_t> qubits;  // sorted
    BitVector mask;
    std::string descriptor;
    Coord box_origin{};
    Coord box_extent{};  // box is [origin, origin + extent] in vertex units
    bool fallback = false;

    bool contains(std::size_t q) const { return mask.get(q); }
    std::vector<std::size_t> complement() const;
};

struct CutClassification {
    std::vector<std::size_t> in_A;
    std::vector<std::size_t> in_B;
    std::vector<std::size_t> cut;
};

/// Cuboid with extents (R1, R2, R3); unused dimensions are ignored.
/// Edge models take the edges with both endpoints in the closed vertex box
/// [origin, origin + R]; vertex models take the R1 x R2 x R3 block of
/// vertices with all their qubits.
Region cuboid_region(const StabilizerCode& code, Coord origin, Coord extents);
Region cube_region(const StabilizerCode& code, int R);

/// Cluster-model region: the cube:R vertex box with its corners and edges
/// chamfered at 45 degrees. R < 3 falls back to a single site (flagged).
Region smooth_cluster_region(const StabilizerCode& code, int R);

/// Toric3 cuboid pierced by a square tunnel of width `len` along `axis`.
/// Edges with both endpoints in the closed tunnel prism go to B. len = 0
/// gives the plain cuboid.
Region solid_torus_region(const StabilizerCode& code, Coord extents, int axis, int len);

/// Parses descriptors "cube:R", "cuboid:R1xR2xR3", "square:R", "smooth:R",
/// "solidtorus:R1xR2xR3:axis:len". Throws std::invalid_argument.
Region parse_region(const StabilizerCode& code, const std::string& descriptor);

/// Region made of an explicit qubit list (no boundedness guard).
/// Throws std::invalid_argument unless `qubits` is a proper non-empty subset.
Region explicit_region(const StabilizerCode& code, std::vector<std::size_t> qubits, std::string descriptor);

CutClassification classify_cut(const StabilizerCode& code, const Region& region);

/// Smallest vertex box holding a stabilizer: [lo, lo + span].
struct Footprint {
    Coord lo{};
    Coord span{};
};

/// Footprints of every stabilizer. Under pbc, vertices are unwrapped around
/// the first one, so spans are meaningful only for stabilizers smaller than
/// L/2.
std::vector<Footprint> footprints(const StabilizerCode& code);

/// Stabilizers whose footprint lies inside the closed vertex box
/// [lo, lo + extent] (coordinates taken mod L under pbc).
std::vector<std::size_t> stabilizers_in_box(const StabilizerCode& code, const std::vector<Footprint>& fps, Coord lo,
                                            Coord extent);
std::vector<std::size_t> stabilizers_in_box(const StabilizerCode& code, Coord lo, Coord extent);

/// Translates every qubit of a region by `shift` lattice vertices (pbc).
Region translate_region(const StabilizerCode& code, const Region& region, Coord shift);

}  // namespace recinfo

#endif  // RECINFO_REGIONS_HPP
