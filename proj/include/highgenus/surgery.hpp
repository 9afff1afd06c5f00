// Copyright 2026 The highgenus Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "highgenus/chain.hpp"
#include "highgenus/complex.hpp"
#include "highgenus/random.hpp"

namespace hg {

/// L x L periodic square lattice. Vertex (x, y) has id y*L + x; the
/// horizontal edge leaving it is 2*id, the vertical one 2*id + 1. The
/// column x = 0 and row y = 0 are kept as marked loops.
CellComplex build_torus(int L);

CellComplex disjoint_union(const CellComplex& a, const CellComplex& b);

/// Removes the side x side block of faces whose lower-left corner is
/// `anchor`. The new boundary circle is appended last and starts at the
/// anchor.
CellComplex punch_square_hole(const CellComplex& c, int anchor, int side);

struct HoleSpec {
    int anchor = 0;
    int side = 1;
};

/// Punches several holes at once; boundaries are appended in input order.
CellComplex punch_square_holes(const CellComplex& c, std::span<const HoleSpec> holes);

/// Identifies boundary b2 with b1. With reversed == false the circles are
/// paired head-to-tail (vertex j of b2 meets vertex offset - j of b1), which
/// keeps a coherently oriented complex orientable.
CellComplex sew_boundaries(const CellComplex& c, int b1, int b2, int offset, bool reversed = false);

struct SewSpec {
    int b1 = 0;
    int b2 = 0;
    /// image[j] = position on b1 of the vertex that meets b2's j-th vertex.
    std::vector<int> image;
};

/// Vertex image for a rotation (and optional reflection) of a circle.
std::vector<int> sew_image(int length, int offset, bool reversed);

/// Performs all sews simultaneously. The seam of each sew (b1 after
/// identification) is returned in `seams` when non-null.
CellComplex sew_many(const CellComplex& c, std::span<const SewSpec> specs, std::vector<Walk>* seams = nullptr);

/// L' used by join_two_tori: round(2L/sqrt(3)), bumped to even.
int join_side(int L);

/// Two L' x L' tori with an (L'/2)-square hole each, sewn along the holes.
CellComplex join_two_tori(int L);

/// Base torus with N square tubes attached through pairs of holes. Holes of
/// one handle sit diagonally apart so a loop through the tube has length
/// close to L.
CellComplex build_handled_surface(const Blueprint& bp);

struct Cut {
    Walk cycle;
    int boundary_a = -1;
    int boundary_b = -1;
};

struct CutResult {
    CellComplex complex;
    Cut cut;
};

/// Cuts along a vertex-simple two-sided loop. Vertices and edges of the
/// loop are duplicated; two boundary circles are appended. Handles or
/// marked loops passing through the cut are dropped.
CutResult cut_along_cycle(const CellComplex& c, const BinaryChain& loop, bool allow_separating = false);

struct RepairResult {
    CellComplex complex;
    /// Pairs of boundary indices (in the input complex) that were sewn.
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> offsets;
};

/// Uniform random perfect matching of the cut circles among circles of equal
/// length, each pair sewn with a uniform random offset. The seams become the
/// handles of the result.
RepairResult random_repairing(const CellComplex& c, std::span<const Cut> cuts, std::uint64_t seed,
                              bool reversing = false);
RepairResult random_repairing(const CellComplex& c, std::span<const int> circles, std::uint64_t seed,
                              bool reversing = false);

/// Cuts every handle along its seam and randomly re-pairs the loose ends.
RepairResult repair_handles(const CellComplex& c, std::uint64_t seed, bool reversing = false);

struct SkippedHandle {
    int handle = 0;
    std::string reason;
};

struct SymmetrizeResult {
    CellComplex complex;
    std::vector<int> used_handles;
    std::vector<SkippedHandle> skipped;
    int common_length = 0;
    int detours = 0;
    int kink_excess_before = 0;
    int kink_excess_after = 0;
};

/// Cuts a short loop running along each handle, equalizes their lengths
/// with face detours, and randomly re-pairs the resulting circles.
SymmetrizeResult symmetrize(const CellComplex& c, const Blueprint& bp, std::uint64_t seed);

/// Poincare dual of a closed complex: faces become vertices, edges keep
/// their ids, vertices become faces (dual face v has id v).
CellComplex dualize(const CellComplex& c);


}  // namespace hg
