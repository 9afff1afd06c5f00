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

#include <memory>
#include <span>
#include <vector>

#include "highgenus/chain.hpp"
#include "highgenus/complex.hpp"
#include "highgenus/gf2.hpp"

namespace hg {

/// Boundary operators over GF(2), stored column-wise: d2[f] is the edge
/// support of face f, d1[e] the endpoint support of edge e.
struct BoundaryMaps {
    std::vector<BitVector> d2;
    std::vector<BitVector> d1;
};

BoundaryMaps boundary_maps(const CellComplex& c);

/// True iff d1 * d2 == 0 (every face boundary meets each vertex evenly).
bool composes_to_zero(const BoundaryMaps& maps);

/// Vertex-image of an edge chain (the syndrome of a primal chain).
BitVector boundary_of(const CellComplex& c, const BinaryChain& chain);

/// Face-image of an edge chain under the transpose of d2 (the syndrome of
/// a dual chain).
BitVector coboundary_of(const CellComplex& c, const BinaryChain& chain);

struct LogicalPair {
    BinaryChain z;  // primal cycle
    BinaryChain x;  // dual cycle (co-loop)
};

/// CSS code on the edges of a closed complex: vertex stars are X-type,
/// face boundaries Z-type; Z logicals are primal cycles and X logicals
/// dual cycles with pairing(Z_i, X_j) = delta_ij. Z operators are the
/// marked loops first, then handle seams, then tree-cotree generators.
struct CssCode {
    int num_qubits = 0;
    int k = 0;
    std::vector<BinaryChain> vertex_stabilizers;
    std::vector<BinaryChain> face_stabilizers;
    std::vector<LogicalPair> logical_pairs;
    /// Logical qubits that belong to the base torus rather than a handle.
    std::vector<int> base_qubits;
    /// Number of leading pairs whose Z operator is one of the complex's
    /// marked loops.
    int seeded = 0;
};

CssCode css_from_complex(const CellComplex& c);

bool stabilizers_commute(const CssCode& code);

/// Rank of the vertex and face stabilizer matrices, by elimination.
std::pair<std::size_t, std::size_t> stabilizer_ranks(const CssCode& code);

/// Pairing matrix in symplectic form over (x | z) coordinates, 2k x 2k, in
/// the order Z_1..Z_k, X_1..X_k.
std::vector<BitVector> symplectic_gram(const CssCode& code);

/// Membership of cycles in the image of d2 (and of dual cycles in the image
/// of d1^T), answered against cached echelon forms.
class HomologyOracle {
public:
    explicit HomologyOracle(const CellComplex& c);

    bool is_cycle(const BinaryChain& z) const;
    bool is_dual_cycle(const BinaryChain& x) const;

    /// Throws not-a-cycle when z has a boundary.
    bool is_nullhomologous(const BinaryChain& z) const;
    bool is_dual_nullhomologous(const BinaryChain& x) const;

private:
    const CellComplex* complex_;
    BoundaryMaps maps_;
    mutable std::unique_ptr<EchelonBasis> faces_;
    mutable std::unique_ptr<EchelonBasis> stars_;
};

bool is_nullhomologous(const CellComplex& c, const BinaryChain& z);

struct SystoleReport {
    int primal = 0;
    BinaryChain primal_witness;
    int dual = 0;
    BinaryChain dual_witness;
    /// Per-handle shortest loop crossing the handle seam once (same order
    /// as CellComplex::handles). Filled only on request.
    std::vector<int> handle_loops;
    bool conclusive = true;
};

/// Exact shortest homologically nontrivial cycle on the primal and dual
/// graphs, via fundamental cycles of breadth-first trees.
SystoleReport systole(const CellComplex& c, bool with_handles = false);

/// Exhaustive search over simple cycles of length <= r_max. Independent of
/// the tree-based search: classes are tested by elimination on d2.
SystoleReport systole_bruteforce(const CellComplex& c, int r_max);

/// Shortest cycle crossing the given handle's seam exactly once. Vertices
/// flagged in `blocked` (indexed by vertex id) are avoided.
BinaryChain handle_l_loop(const CellComplex& c, int handle_id, std::span<const char> blocked = {});

}  // namespace hg
