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
#include <string>
#include <vector>

#include "highgenus/chain.hpp"
#include "highgenus/complex.hpp"
#include "highgenus/homology.hpp"
#include "highgenus/random.hpp"

namespace hg {

struct ErrorPattern {
    BinaryChain x_chain;  // decoded on the primal graph
    BinaryChain z_chain;  // decoded on the dual graph
};

/// Violated checks: vertices for the primal sector, faces for the dual.
struct Syndrome {
    std::vector<int> defects;
    friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

enum class Sector { primal, dual };

ErrorPattern sample_iid_error(const CellComplex& c, double p, std::uint64_t seed);
ErrorPattern sample_iid_error(const CellComplex& c, double p, Rng& rng);

Syndrome vertex_syndrome(const CellComplex& c, const BinaryChain& chain);
Syndrome face_syndrome(const CellComplex& c, const BinaryChain& chain);
Syndrome syndrome_in(const CellComplex& c, Sector sector, const BinaryChain& chain);

struct SyndromePair {
    Syndrome x;
    Syndrome z;
};

SyndromePair syndrome_of(const CellComplex& c, const ErrorPattern& e);

/// Graph whose nodes are the checks of one sector and whose edges are the
/// qubits. Neighbours are kept in edge-id order so shortest paths are
/// reproducible.
class DecodingGraph {
public:
    DecodingGraph(const CellComplex& c, Sector sector);

    int num_nodes() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return num_edges_; }
    Sector sector() const { return sector_; }

    /// BFS from `source`; fills dist and parent edge (-1 for unreached).
    void bfs(int source, std::vector<int>& dist, std::vector<int>& parent) const;
    int other(int e, int node) const;

private:
    Sector sector_;
    int num_edges_ = 0;
    std::vector<std::pair<int, int>> ends_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

struct Correction {
    BinaryChain chain;
    long long matching_weight = 0;
};

Correction decode_mwpm(const DecodingGraph& g, const Syndrome& s);
Correction decode_greedy(const DecodingGraph& g, const Syndrome& s);
Correction decode_mwpm(const CellComplex& c, Sector sector, const Syndrome& s);
Correction decode_greedy(const CellComplex& c, Sector sector, const Syndrome& s);

struct MlDecision {
    BitVector coset;  // logical class of the returned correction relative to the reference
    BinaryChain correction;
    std::vector<double> class_probability;  // indexed by class bits
};

/// Exhaustive maximum-likelihood decoding: every error consistent with s is
/// enumerated as reference + stabilizers + logicals.
MlDecision decode_ml_bruteforce(const CellComplex& c, const CssCode& code, Sector sector, const Syndrome& s, double p,
                                int max_enumeration_bits = 26);

struct Outcome {
    bool success = true;
    std::vector<int> flipped;  // logical qubits whose operator was applied
};

/// Classifies error + correction against the code's logical basis.
Outcome residual_class(const CellComplex& c, const CssCode& code, Sector sector, const BinaryChain& error,
                       const BinaryChain& correction);

enum class DecoderKind { mwpm, greedy, ml };

std::string to_string(DecoderKind d);
DecoderKind decoder_from_string(const std::string& name);

}  // namespace hg
