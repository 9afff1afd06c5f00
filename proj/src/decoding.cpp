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

#include "highgenus/decoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <tuple>

#include "highgenus/error.hpp"
#include "highgenus/matching.hpp"

namespace hg {

ErrorPattern sample_iid_error(const CellComplex& c, double p, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::invalid_parameter, "error probability must lie in [0, 1]");
    const auto E = static_cast<std::size_t>(c.num_edges());
    ErrorPattern e{BinaryChain(E), BinaryChain(E)};
    for (std::size_t i = 0; i < E; ++i)
        if (uniform_unit(rng) < p) e.x_chain.toggle(static_cast<int>(i));
    for (std::size_t i = 0; i < E; ++i)
        if (uniform_unit(rng) < p) e.z_chain.toggle(static_cast<int>(i));
    return e;
}

ErrorPattern sample_iid_error(const CellComplex& c, double p, std::uint64_t seed) {
    Rng rng(seed);
    return sample_iid_error(c, p, rng);
}

Syndrome vertex_syndrome(const CellComplex& c, const BinaryChain& chain) {
    std::vector<char> odd(static_cast<std::size_t>(c.num_vertices), 0);
    for (int e : chain.support()) {
        odd[c.edges[e].a] ^= 1;
        odd[c.edges[e].b] ^= 1;
    }
    Syndrome s;
    for (int v = 0; v < c.num_vertices; ++v)
        if (odd[v]) s.defects.push_back(v);
    return s;
}

Syndrome face_syndrome(const CellComplex& c, const BinaryChain& chain) {
    Syndrome s;
    for (int f = 0; f < c.num_faces(); ++f) {
        bool odd = false;
        for (int e : c.faces[f].edges) odd ^= chain.contains(e);
        if (odd) s.defects.push_back(f);
    }
    return s;
}

Syndrome syndrome_in(const CellComplex& c, Sector sector, const BinaryChain& chain) {
    return sector == Sector::primal ? vertex_syndrome(c, chain) : face_syndrome(c, chain);
}

SyndromePair syndrome_of(const CellComplex& c, const ErrorPattern& e) {
    return {vertex_syndrome(c, e.x_chain), face_syndrome(c, e.z_chain)};
}

DecodingGraph::DecodingGraph(const CellComplex& c, Sector sector) : sector_(sector), num_edges_(c.num_edges()) {
    if (sector == Sector::primal) {
        adj_.assign(c.num_vertices, {});
        for (int e = 0; e < c.num_edges(); ++e) ends_.emplace_back(c.edges[e].a, c.edges[e].b);
    } else {
        if (!c.is_closed()) throw Error(ErrorKind::dual_undefined, "dual decoding needs a closed complex");
        adj_.assign(c.num_faces(), {});
        ends_.assign(c.num_edges(), {-1, -1});
        for (int f = 0; f < c.num_faces(); ++f)
            for (int e : c.faces[f].edges) {
                auto& [a, b] = ends_[e];
                if (a < 0)
                    a = f;
                else
                    b = f;
            }
    }
    for (int e = 0; e < num_edges_; ++e) {
        auto [a, b] = ends_[e];
        if (a < 0 || b < 0 || a == b) continue;
        adj_[a].emplace_back(b, e);
        adj_[b].emplace_back(a, e);
    }
}

int DecodingGraph::other(int e, int node) const { return ends_[e].first == node ? ends_[e].second : ends_[e].first; }

void DecodingGraph::bfs(int source, std::vector<int>& dist, std::vector<int>& parent) const {
    dist.assign(adj_.size(), -1);
    parent.assign(adj_.size(), -1);
    std::vector<int> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (auto [w, e] : adj_[v]) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[v] + 1;
            parent[w] = e;
            queue.push_back(w);
        }
    }
}

namespace {

struct DefectDistances {
    std::vector<std::vector<long long>> weight;
    std::vector<std::vector<int>> parent;  // BFS tree of each defect
};

DefectDistances defect_distances(const DecodingGraph& g, const Syndrome& s) {
    const int n = static_cast<int>(s.defects.size());
    if (n % 2 != 0) throw Error(ErrorKind::invalid_syndrome, "odd number of defects: " + std::to_string(n));
    DefectDistances d;
    d.weight.assign(n, std::vector<long long>(n, 0));
    d.parent.resize(n);
    std::vector<int> dist;
    for (int i = 0; i < n; ++i) {
        const int src = s.defects[i];
        if (src < 0 || src >= g.num_nodes()) throw Error(ErrorKind::invalid_syndrome, "defect out of range");
        g.bfs(src, dist, d.parent[i]);
        for (int j = 0; j < n; ++j) {
            const int dj = dist[s.defects[j]];
            if (dj < 0) throw Error(ErrorKind::invalid_syndrome, "defects lie in different components");
            d.weight[i][j] = dj;
        }
    }
    return d;
}

void add_path(const DecodingGraph& g, const std::vector<int>& parent, int from, int to, BinaryChain& out) {
    for (int x = to; x != from;) {
        const int e = parent[x];
        out.toggle(e);
        x = g.other(e, x);
    }
}

Correction assemble(const DecodingGraph& g, const Syndrome& s, const DefectDistances& d, const std::vector<int>& mate) {
    Correction c{BinaryChain(static_cast<std::size_t>(g.num_edges())), 0};
    for (std::size_t i = 0; i < mate.size(); ++i) {
        const int j = mate[i];
        if (j <= static_cast<int>(i)) continue;
        add_path(g, d.parent[i], s.defects[i], s.defects[j], c.chain);
        c.matching_weight += d.weight[i][j];
    }
    return c;
}

}  // namespace

Correction decode_mwpm(const DecodingGraph& g, const Syndrome& s) {
    if (s.defects.empty()) return {BinaryChain(static_cast<std::size_t>(g.num_edges())), 0};
    const auto d = defect_distances(g, s);
    return assemble(g, s, d, min_weight_perfect_matching(d.weight));
}

Correction decode_greedy(const DecodingGraph& g, const Syndrome& s) {
    if (s.defects.empty()) return {BinaryChain(static_cast<std::size_t>(g.num_edges())), 0};
    const auto d = defect_distances(g, s);
    const int n = static_cast<int>(s.defects.size());
    std::vector<std::tuple<long long, int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(d.weight[i][j], i, j);
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> mate(n, -1);
    for (auto [w, i, j] : pairs) {
        if (mate[i] >= 0 || mate[j] >= 0) continue;
        mate[i] = j;
        mate[j] = i;
    }
    return assemble(g, s, d, mate);
}

Correction decode_mwpm(const CellComplex& c, Sector sector, const Syndrome& s) {
    return decode_mwpm(DecodingGraph(c, sector), s);
}

Correction decode_greedy(const CellComplex& c, Sector sector, const Syndrome& s) {
    return decode_greedy(DecodingGraph(c, sector), s);
}

MlDecision decode_ml_bruteforce(const CellComplex& c, const CssCode& code, Sector sector, const Syndrome& s, double p,
                                int max_enumeration_bits) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::invalid_parameter, "error probability must lie in [0, 1]");
    const auto E = static_cast<std::size_t>(c.num_edges());
    const auto& stabs = sector == Sector::primal ? code.face_stabilizers : code.vertex_stabilizers;
    std::vector<BitVector> gens;
    EchelonBasis span(E);
    for (const auto& st : stabs)
        if (span.insert(st.bits())) gens.push_back(st.bits());
    const int k = code.k;
    if (static_cast<int>(gens.size()) + k > max_enumeration_bits)
        throw Error(ErrorKind::oracle_infeasible, "exhaustive decoding would enumerate 2^" +
                                                       std::to_string(gens.size() + k) + " errors");
    const auto reference = decode_mwpm(c, sector, s).chain;
    std::vector<BitVector> logicals;
    for (const auto& lp : code.logical_pairs) logicals.push_back((sector == Sector::primal ? lp.z : lp.x).bits());

    MlDecision out;
    out.class_probability.assign(std::size_t{1} << k, 0.0);
    const double total = static_cast<double>(E);
    for (std::size_t mask = 0; mask < out.class_probability.size(); ++mask) {
        BitVector cur = reference.bits();
        for (int j = 0; j < k; ++j)
            if (mask >> j & 1) cur ^= logicals[j];
        double sum = 0.0;
        const std::uint64_t count = std::uint64_t{1} << gens.size();
        for (std::uint64_t i = 0; i < count; ++i) {
            if (i > 0) cur ^= gens[std::countr_zero(i)];
            const double w = static_cast<double>(cur.count());
            sum += std::pow(p, w) * std::pow(1.0 - p, total - w);
        }
        out.class_probability[mask] = sum;
    }
    std::size_t best = 0;
    for (std::size_t m = 1; m < out.class_probability.size(); ++m)
        if (out.class_probability[m] > out.class_probability[best]) best = m;
    out.coset = BitVector(static_cast<std::size_t>(k));
    out.correction = reference;
    for (int j = 0; j < k; ++j)
        if (best >> j & 1) {
            out.coset.set(static_cast<std::size_t>(j));
            out.correction += BinaryChain(logicals[j]);
        }
    return out;
}

Outcome residual_class(const CellComplex& c, const CssCode& code, Sector sector, const BinaryChain& error,
                       const BinaryChain& correction) {
    if (!(syndrome_in(c, sector, error) == syndrome_in(c, sector, correction)))
        throw Error(ErrorKind::inconsistent_correction, "correction does not reproduce the syndrome");
    const BinaryChain residual = error + correction;
    Outcome out;
    for (int j = 0; j < code.k; ++j) {
        const auto& probe = sector == Sector::primal ? code.logical_pairs[j].x : code.logical_pairs[j].z;
        if (residual.pairing(probe)) out.flipped.push_back(j);
    }
    out.success = out.flipped.empty();
    return out;
}

std::string to_string(DecoderKind d) {
    switch (d) {
        case DecoderKind::mwpm: return "mwpm";
        case DecoderKind::greedy: return "greedy";
        case DecoderKind::ml: return "ml";
    }
    return "mwpm";
}

DecoderKind decoder_from_string(const std::string& name) {
    if (name == "mwpm") return DecoderKind::mwpm;
    if (name == "greedy") return DecoderKind::greedy;
    if (name == "ml") return DecoderKind::ml;
    throw Error(ErrorKind::invalid_parameter, "unknown decoder '" + name + "'");
}

}  // namespace hg
