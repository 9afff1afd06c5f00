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

#include "highgenus/homology.hpp"

#include <queue>

#include "highgenus/error.hpp"

namespace hg {

BoundaryMaps boundary_maps(const CellComplex& c) {
    if (!c.is_closed()) throw Error(ErrorKind::bounded_complex, "boundary maps are built for closed complexes only");
    BoundaryMaps m;
    const auto E = static_cast<std::size_t>(c.num_edges());
    const auto V = static_cast<std::size_t>(c.num_vertices);
    m.d2.assign(c.faces.size(), BitVector(E));
    for (std::size_t f = 0; f < c.faces.size(); ++f)
        for (int e : c.faces[f].edges) m.d2[f].flip(static_cast<std::size_t>(e));
    m.d1.assign(E, BitVector(V));
    for (std::size_t e = 0; e < E; ++e) {
        m.d1[e].flip(static_cast<std::size_t>(c.edges[e].a));
        m.d1[e].flip(static_cast<std::size_t>(c.edges[e].b));
    }
    return m;
}

bool composes_to_zero(const BoundaryMaps& maps) {
    if (maps.d1.empty()) return true;
    const std::size_t V = maps.d1.front().size();
    for (const auto& face : maps.d2) {
        BitVector acc(V);
        for (int e : face.ones()) acc ^= maps.d1[static_cast<std::size_t>(e)];
        if (acc.any()) return false;
    }
    return true;
}

BitVector boundary_of(const CellComplex& c, const BinaryChain& chain) {
    BitVector out(static_cast<std::size_t>(c.num_vertices));
    for (int e : chain.support()) {
        out.flip(static_cast<std::size_t>(c.edges[e].a));
        out.flip(static_cast<std::size_t>(c.edges[e].b));
    }
    return out;
}

BitVector coboundary_of(const CellComplex& c, const BinaryChain& chain) {
    BitVector out(static_cast<std::size_t>(c.num_faces()));
    for (int f = 0; f < c.num_faces(); ++f) {
        bool parity = false;
        for (int e : c.faces[f].edges) parity ^= chain.contains(e);
        if (parity) out.set(static_cast<std::size_t>(f));
    }
    return out;
}

namespace {

// Tree-cotree decomposition: primal BFS tree, dual BFS tree on the
// remaining edges, leftover edges generate homology.
struct TreeCotree {
    std::vector<int> vparent_edge;
    std::vector<int> fparent_edge;
    std::vector<int> leftover;
};

TreeCotree tree_cotree(const CellComplex& c, const Occurrences& occ) {
    TreeCotree t;
    const auto adj = adjacency(c);
    t.vparent_edge.assign(c.num_vertices, -1);
    std::vector<char> in_tree(c.num_edges(), 0), seen(c.num_vertices, 0);
    std::queue<int> q;
    if (c.num_vertices) {
        seen[0] = 1;
        q.push(0);
    }
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (auto [w, e] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = 1;
            in_tree[e] = 1;
            t.vparent_edge[w] = e;
            q.push(w);
        }
    }
    t.fparent_edge.assign(c.num_faces(), -1);
    std::vector<char> in_cotree(c.num_edges(), 0), fseen(c.num_faces(), 0);
    if (c.num_faces()) {
        fseen[0] = 1;
        q.push(0);
    }
    while (!q.empty()) {
        const int f = q.front();
        q.pop();
        for (int e : c.faces[f].edges) {
            if (in_tree[e] || in_cotree[e]) continue;
            for (const auto& o : occ[e]) {
                if (fseen[o.face]) continue;
                fseen[o.face] = 1;
                in_cotree[e] = 1;
                t.fparent_edge[o.face] = e;
                q.push(o.face);
            }
        }
    }
    for (int e = 0; e < c.num_edges(); ++e)
        if (!in_tree[e] && !in_cotree[e]) t.leftover.push_back(e);
    return t;
}

BinaryChain primal_fundamental_cycle(const CellComplex& c, const TreeCotree& t, int g) {
    BinaryChain z(static_cast<std::size_t>(c.num_edges()));
    z.toggle(g);
    for (int v : {c.edges[g].a, c.edges[g].b}) {
        while (t.vparent_edge[v] >= 0) {
            const int e = t.vparent_edge[v];
            z.toggle(e);
            v = c.edges[e].other(v);
        }
    }
    return z;
}

BinaryChain dual_fundamental_cycle(const CellComplex& c, const Occurrences& occ, const TreeCotree& t, int g) {
    BinaryChain x(static_cast<std::size_t>(c.num_edges()));
    x.toggle(g);
    for (const auto& start : occ[g]) {
        int f = start.face;
        while (t.fparent_edge[f] >= 0) {
            const int e = t.fparent_edge[f];
            x.toggle(e);
            f = occ[e][0].face == f ? occ[e][1].face : occ[e][0].face;
        }
    }
    return x;
}

}  // namespace

CssCode css_from_complex(const CellComplex& c) {
    if (!c.is_closed()) throw Error(ErrorKind::bounded_complex, "codes are built on closed complexes only");
    CssCode code;
    const auto E = static_cast<std::size_t>(c.num_edges());
    code.num_qubits = c.num_edges();
    const auto adj = adjacency(c);
    for (int v = 0; v < c.num_vertices; ++v) {
        BinaryChain star(E);
        for (auto [w, e] : adj[v]) star.toggle(e);
        code.vertex_stabilizers.push_back(std::move(star));
    }
    for (const auto& f : c.faces) code.face_stabilizers.emplace_back(E, f.edges);

    const auto occ = edge_occurrences(c);
    for (int e = 0; e < c.num_edges(); ++e)
        if (occ[e].size() != 2) throw Error(ErrorKind::bounded_complex, "edge " + std::to_string(e) + " is not interior");
    const auto tc = tree_cotree(c, occ);
    const int k = static_cast<int>(tc.leftover.size());
    if (k != 2 - c.euler_characteristic())
        throw Error(ErrorKind::internal_error, "homology rank " + std::to_string(k) + " disagrees with Euler characteristic");
    code.k = k;

    std::vector<BinaryChain> zgen, xgen;
    for (int g : tc.leftover) {
        zgen.push_back(primal_fundamental_cycle(c, tc, g));
        xgen.push_back(dual_fundamental_cycle(c, occ, tc, g));
    }
    auto pairing_vector = [&](const BinaryChain& z) {
        BitVector row(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
            if (z.pairing(xgen[j])) row.set(static_cast<std::size_t>(j));
        return row;
    };

    // primal basis: marked loops first, completed by generators
    std::vector<BinaryChain> zbasis;
    std::vector<BitVector> rows;
    EchelonBasis span(static_cast<std::size_t>(k));
    for (const auto& loop : c.marked_loops) {
        BinaryChain z(E, loop.edges);
        if (boundary_of(c, z).any()) continue;
        auto row = pairing_vector(z);
        if (k == 0 || !span.insert(row)) continue;
        zbasis.push_back(std::move(z));
        rows.push_back(std::move(row));
    }
    code.seeded = static_cast<int>(zbasis.size());
    // then handle seams, so a seam residual flips one qubit
    for (const auto& h : c.handles) {
        BinaryChain z(E, h.seam.edges);
        if (boundary_of(c, z).any()) continue;
        auto row = pairing_vector(z);
        if (k == 0 || !span.insert(row)) continue;
        zbasis.push_back(std::move(z));
        rows.push_back(std::move(row));
    }
    for (int i = 0; i < k && static_cast<int>(zbasis.size()) < k; ++i) {
        auto row = pairing_vector(zgen[i]);
        if (!span.insert(row)) continue;
        zbasis.push_back(zgen[i]);
        rows.push_back(std::move(row));
    }
    if (static_cast<int>(zbasis.size()) != k) throw Error(ErrorKind::internal_error, "intersection pairing is degenerate");
    const auto inv = gf2_inverse(rows);
    if (!inv) throw Error(ErrorKind::internal_error, "intersection pairing is singular");
    for (int j = 0; j < k; ++j) {
        BinaryChain x(E);
        for (int l = 0; l < k; ++l)
            if ((*inv)[l].test(static_cast<std::size_t>(j))) x += xgen[l];
        code.logical_pairs.push_back({zbasis[j], std::move(x)});
    }
    if (c.blueprint && k >= 2) {
        if (code.seeded >= 2)
            code.base_qubits = {0, 1};
        else
            code.base_qubits = {k - 2, k - 1};
    }
    return code;
}

bool stabilizers_commute(const CssCode& code) {
    for (const auto& s : code.vertex_stabilizers)
        for (const auto& f : code.face_stabilizers)
            if (s.pairing(f)) return false;
    return true;
}

std::pair<std::size_t, std::size_t> stabilizer_ranks(const CssCode& code) {
    std::vector<BitVector> xs, zs;
    for (const auto& s : code.vertex_stabilizers) xs.push_back(s.bits());
    for (const auto& s : code.face_stabilizers) zs.push_back(s.bits());
    return {gf2_rank(xs), gf2_rank(zs)};
}

std::vector<BitVector> symplectic_gram(const CssCode& code) {
    const int k = code.k;
    // operator i < k is Z_i (x-part empty), operator k + j is X_j (z-part empty)
    auto omega = [&](int a, int b) {
        const bool a_is_z = a < k;
        const bool b_is_z = b < k;
        if (a_is_z == b_is_z) return false;
        const auto& z = a_is_z ? code.logical_pairs[a].z : code.logical_pairs[b].z;
        const auto& x = a_is_z ? code.logical_pairs[b - k].x : code.logical_pairs[a - k].x;
        return z.pairing(x);
    };
    std::vector<BitVector> gram(2 * k, BitVector(2 * static_cast<std::size_t>(k)));
    for (int a = 0; a < 2 * k; ++a)
        for (int b = 0; b < 2 * k; ++b)
            if (omega(a, b)) gram[a].set(static_cast<std::size_t>(b));
    return gram;
}

HomologyOracle::HomologyOracle(const CellComplex& c) : complex_(&c), maps_(boundary_maps(c)) {}

bool HomologyOracle::is_cycle(const BinaryChain& z) const { return boundary_of(*complex_, z).none(); }

bool HomologyOracle::is_dual_cycle(const BinaryChain& x) const { return coboundary_of(*complex_, x).none(); }

bool HomologyOracle::is_nullhomologous(const BinaryChain& z) const {
    if (!is_cycle(z)) throw Error(ErrorKind::not_a_cycle, "chain has a nonzero boundary");
    if (!faces_) {
        faces_ = std::make_unique<EchelonBasis>(static_cast<std::size_t>(complex_->num_edges()));
        for (const auto& f : maps_.d2) faces_->insert(f);
    }
    return faces_->contains(z.bits());
}

bool HomologyOracle::is_dual_nullhomologous(const BinaryChain& x) const {
    if (!is_dual_cycle(x)) throw Error(ErrorKind::not_a_cycle, "dual chain has a nonzero coboundary");
    if (!stars_) {
        stars_ = std::make_unique<EchelonBasis>(static_cast<std::size_t>(complex_->num_edges()));
        const auto adj = adjacency(*complex_);
        for (int v = 0; v < complex_->num_vertices; ++v) {
            BitVector star(static_cast<std::size_t>(complex_->num_edges()));
            for (auto [w, e] : adj[v]) star.flip(static_cast<std::size_t>(e));
            stars_->insert(std::move(star));
        }
    }
    return stars_->contains(x.bits());
}

bool is_nullhomologous(const CellComplex& c, const BinaryChain& z) { return HomologyOracle(c).is_nullhomologous(z); }

}  // namespace hg
