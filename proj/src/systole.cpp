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

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "highgenus/error.hpp"
#include "highgenus/homology.hpp"
#include "highgenus/surgery.hpp"

namespace hg {

namespace {

// Graph whose edges carry the class signature of their cycle contributions:
// bit j is set when the edge meets the j-th cocycle of a dual basis.
struct SignedGraph {
    int nodes = 0;
    std::vector<Edge> ends;
    Adjacency adj;
    std::vector<BitVector> signature;
};

struct Witness {
    int length = std::numeric_limits<int>::max();
    std::vector<int> support;
};

bool better(const std::vector<int>& cand, const Witness& best) {
    if (static_cast<int>(cand.size()) != best.length) return static_cast<int>(cand.size()) < best.length;
    return cand < best.support;
}

Witness shortest_nontrivial(const SignedGraph& g, std::size_t k) {
    Witness best;
    if (k == 0) return best;
    const int n = g.nodes;
    std::vector<int> dist(n), parent_edge(n);
    std::vector<BitVector> cls(n, BitVector(k));
    std::vector<int> order;
    order.reserve(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        order.clear();
        dist[root] = 0;
        parent_edge[root] = -1;
        cls[root] = BitVector(k);
        order.push_back(root);
        // a cycle through the root of length <= best needs depth <= best / 2
        for (std::size_t head = 0; head < order.size(); ++head) {
            const int v = order[head];
            if (2 * dist[v] + 1 > best.length) break;
            for (auto [w, e] : g.adj[v]) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[v] + 1;
                parent_edge[w] = e;
                cls[w] = cls[v] ^ g.signature[e];
                order.push_back(w);
            }
        }
        for (int e = 0; e < static_cast<int>(g.ends.size()); ++e) {
            const int u = g.ends[e].a;
            const int v = g.ends[e].b;
            if (dist[u] < 0 || dist[v] < 0) continue;
            if (parent_edge[u] == e || parent_edge[v] == e) continue;
            if (dist[u] + dist[v] + 1 > best.length) continue;
            if ((cls[u] ^ cls[v] ^ g.signature[e]).none()) continue;
            std::vector<int> support{e};
            for (int x : {u, v}) {
                while (parent_edge[x] >= 0) {
                    const int pe = parent_edge[x];
                    support.push_back(pe);
                    x = g.ends[pe].other(x);
                }
            }
            std::sort(support.begin(), support.end());
            // shared prefixes cancel mod 2
            std::vector<int> reduced;
            for (std::size_t i = 0; i < support.size();) {
                std::size_t j = i;
                while (j < support.size() && support[j] == support[i]) ++j;
                if ((j - i) % 2) reduced.push_back(support[i]);
                i = j;
            }
            if (better(reduced, best)) {
                best.length = static_cast<int>(reduced.size());
                best.support = std::move(reduced);
            }
        }
    }
    return best;
}

SignedGraph primal_graph(const CellComplex& c, const CssCode& code) {
    SignedGraph g;
    g.nodes = c.num_vertices;
    g.ends = c.edges;
    g.adj = adjacency(c);
    const auto k = static_cast<std::size_t>(code.k);
    g.signature.assign(c.edges.size(), BitVector(k));
    for (std::size_t j = 0; j < k; ++j)
        for (int e : code.logical_pairs[j].x.support()) g.signature[e].set(j);
    return g;
}

SignedGraph dual_graph(const CellComplex& c, const CssCode& code) {
    SignedGraph g;
    g.nodes = c.num_faces();
    const auto occ = edge_occurrences(c);
    g.adj.assign(c.num_faces(), {});
    for (int e = 0; e < c.num_edges(); ++e) {
        const Edge ed{occ[e][0].face, occ[e][1].face};
        g.ends.push_back(ed);
        g.adj[ed.a].emplace_back(ed.b, e);
        if (ed.a != ed.b) g.adj[ed.b].emplace_back(ed.a, e);
    }
    const auto k = static_cast<std::size_t>(code.k);
    g.signature.assign(c.edges.size(), BitVector(k));
    for (std::size_t j = 0; j < k; ++j)
        for (int e : code.logical_pairs[j].z.support()) g.signature[e].set(j);
    return g;
}

}  // namespace

SystoleReport systole(const CellComplex& c, bool with_handles) {
    const auto code = css_from_complex(c);
    const auto E = static_cast<std::size_t>(c.num_edges());
    SystoleReport report;
    const auto primal = shortest_nontrivial(primal_graph(c, code), static_cast<std::size_t>(code.k));
    const auto dual = shortest_nontrivial(dual_graph(c, code), static_cast<std::size_t>(code.k));
    report.conclusive = code.k > 0;
    report.primal = code.k > 0 ? primal.length : 0;
    report.dual = code.k > 0 ? dual.length : 0;
    report.primal_witness = BinaryChain(E, primal.support);
    report.dual_witness = BinaryChain(E, dual.support);
    if (with_handles) {
        for (const auto& h : c.handles)
            report.handle_loops.push_back(static_cast<int>(handle_l_loop(c, h.id).weight()));
    }
    return report;
}

namespace {

// Depth-first enumeration of simple cycles whose smallest vertex is the
// start; each cycle is seen twice (once per direction), which is harmless.
struct CycleSearch {
    const Adjacency& adj;
    int edges;
    int r_max;
    std::function<bool(const std::vector<int>&)> nontrivial;
    Witness best;
    std::vector<char> on_path;
    std::vector<int> path_edges;
    int start = 0;

    void extend(int v) {
        const int depth = static_cast<int>(path_edges.size());
        for (auto [w, e] : adj[v]) {
            if (!path_edges.empty() && e == path_edges.back()) continue;
            if (w < start) continue;
            if (w == start) {
                if (depth + 1 > r_max || depth + 1 > best.length) continue;
                if (depth == 0) continue;
                path_edges.push_back(e);
                auto support = path_edges;
                std::sort(support.begin(), support.end());
                if (better(support, best) && nontrivial(support)) {
                    best.length = static_cast<int>(support.size());
                    best.support = support;
                }
                path_edges.pop_back();
                continue;
            }
            if (on_path[w]) continue;
            if (depth + 2 > std::min(r_max, best.length)) continue;
            on_path[w] = 1;
            path_edges.push_back(e);
            extend(w);
            path_edges.pop_back();
            on_path[w] = 0;
        }
    }
};

Witness brute_force(int nodes, const Adjacency& adj, int edges, int r_max,
                    std::function<bool(const std::vector<int>&)> nontrivial) {
    CycleSearch s{adj, edges, r_max, std::move(nontrivial), {}, std::vector<char>(nodes, 0), {}, 0};
    for (int v = 0; v < nodes; ++v) {
        s.start = v;
        s.on_path[v] = 1;
        s.extend(v);
        s.on_path[v] = 0;
    }
    return s.best;
}

}  // namespace

SystoleReport systole_bruteforce(const CellComplex& c, int r_max) {
    const HomologyOracle oracle(c);
    const auto E = static_cast<std::size_t>(c.num_edges());
    SystoleReport report;
    const auto primal = brute_force(c.num_vertices, adjacency(c), c.num_edges(), r_max, [&](const std::vector<int>& s) {
        return !oracle.is_nullhomologous(BinaryChain(E, s));
    });
    Adjacency dadj(c.num_faces());
    const auto occ = edge_occurrences(c);
    for (int e = 0; e < c.num_edges(); ++e) {
        const int a = occ[e][0].face, b = occ[e][1].face;
        dadj[a].emplace_back(b, e);
        if (a != b) dadj[b].emplace_back(a, e);
    }
    // dual self-loops are length-1 cycles
    Witness dual_loops;
    for (int e = 0; e < c.num_edges(); ++e) {
        if (occ[e][0].face != occ[e][1].face) continue;
        if (!oracle.is_dual_nullhomologous(BinaryChain(E, std::vector<int>{e}))) {
            dual_loops.length = 1;
            dual_loops.support = {e};
            break;
        }
    }
    auto dual = brute_force(c.num_faces(), dadj, c.num_edges(), r_max, [&](const std::vector<int>& s) {
        return !oracle.is_dual_nullhomologous(BinaryChain(E, s));
    });
    if (dual_loops.length < dual.length) dual = dual_loops;
    report.conclusive = primal.length <= r_max && dual.length <= r_max;
    report.primal = primal.length <= r_max ? primal.length : 0;
    report.dual = dual.length <= r_max ? dual.length : 0;
    report.primal_witness = BinaryChain(E, primal.support);
    report.dual_witness = BinaryChain(E, dual.support);
    return report;
}

BinaryChain handle_l_loop(const CellComplex& c, int handle_id, std::span<const char> blocked) {
    if (!c.is_closed()) throw Error(ErrorKind::bounded_complex, "handle loops are measured on closed complexes");
    const auto it = std::find_if(c.handles.begin(), c.handles.end(), [&](const Handle& h) { return h.id == handle_id; });
    if (it == c.handles.end()) throw Error(ErrorKind::no_such_handle, "handle " + std::to_string(handle_id) + " does not exist");
    const int E = c.num_edges();
    const int V = c.num_vertices;
    CutResult opened;
    try {
        opened = cut_along_cycle(c, BinaryChain(static_cast<std::size_t>(E), it->seam.edges), true);
    } catch (const Error& err) {
        throw Error(ErrorKind::no_such_handle, "handle " + std::to_string(handle_id) + " seam is unusable: " + err.what());
    }
    const auto& cc = opened.complex;
    const auto& walk = opened.cut.cycle;
    const int n = static_cast<int>(walk.size());
    const auto adj = adjacency(cc);

    // the right copy of walk vertex i is V + i
    int best_len = std::numeric_limits<int>::max();
    std::vector<int> best_path;
    std::vector<int> dist(cc.num_vertices), parent(cc.num_vertices);
    auto is_blocked = [&](int v) {
        if (blocked.empty()) return false;
        return blocked[v < V ? v : walk.vertices[v - V]] != 0;
    };
    for (int i = 0; i < n; ++i) {
        const int src = walk.vertices[i];
        const int dst = V + i;
        if (is_blocked(src)) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[src] = 0;
        parent[src] = -1;
        q.push(src);
        while (!q.empty() && dist[dst] < 0) {
            const int v = q.front();
            q.pop();
            if (dist[v] + 1 >= best_len) break;
            for (auto [w, e] : adj[v]) {
                if (dist[w] >= 0 || is_blocked(w)) continue;
                dist[w] = dist[v] + 1;
                parent[w] = e;
                q.push(w);
            }
        }
        if (dist[dst] < 0 || dist[dst] >= best_len) continue;
        best_len = dist[dst];
        best_path.clear();
        for (int x = dst; x != src;) {
            const int e = parent[x];
            best_path.push_back(e);
            x = cc.edges[e].other(x);
        }
    }
    if (best_path.empty()) throw Error(ErrorKind::no_such_handle, "handle " + std::to_string(handle_id) + " tube is severed");
    BinaryChain loop(static_cast<std::size_t>(E));
    for (int e : best_path) loop.toggle(e < E ? e : walk.edges[e - E]);
    return loop;
}

}  // namespace hg
