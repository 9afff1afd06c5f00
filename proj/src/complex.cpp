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

#include "highgenus/complex.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "highgenus/error.hpp"

namespace hg {

int Blueprint::default_base_side() const {
    return static_cast<int>(std::ceil(L * std::sqrt(static_cast<double>(N) / 2.0) - 1e-9));
}

Occurrences edge_occurrences(const CellComplex& c) {
    std::vector<std::vector<Occurrence>> occ(c.edges.size());
    for (int f = 0; f < c.num_faces(); ++f) {
        const auto& face = c.faces[f];
        for (int k = 0; k < static_cast<int>(face.edges.size()); ++k) occ[face.edges[k]].push_back({f, k});
    }
    return occ;
}

Adjacency adjacency(const CellComplex& c) {
    std::vector<std::vector<std::pair<int, int>>> adj(c.num_vertices);
    for (int e = 0; e < c.num_edges(); ++e) {
        const auto& ed = c.edges[e];
        adj[ed.a].emplace_back(ed.b, e);
        if (ed.b != ed.a) adj[ed.b].emplace_back(ed.a, e);
    }
    return adj;
}

std::vector<int> valences(const CellComplex& c) {
    std::vector<int> val(c.num_vertices, 0);
    for (const auto& e : c.edges) {
        ++val[e.a];
        ++val[e.b];
    }
    return val;
}

int traversal_sign(const CellComplex& c, const Occurrence& o) {
    const auto& face = c.faces[o.face];
    const int from = face.vertices[o.index];
    return c.edges[face.edges[o.index]].a == from ? +1 : -1;
}

std::optional<Rotation> rotation_at(const CellComplex& c, int v, const Occurrences& occ,
                                    const Adjacency& adj) {
    struct Corner {
        int face;
        int k;
        int e1;
        int e2;
    };
    // corners incident to v, found through the faces of v's edges
    std::vector<Corner> corners;
    std::vector<int> seen_faces;
    std::vector<int> incident;
    for (auto [w, e] : adj[v]) incident.push_back(e);
    for (int e : incident)
        for (const auto& o : occ[e]) seen_faces.push_back(o.face);
    std::sort(seen_faces.begin(), seen_faces.end());
    seen_faces.erase(std::unique(seen_faces.begin(), seen_faces.end()), seen_faces.end());
    for (int f : seen_faces) {
        const auto& face = c.faces[f];
        const int n = static_cast<int>(face.edges.size());
        for (int k = 0; k < n; ++k)
            if (face.vertices[k] == v) corners.push_back({f, k, face.edges[(k + n - 1) % n], face.edges[k]});
    }
    std::map<int, std::vector<int>> by_edge;
    for (int i = 0; i < static_cast<int>(corners.size()); ++i) {
        if (corners[i].e1 == corners[i].e2) return std::nullopt;
        by_edge[corners[i].e1].push_back(i);
        by_edge[corners[i].e2].push_back(i);
    }
    for (int e : incident)
        if (!by_edge.count(e)) by_edge[e] = {};

    int start = -1;
    bool open = false;
    for (const auto& [e, cs] : by_edge) {
        if (cs.size() > 2) return std::nullopt;
        if (cs.size() < 2 && !open) {
            start = e;
            open = true;
        }
    }
    if (start < 0) start = by_edge.begin()->first;

    Rotation rot;
    rot.closed = !open;
    std::vector<char> used(corners.size(), 0);
    int edge = start;
    int from_corner = -1;
    while (true) {
        rot.edges.push_back(edge);
        int next_corner = -1;
        for (int ci : by_edge[edge])
            if (ci != from_corner && !used[ci]) {
                next_corner = ci;
                break;
            }
        if (next_corner < 0) break;
        used[next_corner] = 1;
        rot.faces.push_back(corners[next_corner].face);
        rot.corners.push_back(corners[next_corner].k);
        const auto& cr = corners[next_corner];
        edge = cr.e1 == edge ? cr.e2 : cr.e1;
        from_corner = next_corner;
        if (!open && edge == start) break;
    }
    if (std::count(used.begin(), used.end(), 1) != static_cast<long>(corners.size())) return std::nullopt;
    if (rot.edges.size() != incident.size()) return std::nullopt;
    return rot;
}

namespace {

Walk reversed_walk(const Walk& w) {
    const int n = static_cast<int>(w.edges.size());
    Walk r;
    r.vertices.resize(n);
    r.edges.resize(n);
    for (int k = 0; k < n; ++k) {
        r.vertices[k] = w.vertices[(n - k) % n];
        r.edges[k] = w.edges[((n - k - 1) % n + n) % n];
    }
    return r;
}

Walk rotated_walk(const Walk& w, int start_vertex) {
    const auto it = std::find(w.vertices.begin(), w.vertices.end(), start_vertex);
    if (it == w.vertices.end()) return w;
    const auto shift = it - w.vertices.begin();
    Walk r = w;
    std::rotate(r.vertices.begin(), r.vertices.begin() + shift, r.vertices.end());
    std::rotate(r.edges.begin(), r.edges.begin() + shift, r.edges.end());
    return r;
}

}  // namespace

Circle normalize_boundary(const CellComplex& c, Circle circle, int start_vertex) {
    if (circle.edges.empty()) return circle;
    const int e0 = circle.edges[0];
    for (int f = 0; f < c.num_faces(); ++f) {
        const auto& face = c.faces[f];
        const int n = static_cast<int>(face.edges.size());
        for (int k = 0; k < n; ++k) {
            if (face.edges[k] != e0) continue;
            if (face.vertices[k] == circle.vertices[0] && face.vertices[(k + 1) % n] == circle.vertices[1 % circle.vertices.size()])
                circle = reversed_walk(circle);
            return start_vertex >= 0 ? rotated_walk(circle, start_vertex) : circle;
        }
    }
    return start_vertex >= 0 ? rotated_walk(circle, start_vertex) : circle;
}

std::optional<Walk> order_simple_cycle(const CellComplex& c, std::span<const int> edge_ids) {
    if (edge_ids.empty()) return std::nullopt;
    std::map<int, std::vector<int>> at;  // vertex -> incident chain edges
    for (int e : edge_ids) {
        if (e < 0 || e >= c.num_edges()) return std::nullopt;
        const auto& ed = c.edges[e];
        if (ed.a == ed.b) return std::nullopt;
        at[ed.a].push_back(e);
        at[ed.b].push_back(e);
    }
    for (auto& [v, es] : at) {
        if (es.size() != 2) return std::nullopt;
        std::sort(es.begin(), es.end());
    }
    Walk w;
    const int start = at.begin()->first;
    int v = start;
    int e = at[start][0];
    do {
        w.vertices.push_back(v);
        w.edges.push_back(e);
        v = c.edges[e].other(v);
        const auto& es = at[v];
        e = es[0] == e ? es[1] : es[0];
    } while (v != start);
    if (w.edges.size() != edge_ids.size()) return std::nullopt;
    return w;
}

bool is_connected(const CellComplex& c) {
    if (c.num_vertices == 0) return true;
    const auto adj = adjacency(c);
    std::vector<char> seen(c.num_vertices, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (auto [w, e] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
    }
    return count == c.num_vertices;
}

namespace {

std::optional<Walk> map_walk(const Walk& w, std::span<const int> vmap, std::span<const int> emap) {
    Walk out;
    out.vertices.reserve(w.vertices.size());
    out.edges.reserve(w.edges.size());
    for (int v : w.vertices) {
        if (vmap[v] < 0) return std::nullopt;
        out.vertices.push_back(vmap[v]);
    }
    for (int e : w.edges) {
        if (emap[e] < 0) return std::nullopt;
        out.edges.push_back(emap[e]);
    }
    return out;
}

}  // namespace

CellComplex relabel(const CellComplex& c, std::span<const int> vmap, std::span<const int> emap,
                    std::span<const char> face_keep, std::span<const int> drop_boundaries) {
    CellComplex out;
    out.blueprint = c.blueprint;
    out.seed = c.seed;
    int nv = 0;
    for (int v : vmap) nv = std::max(nv, v + 1);
    int ne = 0;
    for (int e : emap) ne = std::max(ne, e + 1);
    out.num_vertices = nv;
    out.edges.assign(ne, Edge{-1, -1});
    out.edge_region.assign(ne, kNoRegion);
    for (int e = 0; e < c.num_edges(); ++e) {
        const int ne_id = emap[e];
        if (ne_id < 0) continue;
        Edge mapped{vmap[c.edges[e].a], vmap[c.edges[e].b]};
        if (mapped.a < 0 || mapped.b < 0)
            throw Error(ErrorKind::internal_error, "edge " + std::to_string(e) + " keeps a deleted endpoint");
        auto& slot = out.edges[ne_id];
        if (slot.a < 0) {
            slot = mapped;
            out.edge_region[ne_id] = c.edge_region.empty() ? kNoRegion : c.edge_region[e];
        } else if (!(slot == mapped) && !(slot.a == mapped.b && slot.b == mapped.a)) {
            throw Error(ErrorKind::internal_error, "identified edges disagree on endpoints");
        }
    }
    for (int f = 0; f < c.num_faces(); ++f) {
        if (!face_keep[f]) continue;
        auto mapped = map_walk(c.faces[f], vmap, emap);
        if (!mapped) throw Error(ErrorKind::internal_error, "face " + std::to_string(f) + " references deleted cell");
        out.faces.push_back(std::move(*mapped));
    }
    for (int b = 0; b < static_cast<int>(c.boundaries.size()); ++b) {
        if (std::find(drop_boundaries.begin(), drop_boundaries.end(), b) != drop_boundaries.end()) continue;
        auto mapped = map_walk(c.boundaries[b], vmap, emap);
        if (!mapped) throw Error(ErrorKind::internal_error, "boundary references deleted cell");
        out.boundaries.push_back(std::move(*mapped));
    }
    for (const auto& h : c.handles) {
        if (auto mapped = map_walk(h.seam, vmap, emap)) out.handles.push_back({h.id, std::move(*mapped)});
    }
    for (const auto& loop : c.marked_loops) {
        if (auto mapped = map_walk(loop, vmap, emap)) out.marked_loops.push_back(std::move(*mapped));
    }
    return out;
}

bool is_orientable(const CellComplex& c) {
    const auto occ = edge_occurrences(c);
    std::vector<int> sign(c.num_faces(), 0);
    for (int root = 0; root < c.num_faces(); ++root) {
        if (sign[root]) continue;
        sign[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int f = q.front();
            q.pop();
            const auto& face = c.faces[f];
            for (int k = 0; k < static_cast<int>(face.edges.size()); ++k) {
                const Occurrence here{f, k};
                for (const auto& o : occ[face.edges[k]]) {
                    if (o.face == f && o.index == k) continue;
                    // neighbour must traverse the shared edge the other way
                    const int want = -sign[f] * traversal_sign(c, here) * traversal_sign(c, o);
                    if (!sign[o.face]) {
                        sign[o.face] = want;
                        q.push(o.face);
                    } else if (sign[o.face] != want) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

ValidationReport validate(const CellComplex& c) {
    ValidationReport r;
    r.vertices = c.num_vertices;
    r.edges = c.num_edges();
    r.faces = c.num_faces();
    r.euler = c.euler_characteristic();
    r.closed = c.is_closed();
    r.handles = static_cast<int>(c.handles.size());
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.problems.push_back(std::move(msg));
    };

    for (int e = 0; e < c.num_edges(); ++e) {
        const auto& ed = c.edges[e];
        if (ed.a < 0 || ed.b < 0 || ed.a >= c.num_vertices || ed.b >= c.num_vertices) {
            fail("edge " + std::to_string(e) + " has an invalid endpoint");
            r.bad_edges.push_back(e);
            return r;
        }
        if (ed.a == ed.b) {
            fail("edge " + std::to_string(e) + " is a self-loop");
            r.bad_edges.push_back(e);
        }
    }
    auto check_walk = [&](const Walk& w, const std::string& what) {
        const int n = static_cast<int>(w.edges.size());
        if (n == 0 || static_cast<int>(w.vertices.size()) != n) {
            fail(what + " is empty or malformed");
            return;
        }
        for (int k = 0; k < n; ++k) {
            const int e = w.edges[k];
            if (e < 0 || e >= c.num_edges()) {
                fail(what + " references missing edge " + std::to_string(e));
                return;
            }
            const auto& ed = c.edges[e];
            const int u = w.vertices[k];
            const int v = w.vertices[(k + 1) % n];
            if (!((ed.a == u && ed.b == v) || (ed.a == v && ed.b == u))) {
                fail(what + " is not a closed walk at edge " + std::to_string(e));
                return;
            }
        }
    };
    for (int f = 0; f < c.num_faces(); ++f) check_walk(c.faces[f], "face " + std::to_string(f));
    std::vector<char> on_boundary(c.num_edges(), 0);
    for (int b = 0; b < static_cast<int>(c.boundaries.size()); ++b) {
        check_walk(c.boundaries[b], "boundary " + std::to_string(b));
        r.boundary_lengths.push_back(static_cast<int>(c.boundaries[b].size()));
        for (int e : c.boundaries[b].edges)
            if (e >= 0 && e < c.num_edges()) on_boundary[e] = 1;
    }
    if (!r.ok) return r;

    const auto occ = edge_occurrences(c);
    for (int e = 0; e < c.num_edges(); ++e) {
        const auto count = occ[e].size();
        const bool good = on_boundary[e] ? count == 1 : count == 2;
        if (!good) {
            fail("edge " + std::to_string(e) + " borders " + std::to_string(count) + " faces");
            r.bad_edges.push_back(e);
        }
    }

    const auto val = valences(c);
    for (int v = 0; v < c.num_vertices; ++v) {
        ++r.valence_histogram[val[v]];
        r.kink_excess += std::max(0, val[v] - 4);
    }

    r.connected = is_connected(c);
    if (!r.connected) fail("complex is disconnected");
    if (r.closed && (r.euler > 2 || r.euler % 2 != 0))
        fail("closed complex has Euler characteristic " + std::to_string(r.euler));

    if (r.bad_edges.empty()) {
        const auto adj = adjacency(c);
        for (int v = 0; v < c.num_vertices; ++v) {
            if (!rotation_at(c, v, occ, adj)) {
                fail("vertex " + std::to_string(v) + " is not a manifold point");
                break;
            }
        }
        r.orientable = is_orientable(c);
    } else {
        r.orientable = false;
    }
    return r;
}

std::string ValidationReport::to_text() const {
    std::ostringstream os;
    os << "status: " << (ok ? "pass" : "fail") << '\n';
    os << "V=" << vertices << " E=" << edges << " F=" << faces << " chi=" << euler << '\n';
    os << "closed=" << closed << " connected=" << connected << " orientable=" << orientable << '\n';
    os << "valence:";
    for (auto [k, n] : valence_histogram) os << ' ' << k << ':' << n;
    os << '\n';
    os << "kink_excess=" << kink_excess << " kink_density=" << kink_density() << '\n';
    os << "boundaries=" << boundary_lengths.size();
    for (int len : boundary_lengths) os << ' ' << len;
    os << '\n';
    os << "handles=" << handles << '\n';
    for (const auto& p : problems) os << "problem: " << p << '\n';
    return os.str();
}

}  // namespace hg
