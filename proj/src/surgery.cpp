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

#include "highgenus/surgery.hpp"

#include <algorithm>
#include <map>
#include <cmath>
#include <numeric>
#include <set>

#include "highgenus/error.hpp"

namespace hg {

CellComplex build_torus(int L) {
    if (L < 2) throw Error(ErrorKind::invalid_parameter, "torus side must be at least 2, got " + std::to_string(L));
    CellComplex c;
    c.num_vertices = L * L;
    c.edges.resize(2 * L * L);
    auto vid = [L](int x, int y) { return ((y % L + L) % L) * L + (x % L + L) % L; };
    for (int y = 0; y < L; ++y) {
        for (int x = 0; x < L; ++x) {
            const int v = vid(x, y);
            c.edges[2 * v] = {v, vid(x + 1, y)};
            c.edges[2 * v + 1] = {v, vid(x, y + 1)};
        }
    }
    for (int y = 0; y < L; ++y) {
        for (int x = 0; x < L; ++x) {
            Face f;
            f.vertices = {vid(x, y), vid(x + 1, y), vid(x + 1, y + 1), vid(x, y + 1)};
            f.edges = {2 * vid(x, y), 2 * vid(x + 1, y) + 1, 2 * vid(x, y + 1), 2 * vid(x, y) + 1};
            c.faces.push_back(std::move(f));
        }
    }
    c.edge_region.assign(c.edges.size(), kBaseRegion);
    Walk column, row;
    for (int y = 0; y < L; ++y) {
        column.vertices.push_back(vid(0, y));
        column.edges.push_back(2 * vid(0, y) + 1);
    }
    for (int x = 0; x < L; ++x) {
        row.vertices.push_back(vid(x, 0));
        row.edges.push_back(2 * vid(x, 0));
    }
    c.marked_loops = {column, row};
    return c;
}

CellComplex disjoint_union(const CellComplex& a, const CellComplex& b) {
    CellComplex out = a;
    const int dv = a.num_vertices;
    const int de = a.num_edges();
    auto shift = [&](Walk w) {
        for (auto& v : w.vertices) v += dv;
        for (auto& e : w.edges) e += de;
        return w;
    };
    out.num_vertices += b.num_vertices;
    for (const auto& e : b.edges) out.edges.push_back({e.a + dv, e.b + dv});
    for (const auto& f : b.faces) out.faces.push_back(shift(f));
    for (const auto& bd : b.boundaries) out.boundaries.push_back(shift(bd));
    if (out.edge_region.size() != a.edges.size()) out.edge_region.assign(a.edges.size(), kNoRegion);
    if (b.edge_region.size() == b.edges.size())
        out.edge_region.insert(out.edge_region.end(), b.edge_region.begin(), b.edge_region.end());
    else
        out.edge_region.resize(out.edges.size(), kNoRegion);
    for (const auto& h : b.handles) out.handles.push_back({h.id, shift(h.seam)});
    for (const auto& l : b.marked_loops) out.marked_loops.push_back(shift(l));
    return out;
}

namespace {

std::vector<int> dense_map(const std::vector<char>& keep) {
    std::vector<int> map(keep.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (keep[i]) map[i] = next++;
    return map;
}

// Frame on a quad face: index of its "bottom" edge and the direction
// (+1/-1) in which bottom, right, top, left follow each other.
struct QuadFrame {
    int face;
    int bottom;
    int dir;
};

int mod4(int x) { return ((x % 4) + 4) % 4; }

QuadFrame step(const CellComplex& c, const Occurrences& occ, const QuadFrame& fr, bool up) {
    const auto& face = c.faces[fr.face];
    if (face.edges.size() != 4) throw Error(ErrorKind::surgery_conflict, "hole block crosses a non-quad face");
    const int k = mod4(fr.bottom + (up ? 2 : 1) * fr.dir);
    const Occurrence here{fr.face, k};
    const auto& os = occ[face.edges[k]];
    if (os.size() != 2) throw Error(ErrorKind::surgery_conflict, "hole block runs into a boundary");
    const Occurrence there = (os[0].face == here.face && os[0].index == here.index) ? os[1] : os[0];
    if (c.faces[there.face].edges.size() != 4)
        throw Error(ErrorKind::surgery_conflict, "hole block crosses a non-quad face");
    const bool coherent = traversal_sign(c, here) * traversal_sign(c, there) < 0;
    const int dir = coherent ? fr.dir : -fr.dir;
    // entering through our right edge means it is the neighbour's left edge
    const int bottom = up ? there.index : mod4(there.index + dir);
    return {there.face, bottom, dir};
}

}  // namespace

CellComplex punch_square_holes(const CellComplex& c, std::span<const HoleSpec> holes) {
    const auto occ = edge_occurrences(c);
    const auto adj = adjacency(c);
    std::vector<char> on_boundary(c.num_vertices, 0);
    for (const auto& b : c.boundaries)
        for (int v : b.vertices) on_boundary[v] = 1;

    std::vector<char> face_keep(c.num_faces(), 1);
    std::vector<char> vertex_keep(c.num_vertices, 1);
    std::vector<char> edge_keep(c.num_edges(), 1);
    std::vector<char> claimed(c.num_vertices, 0);
    std::vector<Walk> new_bounds;

    for (const auto& hole : holes) {
        if (hole.side < 1) throw Error(ErrorKind::invalid_parameter, "hole side must be positive");
        if (hole.anchor < 0 || hole.anchor >= c.num_vertices)
            throw Error(ErrorKind::invalid_parameter, "hole anchor out of range");
        int start = -1;
        for (int f = 0; f < c.num_faces() && start < 0; ++f)
            if (!c.faces[f].vertices.empty() && c.faces[f].vertices[0] == hole.anchor) start = f;
        if (start < 0) throw Error(ErrorKind::surgery_conflict, "no face is anchored at vertex " + std::to_string(hole.anchor));

        std::set<int> block;
        QuadFrame row_start{start, 0, +1};
        for (int j = 0; j < hole.side; ++j) {
            QuadFrame fr = row_start;
            for (int i = 0; i < hole.side; ++i) {
                block.insert(fr.face);
                if (i + 1 < hole.side) fr = step(c, occ, fr, false);
            }
            if (j + 1 < hole.side) row_start = step(c, occ, row_start, true);
        }
        const int s = hole.side;
        if (static_cast<int>(block.size()) != s * s)
            throw Error(ErrorKind::surgery_conflict, "hole block wraps onto itself");

        std::set<int> block_vertices;
        for (int f : block) {
            if (!face_keep[f]) throw Error(ErrorKind::surgery_conflict, "hole overlaps another hole");
            for (int v : c.faces[f].vertices) block_vertices.insert(v);
        }
        for (int v : block_vertices) {
            if (on_boundary[v] || claimed[v])
                throw Error(ErrorKind::surgery_conflict, "hole touches an existing boundary at vertex " + std::to_string(v));
        }
        std::vector<int> perimeter;
        std::vector<int> interior_edges;
        for (int f : block) {
            for (int e : c.faces[f].edges) {
                int inside = 0;
                for (const auto& o : occ[e]) inside += block.count(o.face) ? 1 : 0;
                if (inside == 1)
                    perimeter.push_back(e);
                else if (inside == 2)
                    interior_edges.push_back(e);
            }
        }
        std::sort(perimeter.begin(), perimeter.end());
        perimeter.erase(std::unique(perimeter.begin(), perimeter.end()), perimeter.end());
        std::sort(interior_edges.begin(), interior_edges.end());
        interior_edges.erase(std::unique(interior_edges.begin(), interior_edges.end()), interior_edges.end());
        std::vector<int> interior_vertices;
        for (int v : block_vertices) {
            bool all_inside = true;
            for (auto [w, e] : adj[v])
                if (!std::binary_search(interior_edges.begin(), interior_edges.end(), e)) all_inside = false;
            if (all_inside) interior_vertices.push_back(v);
        }
        if (static_cast<int>(perimeter.size()) != 4 * s ||
            static_cast<int>(interior_edges.size()) != 2 * s * (s - 1) ||
            static_cast<int>(interior_vertices.size()) != (s - 1) * (s - 1))
            throw Error(ErrorKind::surgery_conflict, "hole block is not an embedded disk");
        auto circle = order_simple_cycle(c, perimeter);
        if (!circle) throw Error(ErrorKind::surgery_conflict, "hole perimeter is not a simple loop");

        for (int f : block) face_keep[f] = 0;
        for (int e : interior_edges) edge_keep[e] = 0;
        for (int v : interior_vertices) vertex_keep[v] = 0;
        for (int v : block_vertices) claimed[v] = 1;
        new_bounds.push_back(std::move(*circle));
    }

    const auto vmap = dense_map(vertex_keep);
    const auto emap = dense_map(edge_keep);
    CellComplex out = relabel(c, vmap, emap, face_keep);
    for (std::size_t h = 0; h < holes.size(); ++h) {
        Walk w = new_bounds[h];
        for (auto& v : w.vertices) v = vmap[v];
        for (auto& e : w.edges) e = emap[e];
        out.boundaries.push_back(normalize_boundary(out, std::move(w), vmap[holes[h].anchor]));
    }
    return out;
}

CellComplex punch_square_hole(const CellComplex& c, int anchor, int side) {
    const HoleSpec spec{anchor, side};
    return punch_square_holes(c, std::span<const HoleSpec>(&spec, 1));
}

std::vector<int> sew_image(int length, int offset, bool reversed) {
    std::vector<int> image(length);
    for (int j = 0; j < length; ++j) {
        const int k = reversed ? offset + j : offset - j;
        image[j] = ((k % length) + length) % length;
    }
    return image;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // keeps the smaller id as representative so numbering stays stable
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
};

}  // namespace

CellComplex sew_many(const CellComplex& c, std::span<const SewSpec> specs, std::vector<Walk>* seams) {
    const int nb = static_cast<int>(c.boundaries.size());
    std::vector<char> used(nb, 0);
    std::vector<char> on_circle(c.num_vertices, 0);
    for (const auto& sp : specs) {
        if (sp.b1 < 0 || sp.b2 < 0 || sp.b1 >= nb || sp.b2 >= nb)
            throw Error(ErrorKind::invalid_parameter, "no such boundary");
        if (sp.b1 == sp.b2) throw Error(ErrorKind::self_sew_unsupported, "cannot sew a boundary to itself");
        for (int b : {sp.b1, sp.b2}) {
            if (used[b]) throw Error(ErrorKind::surgery_conflict, "boundary used in two sews");
            used[b] = 1;
            for (int v : c.boundaries[b].vertices) {
                if (on_circle[v]) throw Error(ErrorKind::surgery_conflict, "boundaries share vertex " + std::to_string(v));
                on_circle[v] = 1;
            }
        }
        const auto n = c.boundaries[sp.b1].size();
        if (c.boundaries[sp.b2].size() != n)
            throw Error(ErrorKind::length_mismatch, "boundary lengths " + std::to_string(n) + " and " +
                                                        std::to_string(c.boundaries[sp.b2].size()) + " differ");
        if (sp.image.size() != n) throw Error(ErrorKind::invalid_parameter, "sew image has wrong length");
    }

    DisjointSets vsets(c.num_vertices);
    DisjointSets esets(c.num_edges());
    for (const auto& sp : specs) {
        const auto& w1 = c.boundaries[sp.b1];
        const auto& w2 = c.boundaries[sp.b2];
        const int n = static_cast<int>(w1.size());
        for (int j = 0; j < n; ++j) {
            const int i0 = sp.image[j];
            const int i1 = sp.image[(j + 1) % n];
            vsets.unite(w2.vertices[j], w1.vertices[i0]);
            int e1;
            if ((i0 + 1) % n == i1)
                e1 = w1.edges[i0];
            else if ((i1 + 1) % n == i0)
                e1 = w1.edges[i1];
            else
                throw Error(ErrorKind::invalid_parameter, "sew image is not a rotation or reflection");
            esets.unite(w2.edges[j], e1);
        }
    }
    std::vector<int> vmap(c.num_vertices), emap(c.num_edges());
    {
        std::vector<int> id(c.num_vertices, -1);
        int next = 0;
        for (int v = 0; v < c.num_vertices; ++v) {
            const int r = vsets.find(v);
            if (id[r] < 0) id[r] = next++;
            vmap[v] = id[r];
        }
    }
    {
        std::vector<int> id(c.num_edges(), -1);
        int next = 0;
        for (int e = 0; e < c.num_edges(); ++e) {
            const int r = esets.find(e);
            if (id[r] < 0) id[r] = next++;
            emap[e] = id[r];
        }
    }
    for (int e = 0; e < c.num_edges(); ++e)
        if (vmap[c.edges[e].a] == vmap[c.edges[e].b])
            throw Error(ErrorKind::surgery_conflict, "sewing would turn edge " + std::to_string(e) + " into a self-loop");

    std::vector<int> drop;
    for (const auto& sp : specs) {
        drop.push_back(sp.b1);
        drop.push_back(sp.b2);
    }
    const std::vector<char> keep_faces(c.num_faces(), 1);
    CellComplex out = relabel(c, vmap, emap, keep_faces, drop);
    if (seams) {
        seams->clear();
        for (const auto& sp : specs) {
            Walk w = c.boundaries[sp.b1];
            for (auto& v : w.vertices) v = vmap[v];
            for (auto& e : w.edges) e = emap[e];
            seams->push_back(std::move(w));
        }
    }
    return out;
}

CellComplex sew_boundaries(const CellComplex& c, int b1, int b2, int offset, bool reversed) {
    if (b1 == b2) throw Error(ErrorKind::self_sew_unsupported, "cannot sew a boundary to itself");
    const int nb = static_cast<int>(c.boundaries.size());
    if (b1 < 0 || b2 < 0 || b1 >= nb || b2 >= nb) throw Error(ErrorKind::invalid_parameter, "no such boundary");
    const auto n = c.boundaries[b1].size();
    if (c.boundaries[b2].size() != n)
        throw Error(ErrorKind::length_mismatch, "boundary lengths " + std::to_string(n) + " and " +
                                                    std::to_string(c.boundaries[b2].size()) + " differ");
    const SewSpec spec{b1, b2, sew_image(static_cast<int>(n), offset, reversed)};
    return sew_many(c, std::span<const SewSpec>(&spec, 1));
}

int join_side(int L) {
    int side = static_cast<int>(std::lround(2.0 * L / std::sqrt(3.0)));
    if (side % 2) ++side;
    return side;
}

CellComplex join_two_tori(int L) {
    if (L < 4) throw Error(ErrorKind::invalid_parameter, "join_two_tori needs L >= 4");
    const int side = join_side(L);
    const CellComplex holed = punch_square_hole(build_torus(side), 0, side / 2);
    const CellComplex both = disjoint_union(holed, holed);
    return sew_boundaries(both, 0, 1, 0, false);
}

CutResult cut_along_cycle(const CellComplex& c, const BinaryChain& loop, bool allow_separating) {
    if (static_cast<int>(loop.size()) != c.num_edges())
        throw Error(ErrorKind::invalid_parameter, "loop chain does not match the complex");
    const auto support = loop.support();
    auto walk = order_simple_cycle(c, support);
    if (!walk) throw Error(ErrorKind::not_simple, "cut loop is not a vertex-simple cycle");
    const int n = static_cast<int>(walk->size());
    const auto occ = edge_occurrences(c);
    const auto adj = adjacency(c);
    for (const auto& b : c.boundaries)
        for (int v : b.vertices)
            if (std::find(walk->vertices.begin(), walk->vertices.end(), v) != walk->vertices.end())
                throw Error(ErrorKind::surgery_conflict, "cut loop meets a boundary at vertex " + std::to_string(v));

    for (int e : walk->edges) {
        if (occ[e].size() != 2 || occ[e][0].face == occ[e][1].face)
            throw Error(ErrorKind::surgery_conflict, "cut loop edge " + std::to_string(e) + " is degenerate");
    }

    // Decide, at every loop vertex, which corners lie on the "left" side.
    // left_face[i] is the face on the left of loop edge i.
    std::vector<int> left_face(n, -1);
    left_face[0] = occ[walk->edges[0]][0].face;
    struct SideInfo {
        std::vector<int> right_edges;
        std::vector<std::pair<int, int>> right_corners;  // (face, vertex index)
    };
    std::vector<SideInfo> side(n);
    for (int step = 1; step <= n; ++step) {
        const int i = step % n;  // vertex i sits between edge i-1 and edge i
        const int v = walk->vertices[i];
        const int e_in = walk->edges[(i + n - 1) % n];
        const int e_out = walk->edges[i];
        auto rot = rotation_at(c, v, occ, adj);
        if (!rot || !rot->closed) throw Error(ErrorKind::surgery_conflict, "cut loop passes a non-manifold vertex");
        const int m = static_cast<int>(rot->edges.size());
        const int p = static_cast<int>(std::find(rot->edges.begin(), rot->edges.end(), e_in) - rot->edges.begin());
        const int q = static_cast<int>(std::find(rot->edges.begin(), rot->edges.end(), e_out) - rot->edges.begin());
        const int lf = left_face[(i + n - 1) % n];
        int dir;
        if (rot->faces[p] == lf)
            dir = +1;
        else if (rot->faces[(p + m - 1) % m] == lf)
            dir = -1;
        else
            throw Error(ErrorKind::internal_error, "lost track of the cut side");
        // walk the left fan from e_in to e_out; the remaining corners are right
        std::vector<char> left_corner(m, 0), left_edge(m, 0);
        int k = p;
        while (true) {
            const int corner = dir > 0 ? k : (k + m - 1) % m;
            left_corner[corner] = 1;
            k = (k + dir + m) % m;
            if (k == q) break;
            left_edge[k] = 1;
        }
        const int out_left = dir > 0 ? rot->faces[(q + m - 1) % m] : rot->faces[q];
        if (step < n) {
            left_face[i] = out_left;
        } else if (out_left != left_face[0]) {
            throw Error(ErrorKind::one_sided_cut, "cut loop is one-sided");
        }
        for (int t = 0; t < m; ++t) {
            if (t != p && t != q && !left_edge[t]) side[i].right_edges.push_back(rot->edges[t]);
            if (!left_corner[t]) side[i].right_corners.emplace_back(rot->faces[t], rot->corners[t]);
        }
    }

    CellComplex out = c;
    const int V = c.num_vertices;
    const int E = c.num_edges();
    out.num_vertices = V + n;
    for (int i = 0; i < n; ++i) {
        out.edges.push_back({V + i, V + (i + 1) % n});
        out.edge_region.push_back(c.edge_region.empty() ? kNoRegion : c.edge_region[walk->edges[i]]);
    }
    for (int i = 0; i < n; ++i) {
        const int v = walk->vertices[i];
        for (int e : side[i].right_edges) {
            auto& ed = out.edges[e];
            if (ed.a == v)
                ed.a = V + i;
            else
                ed.b = V + i;
        }
        for (auto [f, k] : side[i].right_corners) out.faces[f].vertices[k] = V + i;
    }
    for (int i = 0; i < n; ++i) {
        const int e = walk->edges[i];
        for (const auto& o : occ[e])
            if (o.face != left_face[i]) out.faces[o.face].edges[o.index] = E + i;
    }
    // edges were re-attached in place; make sure every edge still has its original orientation semantics
    Walk right;
    for (int i = 0; i < n; ++i) {
        right.vertices.push_back(V + i);
        right.edges.push_back(E + i);
    }
    std::set<int> loop_vertices(walk->vertices.begin(), walk->vertices.end());
    auto touches = [&](const Walk& w) {
        return std::any_of(w.vertices.begin(), w.vertices.end(), [&](int v) { return loop_vertices.count(v) > 0; });
    };
    std::erase_if(out.handles, [&](const Handle& h) { return touches(h.seam); });
    std::erase_if(out.marked_loops, touches);

    out.boundaries.push_back(normalize_boundary(out, *walk));
    out.boundaries.push_back(normalize_boundary(out, right));
    if (!allow_separating && !is_connected(out))
        throw Error(ErrorKind::separating_cut, "cut loop separates the surface");

    const int nb = static_cast<int>(out.boundaries.size());
    return {std::move(out), Cut{*walk, nb - 2, nb - 1}};
}

RepairResult random_repairing(const CellComplex& c, std::span<const int> circles, std::uint64_t seed, bool reversing) {
    // loose ends are only ever paired with loose ends of the same length
    std::map<std::size_t, std::vector<int>> by_length;
    for (int b : circles) {
        if (b < 0 || b >= static_cast<int>(c.boundaries.size()))
            throw Error(ErrorKind::repair_infeasible, "no such boundary " + std::to_string(b));
        by_length[c.boundaries[b].size()].push_back(b);
    }
    for (const auto& [len, group] : by_length)
        if (group.size() % 2 != 0)
            throw Error(ErrorKind::repair_infeasible,
                        "odd number of loose ends of length " + std::to_string(len) + ": " + std::to_string(group.size()));
    Rng rng(seed);
    RepairResult result;
    std::vector<SewSpec> specs;
    for (auto& [len, order] : by_length) {
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
        const int n = static_cast<int>(len);
        for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
            const int offset = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
            result.pairs.emplace_back(order[i], order[i + 1]);
            result.offsets.push_back(offset);
            specs.push_back({order[i], order[i + 1], sew_image(n, offset, reversing)});
        }
    }
    std::vector<Walk> seams;
    result.complex = sew_many(c, specs, &seams);
    result.complex.handles.clear();
    for (int h = 0; h < static_cast<int>(seams.size()); ++h) result.complex.handles.push_back({h, std::move(seams[h])});
    return result;
}

RepairResult random_repairing(const CellComplex& c, std::span<const Cut> cuts, std::uint64_t seed, bool reversing) {
    std::vector<int> circles;
    for (const auto& cut : cuts) {
        circles.push_back(cut.boundary_a);
        circles.push_back(cut.boundary_b);
    }
    return random_repairing(c, circles, seed, reversing);
}

RepairResult repair_handles(const CellComplex& c, std::uint64_t seed, bool reversing) {
    CellComplex work = c;
    std::vector<Cut> cuts;
    const auto seams = c.handles;
    for (const auto& h : seams) {
        BinaryChain loop(static_cast<std::size_t>(work.num_edges()), h.seam.edges);
        auto cut = cut_along_cycle(work, loop);
        work = std::move(cut.complex);
        cuts.push_back(std::move(cut.cut));
    }
    return random_repairing(work, cuts, seed, reversing);
}

CellComplex dualize(const CellComplex& c) {
    if (!c.is_closed()) throw Error(ErrorKind::dual_undefined, "dual of a bounded complex is undefined");
    const auto occ = edge_occurrences(c);
    const auto adj = adjacency(c);
    CellComplex d;
    d.num_vertices = c.num_faces();
    d.seed = c.seed;
    d.blueprint = c.blueprint;
    for (int e = 0; e < c.num_edges(); ++e) {
        if (occ[e].size() != 2) throw Error(ErrorKind::dual_undefined, "edge " + std::to_string(e) + " does not border two faces");
        d.edges.push_back({occ[e][0].face, occ[e][1].face});
    }
    d.edge_region = c.edge_region;
    for (int v = 0; v < c.num_vertices; ++v) {
        auto rot = rotation_at(c, v, occ, adj);
        if (!rot || !rot->closed) throw Error(ErrorKind::dual_undefined, "vertex " + std::to_string(v) + " is not a manifold point");
        const int m = static_cast<int>(rot->faces.size());
        Face f;
        f.vertices = rot->faces;
        for (int k = 0; k < m; ++k) f.edges.push_back(rot->edges[(k + 1) % m]);
        d.faces.push_back(std::move(f));
    }
    return d;
}

}  // namespace hg
