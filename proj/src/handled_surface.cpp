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
#include <map>
#include <set>

#include "highgenus/error.hpp"
#include "highgenus/homology.hpp"
#include "highgenus/surgery.hpp"

namespace hg {

namespace {

// Relative lattice position of the i-th vertex of a hole rim of side s,
// counter-clockwise from the lower-left corner.
std::pair<int, int> rim_position(int i, int s) {
    if (i < s) return {i, 0};
    if (i < 2 * s) return {s, i - s};
    if (i < 3 * s) return {3 * s - i, s};
    return {0, 4 * s - i};
}

int rim_index(int x, int y, int s) {
    if (y == 0) return x;
    if (x == s) return s + y;
    if (y == s) return 3 * s - x;
    return (4 * s - y) % (4 * s);
}

// Open tube: rings 0..length of `around` vertices; ring j vertex i has id
// j * around + i.
CellComplex build_tube(int around, int length, int handle) {
    CellComplex t;
    t.num_vertices = around * (length + 1);
    auto vid = [around](int j, int i) { return j * around + (i % around); };
    std::vector<int> ring_edge((length + 1) * around), rung_edge(length * around);
    for (int j = 0; j <= length; ++j)
        for (int i = 0; i < around; ++i) {
            ring_edge[j * around + i] = t.num_edges();
            t.edges.push_back({vid(j, i), vid(j, i + 1)});
        }
    for (int j = 0; j < length; ++j)
        for (int i = 0; i < around; ++i) {
            rung_edge[j * around + i] = t.num_edges();
            t.edges.push_back({vid(j, i), vid(j + 1, i)});
        }
    for (int j = 0; j < length; ++j)
        for (int i = 0; i < around; ++i) {
            Face f;
            f.vertices = {vid(j, i), vid(j, i + 1), vid(j + 1, i + 1), vid(j + 1, i)};
            f.edges = {ring_edge[j * around + i], rung_edge[j * around + (i + 1) % around],
                       ring_edge[(j + 1) * around + i], rung_edge[j * around + i]};
            t.faces.push_back(std::move(f));
        }
    t.edge_region.assign(t.edges.size(), handle);
    for (int j : {0, length}) {
        Walk ring;
        for (int i = 0; i < around; ++i) {
            ring.vertices.push_back(vid(j, i));
            ring.edges.push_back(ring_edge[j * around + i]);
        }
        t.boundaries.push_back(normalize_boundary(t, ring));
    }
    Walk seam;
    const int mid = length / 2;
    for (int i = 0; i < around; ++i) {
        seam.vertices.push_back(vid(mid, i));
        seam.edges.push_back(ring_edge[mid * around + i]);
    }
    t.handles.push_back({handle, seam});
    return t;
}

struct Layout {
    int base_side = 0;
    int slots = 0;  // per axis
    std::vector<int> coords;
};

// Square grid of hole slots with pitch >= pitch.
std::optional<Layout> plan_layout(int base_side, int pitch, int side, int handles) {
    const int per_axis = base_side / pitch;
    if (per_axis * per_axis < 2 * handles || per_axis < 2) return std::nullopt;
    Layout lay;
    lay.base_side = base_side;
    lay.slots = per_axis;
    for (int i = 0; i < per_axis; ++i) lay.coords.push_back(static_cast<int>(static_cast<long long>(i) * base_side / per_axis));
    for (int i = 0; i < per_axis; ++i) {
        const int next = i + 1 < per_axis ? lay.coords[i + 1] : base_side;
        if (next - lay.coords[i] < side + 1) return std::nullopt;
    }
    return lay;
}

// Slot m lies on diagonal m / n of the slot torus; consecutive slots along a
// diagonal are diagonal neighbours.
std::pair<int, int> slot_cell(int m, int n) {
    const int i = m % n;
    return {i, (i + m / n) % n};
}

}  // namespace

CellComplex build_handled_surface(const Blueprint& bp) {
    if (bp.L < 4 || bp.L % 4 != 0)
        throw Error(ErrorKind::invalid_parameter, "L must be a positive multiple of 4, got " + std::to_string(bp.L));
    if (bp.N < 1) throw Error(ErrorKind::invalid_parameter, "N must be at least 1");
    const int s = bp.resolved_hole_side();
    const int t = bp.resolved_tube_length();
    if (s < 1 || t < 1) throw Error(ErrorKind::invalid_parameter, "hole side and tube length must be positive");
    const int pitch = std::max(s + 1, bp.L / 2);

    std::optional<Layout> layout;
    int base_side = bp.resolved_base_side();
    if (bp.base_side > 0) {
        layout = plan_layout(base_side, pitch, s, bp.N);
        if (!layout)
            throw Error(ErrorKind::blueprint_too_dense, std::to_string(2 * bp.N) + " holes of side " + std::to_string(s) +
                                                            " do not fit on a base of side " + std::to_string(base_side));
    } else {
        // the default side can be a little too small for tiny N; grow it
        while (!(layout = plan_layout(base_side, pitch, s, bp.N))) ++base_side;
    }

    CellComplex base = build_torus(base_side);
    auto vertex_at = [&](int x, int y) { return y * base_side + x; };
    const int n = layout->slots;
    const auto& co = layout->coords;
    // base logical loops run in the gap between the first two slot rows
    const int lane = co[0] + s + (co[1] - co[0] - s) / 2;
    if (lane > co[0] + s && lane < co[1]) {
        Walk column, row;
        for (int i = 0; i < base_side; ++i) {
            column.vertices.push_back(vertex_at(lane, i));
            column.edges.push_back(2 * vertex_at(lane, i) + 1);
            row.vertices.push_back(vertex_at(i, lane));
            row.edges.push_back(2 * vertex_at(i, lane));
        }
        base.marked_loops = {column, row};
    }

    std::vector<HoleSpec> holes;
    for (int h = 0; h < bp.N; ++h) {
        auto [ia, ja] = slot_cell(2 * h, n);
        auto [ib, jb] = slot_cell(2 * h + 1, n);
        holes.push_back({vertex_at(co[ia], co[ja]), s});
        holes.push_back({vertex_at(co[ib], co[jb]), s});
    }
    CellComplex surface = punch_square_holes(base, holes);
    const int hole_base = static_cast<int>(surface.boundaries.size()) - 2 * bp.N;

    const int around = 4 * s;
    std::vector<SewSpec> specs;
    for (int h = 0; h < bp.N; ++h) {
        const int tube_vertex0 = surface.num_vertices;
        const int tube_bound0 = static_cast<int>(surface.boundaries.size());
        surface = disjoint_union(surface, build_tube(around, t, h));
        for (int end = 0; end < 2; ++end) {
            const int tb = tube_bound0 + end;
            const auto& ring = surface.boundaries[tb];
            SewSpec spec{end == 0 ? hole_base + 2 * h : hole_base + 2 * h + 1, tb, {}};
            for (int v : ring.vertices) {
                const int i = (v - tube_vertex0) % around;
                int target = i;
                if (end == 1) {
                    // mirror the rim so the tube attaches orientably
                    auto [x, y] = rim_position(i, s);
                    target = rim_index(s - x, y, s);
                }
                spec.image.push_back(target);
            }
            specs.push_back(std::move(spec));
        }
    }
    surface = sew_many(surface, specs);
    Blueprint echo = bp;
    echo.base_side = base_side;
    echo.hole_side = s;
    echo.tube_length = t;
    surface.blueprint = echo;
    surface.seed = bp.seed;
    std::sort(surface.handles.begin(), surface.handles.end(), [](const Handle& a, const Handle& b) { return a.id < b.id; });
    return surface;
}

namespace {

std::set<int> neighbourhood(const CellComplex& c, const Adjacency& adj, const std::vector<int>& vertices) {
    std::set<int> out(vertices.begin(), vertices.end());
    for (int v : vertices)
        for (auto [w, e] : adj[v]) out.insert(w);
    (void)c;
    return out;
}

// Lengthens `loop` by two edges by swapping one of its edges for the other
// three sides of an adjacent quad. New vertices must avoid `forbidden`.
bool add_detour(const CellComplex& c, const Occurrences& occ, std::vector<int>& loop, const std::set<int>& forbidden) {
    auto walk = order_simple_cycle(c, loop);
    if (!walk) return false;
    std::set<int> own(walk->vertices.begin(), walk->vertices.end());
    for (int e : walk->edges) {
        for (const auto& o : occ[e]) {
            const auto& face = c.faces[o.face];
            if (face.edges.size() != 4) continue;
            const int a = face.vertices[(o.index + 2) % 4];
            const int b = face.vertices[(o.index + 3) % 4];
            if (a == b || own.count(a) || own.count(b) || forbidden.count(a) || forbidden.count(b)) continue;
            std::vector<int> candidate = loop;
            for (int fe : face.edges) {
                auto it = std::find(candidate.begin(), candidate.end(), fe);
                if (it != candidate.end())
                    candidate.erase(it);
                else
                    candidate.push_back(fe);
            }
            if (candidate.size() != loop.size() + 2) continue;
            if (!order_simple_cycle(c, candidate)) continue;
            loop = std::move(candidate);
            return true;
        }
    }
    return false;
}

}  // namespace

SymmetrizeResult symmetrize(const CellComplex& c, const Blueprint& bp, std::uint64_t seed) {
    (void)bp;
    SymmetrizeResult result;
    result.kink_excess_before = validate(c).kink_excess;
    const auto adj = adjacency(c);
    const auto occ = edge_occurrences(c);

    struct Chosen {
        int handle;
        std::vector<int> edges;
        std::vector<int> vertices;
    };
    std::vector<Chosen> chosen;
    std::vector<char> blocked(static_cast<std::size_t>(c.num_vertices), 0);
    for (const auto& loop : c.marked_loops)
        for (int v : loop.vertices) blocked[v] = 1;
    // short loops first; they crowd out the fewest others
    std::vector<std::pair<std::size_t, int>> order;
    for (const auto& h : c.handles) order.emplace_back(handle_l_loop(c, h.id).weight(), h.id);
    std::sort(order.begin(), order.end());
    for (const auto& [len, id] : order) {
        std::vector<int> edges;
        try {
            edges = handle_l_loop(c, id, blocked).support();
        } catch (const Error&) {
            result.skipped.push_back({id, "no loop avoiding earlier cuts"});
            continue;
        }
        auto walk = order_simple_cycle(c, edges);
        if (!walk) {
            result.skipped.push_back({id, "loop is not simple"});
            continue;
        }
        for (int v : neighbourhood(c, adj, walk->vertices)) blocked[v] = 1;
        chosen.push_back({id, edges, walk->vertices});
    }

    // circles are sewn only to circles of equal length; each parity gets
    // one common length, picked to keep as many loops as possible
    struct Equalized {
        std::vector<Chosen> loops;
        std::vector<SkippedHandle> skipped;
        int detours = 0;
    };
    auto equalize = [&](const int (&goal)[2]) {
        Equalized out;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            auto ch = chosen[i];
            const int want = goal[ch.edges.size() % 2];
            if (static_cast<int>(ch.edges.size()) > want) {
                out.skipped.push_back({ch.handle, "longer than the common length"});
                continue;
            }
            std::set<int> forbidden;
            for (const auto& loop : c.marked_loops) forbidden.insert(loop.vertices.begin(), loop.vertices.end());
            for (std::size_t j = i + 1; j < chosen.size(); ++j)
                for (int v : neighbourhood(c, adj, chosen[j].vertices)) forbidden.insert(v);
            for (const auto& other : out.loops)
                for (int v : neighbourhood(c, adj, other.vertices)) forbidden.insert(v);
            bool ok = true;
            int detours = 0;
            while (static_cast<int>(ch.edges.size()) < want) {
                if (!add_detour(c, occ, ch.edges, forbidden)) {
                    ok = false;
                    break;
                }
                ++detours;
            }
            if (!ok) {
                out.skipped.push_back({ch.handle, "no room to lengthen loop"});
                continue;
            }
            out.detours += detours;
            ch.vertices = order_simple_cycle(c, ch.edges)->vertices;
            out.loops.push_back(std::move(ch));
        }
        return out;
    };
    std::set<int> lengths[2];
    for (const auto& ch : chosen) lengths[ch.edges.size() % 2].insert(static_cast<int>(ch.edges.size()));
    for (auto& l : lengths) l.insert(0);  // parity unused
    Equalized best;
    int best_goal[2] = {0, 0};
    bool have = false;
    for (int t0 : lengths[0]) {
        for (int t1 : lengths[1]) {
            const int goal[2] = {t0, t1};
            auto trial = equalize(goal);
            // ties go to the longer circles
            if (!have || trial.loops.size() > best.loops.size() ||
                (trial.loops.size() == best.loops.size() && t0 + t1 > best_goal[0] + best_goal[1])) {
                best = std::move(trial);
                best_goal[0] = t0;
                best_goal[1] = t1;
                have = true;
            }
        }
    }
    result.detours = best.detours;
    result.skipped.insert(result.skipped.end(), best.skipped.begin(), best.skipped.end());
    const auto& equal = best.loops;

    CellComplex work = c;
    std::vector<Cut> cuts[2];
    for (const auto& ch : equal) {
        try {
            auto cut = cut_along_cycle(work, BinaryChain(static_cast<std::size_t>(work.num_edges()), ch.edges));
            work = std::move(cut.complex);
            cuts[ch.edges.size() % 2].push_back(std::move(cut.cut));
            result.used_handles.push_back(ch.handle);
        } catch (const Error& err) {
            result.skipped.push_back({ch.handle, std::string("cut rejected: ") + err.what()});
        }
    }
    const int total = static_cast<int>(c.handles.size());
    const int used = static_cast<int>(result.used_handles.size());
    if (used == 0 || 2 * used < total) {
        std::string diag = "only " + std::to_string(used) + " of " + std::to_string(total) + " handles usable;";
        for (const auto& sk : result.skipped) diag += " [" + std::to_string(sk.handle) + ": " + sk.reason + "]";
        throw Error(ErrorKind::symmetrize_failed, diag);
    }
    const int major = cuts[0].size() >= cuts[1].size() ? 0 : 1;
    result.common_length = best_goal[major];
    std::vector<Cut> all = cuts[0];
    all.insert(all.end(), cuts[1].begin(), cuts[1].end());
    RepairResult repaired = random_repairing(work, all, seed);
    result.complex = std::move(repaired.complex);
    result.complex.blueprint = c.blueprint;
    if (result.complex.blueprint) result.complex.blueprint->symmetrized = true;
    result.kink_excess_after = validate(result.complex).kink_excess;
    std::sort(result.skipped.begin(), result.skipped.end(), [](const SkippedHandle& a, const SkippedHandle& b) { return a.handle < b.handle; });
    return result;
}

}  // namespace hg
