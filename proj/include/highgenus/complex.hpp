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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hg {

struct Edge {
    int a = 0;
    int b = 0;

    int other(int v) const { return v == a ? b : a; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Closed walk: edges[k] joins vertices[k] and vertices[k+1] (cyclically).
struct Walk {
    std::vector<int> vertices;
    std::vector<int> edges;

    std::size_t size() const { return edges.size(); }
    friend bool operator==(const Walk&, const Walk&) = default;
};

using Face = Walk;

/// Boundary circles are stored with the orientation opposite to the
/// traversal of their single adjacent face.
using Circle = Walk;

/// A tube junction: the seam is a closed loop of edges running once around
/// the tube (a w-loop for freshly built handles).
struct Handle {
    int id = 0;
    Walk seam;
    friend bool operator==(const Handle&, const Handle&) = default;
};

/// Construction parameters for an N-handle surface. Zero means "use the
/// default" for the derived lengths.
struct Blueprint {
    int L = 8;
    int N = 1;
    int hole_side = 0;    // default L/4
    int tube_length = 0;  // default L/4
    int base_side = 0;    // default ceil(L*sqrt(N/2))
    std::uint64_t seed = 0;
    bool symmetrized = false;
    bool reversing_glue = false;

    int resolved_hole_side() const { return hole_side > 0 ? hole_side : L / 4; }
    int resolved_tube_length() const { return tube_length > 0 ? tube_length : L / 4; }
    int default_base_side() const;
    int resolved_base_side() const { return base_side > 0 ? base_side : default_base_side(); }

    friend bool operator==(const Blueprint&, const Blueprint&) = default;
};

inline constexpr int kBaseRegion = -1;
inline constexpr int kNoRegion = -2;

/// Square-lattice cell complex: a closed or bounded combinatorial surface.
/// Ids are dense: vertices 0..V-1, edges 0..E-1, faces 0..F-1.
struct CellComplex {
    int num_vertices = 0;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    std::vector<Circle> boundaries;

    /// Per-edge tag: kBaseRegion, the id of the handle tube it belongs to,
    /// or kNoRegion.
    std::vector<int> edge_region;
    std::vector<Handle> handles;
    /// Distinguished cycles (the base torus generators). Dropped by any
    /// surgery that breaks them.
    std::vector<Walk> marked_loops;

    std::optional<Blueprint> blueprint;
    std::uint64_t seed = 0;

    int num_edges() const { return static_cast<int>(edges.size()); }
    int num_faces() const { return static_cast<int>(faces.size()); }
    int euler_characteristic() const { return num_vertices - num_edges() + num_faces(); }
    bool is_closed() const { return boundaries.empty(); }

    friend bool operator==(const CellComplex&, const CellComplex&) = default;
};

/// Position of an edge inside a face walk.
struct Occurrence {
    int face = -1;
    int index = -1;
};

using Occurrences = std::vector<std::vector<Occurrence>>;
using Adjacency = std::vector<std::vector<std::pair<int, int>>>;

/// Face occurrences of every edge (two for interior edges, one on a boundary).
Occurrences edge_occurrences(const CellComplex& c);

/// Neighbour list per vertex as (neighbour, edge id), sorted by edge id.
Adjacency adjacency(const CellComplex& c);

std::vector<int> valences(const CellComplex& c);

/// Cyclic order of edges and faces around a vertex: faces[i] lies between
/// edges[i] and edges[i+1]. For boundary vertices the fan is open and
/// faces.size() == edges.size() - 1.
struct Rotation {
    std::vector<int> edges;
    std::vector<int> faces;
    std::vector<int> corners;  // index of the vertex inside faces[i]
    bool closed = true;
};

/// Rotation system around `v`, or nullopt when the corners at `v` do not
/// form a single fan (non-manifold vertex).
std::optional<Rotation> rotation_at(const CellComplex& c, int v, const Occurrences& occ,
                                    const Adjacency& adj);

/// Direction in which face occurrence traverses its edge: +1 for a->b.
int traversal_sign(const CellComplex& c, const Occurrence& o);

/// Reorients a boundary walk to the stored convention (opposite to the
/// adjacent face) and rotates it to start at `start_vertex` if given.
Circle normalize_boundary(const CellComplex& c, Circle circle, int start_vertex = -1);

/// Walk through a cycle given as an unordered edge set. Returns nullopt
/// unless the edges form a single vertex-simple closed loop.
std::optional<Walk> order_simple_cycle(const CellComplex& c, std::span<const int> edge_ids);

bool is_connected(const CellComplex& c);

/// Renumber cells. vmap/emap give the new id or -1 to delete; several old
/// ids may share a new id (identification). Faces flagged false in
/// face_keep are deleted. Boundaries listed in drop_boundaries are removed;
/// handles and marked loops touching deleted cells are dropped.
CellComplex relabel(const CellComplex& c, std::span<const int> vmap, std::span<const int> emap,
                    std::span<const char> face_keep, std::span<const int> drop_boundaries = {});

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
    std::vector<int> bad_edges;
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int euler = 0;
    bool closed = true;
    bool connected = true;
    bool orientable = true;
    std::map<int, int> valence_histogram;
    std::vector<int> boundary_lengths;
    int handles = 0;
    /// Sum over vertices of max(0, valence - 4).
    int kink_excess = 0;

    double kink_density() const { return vertices ? static_cast<double>(kink_excess) / vertices : 0.0; }
    std::string to_text() const;
};

ValidationReport validate(const CellComplex& c);

/// Attempts a coherent orientation of all faces.
bool is_orientable(const CellComplex& c);

// Surface file (versioned JSON text). Output is canonical so equal complexes
// serialize to identical bytes.
inline constexpr int kSurfaceFormatMajor = 1;
inline constexpr int kSurfaceFormatMinor = 0;

std::string write_surface(const CellComplex& c);
CellComplex read_surface(const std::string& text);
CellComplex load_surface(const std::string& path);
void save_surface(const CellComplex& c, const std::string& path);

/// FNV-1a of the serialized complex; stable across platforms.
std::uint64_t surface_hash(const CellComplex& c);

}  // namespace hg
