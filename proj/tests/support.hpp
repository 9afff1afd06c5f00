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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "highgenus/complex.hpp"
#include "highgenus/error.hpp"
#include "highgenus/homology.hpp"
#include "highgenus/random.hpp"
#include "highgenus/surgery.hpp"

namespace hg::test {

struct Surgered {
    CellComplex complex;
    int expected_euler = 0;
    int operations = 0;
};

inline int random_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline int random_anchor(const CellComplex& c, Rng& rng, int lo_face = 0) {
    const int f = random_int(rng, lo_face, c.num_faces() - 1);
    return c.faces[f].vertices[0];
}

/// Small closed complex from a seeded mix of handle additions (two holes on
/// one surface, sewn, sometimes reversed) and connected sums with fresh
/// tori. Each operation lowers chi by 2.
inline Surgered random_surgery(std::uint64_t seed, int max_side = 5) {
    Rng rng(seed);
    Surgered out;
    out.complex = build_torus(random_int(rng, 3, max_side));
    const int ops = random_int(rng, 1, 3);
    for (int op = 0; op < ops; ++op) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            try {
                const int side = random_int(rng, 1, 2);
                const int len = 4 * side;
                CellComplex c;
                if (uniform_below(rng, 2) == 0) {
                    const int a1 = random_anchor(out.complex, rng);
                    const int a2 = random_anchor(out.complex, rng);
                    const std::vector<HoleSpec> holes{{a1, side}, {a2, side}};
                    c = punch_square_holes(out.complex, holes);
                } else {
                    const auto fresh = build_torus(random_int(rng, 3, max_side));
                    const int faces_before = out.complex.num_faces();
                    const auto both = disjoint_union(out.complex, fresh);
                    const std::vector<HoleSpec> holes{{random_anchor(both, rng, faces_before), side},
                                                      {random_anchor(out.complex, rng), side}};
                    c = punch_square_holes(both, holes);
                }
                const int nb = static_cast<int>(c.boundaries.size());
                const bool reversed = uniform_below(rng, 4) == 0;
                c = sew_boundaries(c, nb - 2, nb - 1, random_int(rng, 0, len - 1), reversed);
                out.complex = std::move(c);
                ++out.operations;
                break;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::surgery_conflict) throw;
            }
        }
    }
    out.expected_euler = -2 * out.operations;
    return out;
}

/// Entrywise check of d1 d2 = 0 straight from the face lists.
inline bool boundary_of_boundary_vanishes(const CellComplex& c) {
    for (const auto& f : c.faces) {
        std::vector<int> hits(static_cast<std::size_t>(c.num_vertices), 0);
        for (int e : f.edges) {
            ++hits[c.edges[e].a];
            ++hits[c.edges[e].b];
        }
        if (std::any_of(hits.begin(), hits.end(), [](int h) { return h % 2; })) return false;
    }
    return true;
}

/// Gram matrix of the logical operators computed from raw supports:
/// entry (i, j) is the overlap parity of Z_i and X_j.
inline bool symplectic_normal_form(const CssCode& code) {
    for (int i = 0; i < code.k; ++i) {
        const auto zi = code.logical_pairs[i].z.support();
        for (int j = 0; j < code.k; ++j) {
            const auto xj = code.logical_pairs[j].x.support();
            std::vector<int> common;
            std::set_intersection(zi.begin(), zi.end(), xj.begin(), xj.end(), std::back_inserter(common));
            if ((common.size() % 2 == 1) != (i == j)) return false;
        }
    }
    return true;
}

}  // namespace hg::test
