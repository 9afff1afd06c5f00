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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "highgenus/complex.hpp"
#include "highgenus/error.hpp"
#include "highgenus/random.hpp"
#include "highgenus/surgery.hpp"

using namespace hg;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an hg::Error");
    return ErrorKind::internal_error;
}

int torus_vertex(int L, int x, int y) { return ((y % L + L) % L) * L + (x % L + L) % L; }

Blueprint blueprint(int L, int N, std::uint64_t seed = 1) {
    Blueprint bp;
    bp.L = L;
    bp.N = N;
    bp.seed = seed;
    return bp;
}

// independent recount straight from the face lists
int count_faces_on_edge(const CellComplex& c, int e) {
    int n = 0;
    for (const auto& f : c.faces) n += static_cast<int>(std::count(f.edges.begin(), f.edges.end(), e));
    return n;
}

}  // namespace

TEST_CASE("torus cell counts") {
    for (int L : {2, 3, 4, 5, 9}) {
        const auto c = build_torus(L);
        CHECK(c.num_vertices == L * L);
        CHECK(c.num_edges() == 2 * L * L);
        CHECK(c.num_faces() == L * L);
        CHECK(c.euler_characteristic() == 0);
        const auto r = validate(c);
        CHECK(r.ok);
        CHECK(r.valence_histogram == std::map<int, int>{{4, L * L}});
    }
    CHECK(kind_of([] { build_torus(1); }) == ErrorKind::invalid_parameter);
}

TEST_CASE("torus faces are closed quadrilateral walks") {
    const auto c = build_torus(5);
    for (const auto& f : c.faces) {
        REQUIRE(f.edges.size() == 4);
        for (std::size_t k = 0; k < 4; ++k) {
            const auto& e = c.edges[f.edges[k]];
            const int u = f.vertices[k], v = f.vertices[(k + 1) % 4];
            CHECK(((e.a == u && e.b == v) || (e.a == v && e.b == u)));
        }
    }
    for (int e = 0; e < c.num_edges(); ++e) CHECK(count_faces_on_edge(c, e) == 2);
}

TEST_CASE("punching a hole") {
    const auto t = build_torus(8);
    const auto h = punch_square_hole(t, torus_vertex(8, 2, 2), 2);
    REQUIRE(h.boundaries.size() == 1);
    CHECK(h.boundaries[0].size() == 8);
    CHECK(h.num_faces() == t.num_faces() - 4);
    CHECK(h.euler_characteristic() == -1);
    CHECK(is_connected(h));
    CHECK(validate(h).ok);
    for (int e : h.boundaries[0].edges) CHECK(count_faces_on_edge(h, e) == 1);
    CHECK(kind_of([&] { punch_square_hole(h, torus_vertex(8, 2, 2), 2); }) == ErrorKind::surgery_conflict);
}

TEST_CASE("sewing two punctured tori") {
    auto one = punch_square_hole(build_torus(6), 0, 2);
    const auto two = disjoint_union(one, one);
    REQUIRE(two.boundaries.size() == 2);
    const auto s0 = sew_boundaries(two, 0, 1, 0);
    const auto s3 = sew_boundaries(two, 0, 1, 3);
    for (const auto* s : {&s0, &s3}) {
        const auto r = validate(*s);
        CHECK(r.ok);
        CHECK(r.closed);
        CHECK(r.connected);
        CHECK(r.orientable);
        CHECK(r.euler == -2);
    }
    CHECK(s0.num_vertices == s3.num_vertices);
    CHECK(s0.num_edges() == s3.num_edges());
    CHECK(s0.num_faces() == s3.num_faces());
    CHECK(kind_of([&] { sew_boundaries(two, 0, 0, 0); }) == ErrorKind::self_sew_unsupported);

    const auto a = punch_square_hole(build_torus(8), 0, 2);
    const auto b = punch_square_hole(build_torus(8), 0, 3);
    CHECK(kind_of([&] { sew_boundaries(disjoint_union(a, b), 0, 1, 0); }) == ErrorKind::length_mismatch);
}

TEST_CASE("sew image is head to tail") {
    const auto img = sew_image(8, 3, false);
    REQUIRE(img.size() == 8);
    for (int j = 0; j < 8; ++j) CHECK(img[j] == ((3 - j) % 8 + 8) % 8);
    const auto rev = sew_image(8, 3, true);
    CHECK(std::set<int>(rev.begin(), rev.end()).size() == 8);
    CHECK(rev != img);
}

TEST_CASE("joining two tori") {
    CHECK(join_side(6) == 8);
    CHECK(join_side(12) == 14);
    for (int L : {4, 6, 8, 12}) {
        const auto c = join_two_tori(L);
        const int Lp = join_side(L);
        const auto r = validate(c);
        CHECK(r.ok);
        CHECK(r.closed);
        CHECK(r.euler == -2);
        // two L' tori minus the (L'/2)^2 holes, seams shared
        CHECK(c.num_edges() == 3 * Lp * Lp);
    }
    // near 4L^2 once the even rounding of L' is small
    const double ratio12 = join_two_tori(12).num_edges() / (4.0 * 144);
    CHECK(ratio12 == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("handled surface census") {
    SUBCASE("one handle on an 8 x 8 base") {
        auto bp = blueprint(8, 1);
        bp.base_side = 8;
        const auto c = build_handled_surface(bp);
        const auto r = validate(c);
        CHECK(r.ok);
        CHECK(r.euler == -2);
        CHECK(r.valence_histogram.at(5) == 8);
        CHECK(r.handles == 1);
    }
    for (int N : {2, 4, 8}) {
        CAPTURE(N);
        const int L = 8;
        const auto c = build_handled_surface(blueprint(L, N));
        const auto r = validate(c);
        CHECK(r.ok);
        CHECK(r.closed);
        CHECK(r.euler == -2 * N);
        CHECK(r.valence_histogram.at(5) == 8 * N);
        CHECK(r.valence_histogram.size() == 2);
        CHECK(r.valence_histogram.at(4) == r.vertices - 8 * N);
        CHECK(r.edges >= N * L * L);
        CHECK(r.edges <= 4 * N * L * L);
        const double density = 8.0 * N / r.vertices;
        CHECK(density >= 4.0 / (L * L));
        CHECK(density <= 16.0 / (L * L));
    }
}

TEST_CASE("handled surface rejects bad blueprints") {
    CHECK(kind_of([] { build_handled_surface(blueprint(6, 1)); }) == ErrorKind::invalid_parameter);
    CHECK(kind_of([] { build_handled_surface(blueprint(8, 0)); }) == ErrorKind::invalid_parameter);
    auto dense = blueprint(8, 8);
    dense.base_side = 8;
    CHECK(kind_of([&] { build_handled_surface(dense); }) == ErrorKind::blueprint_too_dense);
}

TEST_CASE("handled surface is deterministic") {
    const auto a = build_handled_surface(blueprint(8, 4, 9));
    const auto b = build_handled_surface(blueprint(8, 4, 9));
    CHECK(write_surface(a) == write_surface(b));
}

TEST_CASE("cutting") {
    SUBCASE("torus along a w-loop gives an annulus") {
        const auto t = build_torus(4);
        REQUIRE(!t.marked_loops.empty());
        const auto cut = cut_along_cycle(t, BinaryChain(32, t.marked_loops[0].edges));
        const auto r = validate(cut.complex);
        CHECK(r.ok);
        CHECK(r.connected);
        CHECK(r.euler == 0);
        CHECK(r.boundary_lengths == std::vector<int>{4, 4});
    }
    SUBCASE("contractible loop is separating") {
        const auto t = build_torus(4);
        CHECK(kind_of([&] { cut_along_cycle(t, BinaryChain(32, t.faces[0].edges)); }) == ErrorKind::separating_cut);
    }
    SUBCASE("non-simple loop") {
        const auto t = build_torus(4);
        BinaryChain figure8(32, t.faces[0].edges);
        figure8 += BinaryChain(32, t.faces[5].edges);  // shares a single corner
        CHECK(kind_of([&] { cut_along_cycle(t, figure8); }) == ErrorKind::not_simple);
    }
    SUBCASE("handle seam on a two handle surface") {
        const auto c = build_handled_surface(blueprint(8, 2));
        const auto& seam = c.handles[0].seam;
        const auto cut = cut_along_cycle(c, BinaryChain(static_cast<std::size_t>(c.num_edges()), seam.edges));
        CHECK(is_connected(cut.complex));
        CHECK(cut.complex.boundaries.size() == c.boundaries.size() + 2);
        CHECK(cut.complex.euler_characteristic() == c.euler_characteristic());
        CHECK(cut.complex.boundaries[cut.cut.boundary_a].size() == seam.size());
        CHECK(cut.complex.boundaries[cut.cut.boundary_b].size() == seam.size());
    }
}

TEST_CASE("random re-pairing") {
    SUBCASE("single handle") {
        const auto c = build_handled_surface(blueprint(8, 1));
        const auto rep = repair_handles(c, 5);
        REQUIRE(rep.pairs.size() == 1);
        CHECK(validate(rep.complex).ok);
        CHECK(rep.complex.euler_characteristic() == c.euler_characteristic());
    }
    SUBCASE("seeds change the matching, not the topology") {
        const auto c = build_handled_surface(blueprint(8, 8));
        const auto a = repair_handles(c, 1);
        const auto b = repair_handles(c, 2);
        CHECK(a.pairs != b.pairs);
        for (const auto* r : {&a, &b}) {
            const auto v = validate(r->complex);
            CHECK(v.ok);
            CHECK(v.closed);
            CHECK(v.euler == c.euler_characteristic());
            CHECK(r->complex.handles.size() == 8);
        }
    }
    SUBCASE("fixed seed is byte identical") {
        const auto c = build_handled_surface(blueprint(8, 4));
        CHECK(write_surface(repair_handles(c, 3).complex) == write_surface(repair_handles(c, 3).complex));
    }
    SUBCASE("odd circle count") {
        const auto t = build_torus(8);
        const auto h = punch_square_holes(t, std::vector<HoleSpec>{{0, 2}, {torus_vertex(8, 4, 4), 2}});
        const auto three = disjoint_union(h, punch_square_hole(build_torus(8), 0, 2));
        CHECK(kind_of([&] { random_repairing(three, std::vector<int>{0, 1, 2}, 1); }) == ErrorKind::repair_infeasible);
    }
}

TEST_CASE("symmetrize") {
    SUBCASE("one handle") {
        const auto bp = blueprint(8, 1);
        const auto rep = repair_handles(build_handled_surface(bp), derive_seed(1, 1));
        const auto sym = symmetrize(rep.complex, bp, derive_seed(1, 2));
        CHECK(validate(sym.complex).ok);
        CHECK(sym.complex.euler_characteristic() == -2);
    }
    SUBCASE("eight handles") {
        const auto bp = blueprint(8, 8);
        const auto c = build_handled_surface(bp);
        const auto rep = repair_handles(c, derive_seed(1, 1));
        const auto sym = symmetrize(rep.complex, bp, derive_seed(1, 2));
        const auto r = validate(sym.complex);
        CHECK(r.ok);
        CHECK(r.closed);
        CHECK(r.connected);
        CHECK(r.euler == c.euler_characteristic());
        CHECK(sym.used_handles.size() * 2 >= 8);
        std::set<int> ids;
        for (const auto& h : rep.complex.handles) ids.insert(h.id);
        for (const auto& s : sym.skipped) CHECK(ids.count(s.handle) == 1);
        for (int h : sym.used_handles) CHECK(ids.count(h) == 1);
        CHECK(sym.used_handles.size() + sym.skipped.size() == ids.size());
    }
}

TEST_CASE("dual complex") {
    const auto t = build_torus(4);
    const auto d = dualize(t);
    CHECK(d.num_vertices == 16);
    CHECK(d.num_edges() == 32);
    CHECK(d.num_faces() == 16);
    CHECK(validate(d).ok);
    const auto dd = dualize(d);
    CHECK(dd.num_vertices == t.num_vertices);
    CHECK(dd.num_faces() == t.num_faces());
    for (int e = 0; e < t.num_edges(); ++e) {
        const auto& x = t.edges[e];
        const auto& y = dd.edges[e];
        CHECK(std::minmax(x.a, x.b) == std::minmax(y.a, y.b));
    }
    const auto h = build_handled_surface(blueprint(8, 2));
    CHECK(dualize(h).euler_characteristic() == h.euler_characteristic());
    CHECK(validate(dualize(h)).ok);
    CHECK(kind_of([&] { dualize(punch_square_hole(t, 0, 1)); }) == ErrorKind::dual_undefined);
}

TEST_CASE("validation flags a dangling edge") {
    auto t = build_torus(4);
    t.edges.push_back({0, 5});
    t.edge_region.push_back(kNoRegion);
    const auto r = validate(t);
    CHECK_FALSE(r.ok);
    CHECK(std::find(r.bad_edges.begin(), r.bad_edges.end(), 32) != r.bad_edges.end());
}

TEST_CASE("random surgery sequences keep the invariants") {
    Rng rng(2026);
    int refused = 0;
    for (int trial = 0; trial < 50; ++trial) {
        CAPTURE(trial);
        const int L = 6 + static_cast<int>(uniform_below(rng, 5));
        const int side = 1 + static_cast<int>(uniform_below(rng, 2));
        auto c = build_torus(L);
        int holes = 0;
        // a second torus or a second hole on the same one
        const bool two_tori = uniform_below(rng, 2) == 1;
        if (two_tori) c = disjoint_union(c, build_torus(L));
        while (holes < 2) {
            const int pool = two_tori ? L * L : c.num_vertices;
            int anchor = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(pool)));
            if (two_tori && holes == 0) anchor += L * L;  // higher ids first, compaction keeps the rest
            try {
                c = punch_square_hole(c, anchor, side);
                ++holes;
            } catch (const Error& e) {
                REQUIRE(e.kind() == ErrorKind::surgery_conflict);
            }
        }
        const int chi_before = c.euler_characteristic() + 2;  // closed value before punching
        const int offset = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(4 * side)));
        CellComplex sewn;
        std::vector<Walk> seams;
        try {
            const std::vector<SewSpec> spec{{0, 1, sew_image(4 * side, offset, false)}};
            sewn = sew_many(c, spec, &seams);
        } catch (const Error& e) {
            // adjacent holes can pinch; that is the only legal refusal
            REQUIRE(e.kind() == ErrorKind::surgery_conflict);
            ++refused;
            continue;
        }
        const auto r = validate(sewn);
        CAPTURE(r.to_text());
        REQUIRE(r.ok);
        CHECK(r.euler % 2 == 0);
        CHECK(r.euler == chi_before - 2);
        // cut the new seam and sew it back
        REQUIRE(seams.size() == 1);
        const auto& seam = seams[0];
        const auto cut = cut_along_cycle(sewn, BinaryChain(static_cast<std::size_t>(sewn.num_edges()), seam.edges), true);
        CellComplex back;
        try {
            back = sew_boundaries(cut.complex, cut.cut.boundary_a, cut.cut.boundary_b,
                                  static_cast<int>(uniform_below(rng, seam.size())));
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::surgery_conflict);
            ++refused;
            continue;
        }
        const auto rb = validate(back);
        CHECK(rb.ok);
        CHECK(rb.euler == r.euler);
    }
    CHECK(refused < 25);
}

TEST_CASE("surface file round trip") {
    const auto c = repair_handles(build_handled_surface(blueprint(8, 2)), 4).complex;
    const auto text = write_surface(c);
    const auto back = read_surface(text);
    CHECK(write_surface(back) == text);
    CHECK(back.edges == c.edges);
    CHECK(back.faces == c.faces);
    CHECK(back.handles == c.handles);
    CHECK(surface_hash(back) == surface_hash(c));

    auto bumped = text;
    const auto pos = bumped.find("\"1.0\"");
    REQUIRE(pos != std::string::npos);
    bumped.replace(pos, 5, "\"2.0\"");
    CHECK(kind_of([&] { read_surface(bumped); }) == ErrorKind::format_error);
    CHECK(kind_of([] { read_surface("{not json"); }) == ErrorKind::format_error);
    CHECK(kind_of([] { load_surface("/nonexistent/surface.json"); }) == ErrorKind::io_error);
}
