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
#include <cmath>
#include <limits>
#include <numeric>

#include "highgenus/decoding.hpp"
#include "highgenus/error.hpp"
#include "highgenus/matching.hpp"
#include "highgenus/simulation.hpp"
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

int torus_distance(int L, int u, int v) {
    const int dx = std::abs(u % L - v % L), dy = std::abs(u / L - v / L);
    return std::min(dx, L - dx) + std::min(dy, L - dy);
}

// minimum over all perfect pairings, by recursion on the first unpaired node
long long best_pairing(const std::vector<std::vector<long long>>& w, std::vector<char>& used) {
    const int n = static_cast<int>(w.size());
    int i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) return 0;
    used[i] = 1;
    long long best = std::numeric_limits<long long>::max();
    for (int j = i + 1; j < n; ++j) {
        if (used[j]) continue;
        used[j] = 1;
        best = std::min(best, w[i][j] + best_pairing(w, used));
        used[j] = 0;
    }
    used[i] = 0;
    return best;
}

long long best_pairing(const std::vector<std::vector<long long>>& w) {
    std::vector<char> used(w.size(), 0);
    return best_pairing(w, used);
}

// maximum-weight matching by subset recursion; cardinality first if asked
std::pair<long long, long long> best_matching(int n, const std::vector<std::vector<long long>>& w, int mask,
                                              bool max_card) {
    int i = 0;
    while (i < n && !(mask >> i & 1)) ++i;
    if (i == n) return {0, 0};
    const int rest = mask & ~(1 << i);
    auto best = best_matching(n, w, rest, max_card);  // i stays single
    for (int j = i + 1; j < n; ++j) {
        if (!(rest >> j & 1) || w[i][j] < 0) continue;
        auto sub = best_matching(n, w, rest & ~(1 << j), max_card);
        sub.first += 1;
        sub.second += w[i][j];
        const bool better = max_card ? sub > best : sub.second > best.second;
        if (better) best = sub;
    }
    return best;
}

std::vector<int> random_defects(Rng& rng, int nodes, int count) {
    std::vector<int> all(static_cast<std::size_t>(nodes));
    std::iota(all.begin(), all.end(), 0);
    for (int i = 0; i < count; ++i)
        std::swap(all[i], all[i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(nodes - i)))]);
    all.resize(static_cast<std::size_t>(count));
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

TEST_CASE("iid sampling") {
    const auto t = build_torus(16);
    const auto zero = sample_iid_error(t, 0.0, 1);
    CHECK(zero.x_chain.empty());
    CHECK(zero.z_chain.empty());
    const auto one = sample_iid_error(t, 1.0, 1);
    CHECK(one.x_chain.weight() == 512);
    CHECK(one.z_chain.weight() == 512);
    CHECK(sample_iid_error(t, 0.3, 9).x_chain == sample_iid_error(t, 0.3, 9).x_chain);
    CHECK(kind_of([&] { sample_iid_error(t, 1.5, 1); }) == ErrorKind::invalid_parameter);
    CHECK(kind_of([&] { sample_iid_error(t, -0.1, 1); }) == ErrorKind::invalid_parameter);

    Rng rng(11);
    const int n = 10000;
    double sx = 0, sz = 0;
    for (int i = 0; i < n; ++i) {
        const auto e = sample_iid_error(t, 0.1, rng);
        sx += static_cast<double>(e.x_chain.weight());
        sz += static_cast<double>(e.z_chain.weight());
    }
    const double band = 3 * std::sqrt(512 * 0.1 * 0.9 / n);
    CHECK(std::abs(sx / n - 51.2) <= band);
    CHECK(std::abs(sz / n - 51.2) <= band);
}

TEST_CASE("syndromes") {
    const int L = 6;
    const auto t = build_torus(L);
    const auto E = static_cast<std::size_t>(t.num_edges());
    // horizontal edge 2*id joins id and id + 1
    CHECK(vertex_syndrome(t, BinaryChain(E, {2 * 7})).defects == std::vector<int>{7, 8});
    CHECK(vertex_syndrome(t, BinaryChain(E, t.faces[3].edges)).defects.empty());
    CHECK(vertex_syndrome(t, BinaryChain(E, t.marked_loops[0].edges)).defects.empty());
    CHECK(vertex_syndrome(t, BinaryChain(E, {2 * 7, 2 * 8, 2 * 9})).defects == std::vector<int>{7, 10});
    const auto fs = face_syndrome(t, BinaryChain(E, {2 * 7}));
    CHECK(fs.defects.size() == 2);
    // a dual loop: every vertical edge of one row
    BinaryChain row(E);
    for (int x = 0; x < L; ++x) row.toggle(2 * (2 * L + x) + 1);
    CHECK(face_syndrome(t, row).defects.empty());

    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto e = sample_iid_error(t, 0.2, rng);
        const auto s = syndrome_of(t, e);
        CHECK(s.x.defects.size() % 2 == 0);
        CHECK(s.z.defects.size() % 2 == 0);
        CHECK(s.x == syndrome_in(t, Sector::primal, e.x_chain));
        CHECK(s.z == syndrome_in(t, Sector::dual, e.z_chain));
    }
}

TEST_CASE("blossom against exhaustive matching") {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 9));
        std::vector<std::vector<long long>> w(n, std::vector<long long>(n, -1));
        std::vector<MatchEdge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (uniform_below(rng, 3)) {
                    const long long x = static_cast<long long>(uniform_below(rng, 20));
                    w[i][j] = w[j][i] = x;
                    edges.push_back({i, j, x});
                }
        for (bool max_card : {false, true}) {
            const auto mate = max_weight_matching(n, edges, max_card);
            long long weight = 0, pairs = 0;
            for (int v = 0; v < n; ++v) {
                if (mate[v] < 0) continue;
                REQUIRE(mate[mate[v]] == v);
                REQUIRE(w[v][mate[v]] >= 0);
                if (v < mate[v]) {
                    weight += w[v][mate[v]];
                    ++pairs;
                }
            }
            const auto best = best_matching(n, w, (1 << n) - 1, max_card);
            CAPTURE(trial);
            if (max_card) CHECK(pairs == best.first);
            CHECK(weight == best.second);
        }
    }
}

TEST_CASE("minimum weight perfect matching") {
    Rng rng(6);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 * (1 + static_cast<int>(uniform_below(rng, 5)));
        std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) w[i][j] = w[j][i] = static_cast<long long>(uniform_below(rng, 30));
        const auto mate = min_weight_perfect_matching(w);
        for (int v = 0; v < n; ++v) REQUIRE(mate[mate[v]] == v);
        CHECK(matching_cost(w, mate) == best_pairing(w));
    }
    CHECK(kind_of([] { min_weight_perfect_matching({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}); }) == ErrorKind::invalid_syndrome);
}

TEST_CASE("matching decoder") {
    const int L = 5;
    const auto t = build_torus(L);
    const auto E = static_cast<std::size_t>(t.num_edges());
    const DecodingGraph g(t, Sector::primal);
    SUBCASE("small cases") {
        const auto adj = decode_mwpm(g, Syndrome{{7, 8}});
        CHECK(adj.chain == BinaryChain(E, {14}));
        CHECK(adj.matching_weight == 1);
        CHECK(decode_mwpm(g, Syndrome{}).chain.empty());
        CHECK(kind_of([&] { decode_mwpm(g, Syndrome{{1, 2, 3}}); }) == ErrorKind::invalid_syndrome);
        CHECK(kind_of([&] { decode_greedy(g, Syndrome{{1}}); }) == ErrorKind::invalid_syndrome);
    }
    SUBCASE("weights match the exhaustive pairing on the torus") {
        Rng rng(8);
        for (int trial = 0; trial < 200; ++trial) {
            const int count = 2 * (1 + static_cast<int>(uniform_below(rng, 5)));
            const Syndrome s{random_defects(rng, L * L, count)};
            std::vector<std::vector<long long>> w(count, std::vector<long long>(count, 0));
            for (int i = 0; i < count; ++i)
                for (int j = 0; j < count; ++j) w[i][j] = torus_distance(L, s.defects[i], s.defects[j]);
            const auto corr = decode_mwpm(g, s);
            CHECK(corr.matching_weight == best_pairing(w));
            CHECK(corr.chain.weight() <= static_cast<std::size_t>(corr.matching_weight));
            CHECK(vertex_syndrome(t, corr.chain) == s);
            const auto greedy = decode_greedy(g, s);
            CHECK(vertex_syndrome(t, greedy.chain) == s);
            CHECK(greedy.matching_weight >= corr.matching_weight);
        }
    }
    SUBCASE("dual sector") {
        const DecodingGraph d(t, Sector::dual);
        Rng rng(9);
        for (int trial = 0; trial < 100; ++trial) {
            const auto e = sample_iid_error(t, 0.1, rng);
            const auto s = face_syndrome(t, e.z_chain);
            CHECK(face_syndrome(t, decode_mwpm(d, s).chain) == s);
            CHECK(face_syndrome(t, decode_greedy(d, s).chain) == s);
        }
    }
}

TEST_CASE("greedy decoder") {
    const auto t = build_torus(20);
    const DecodingGraph g(t, Sector::primal);
    SUBCASE("two defects agree with matching") {
        Rng rng(4);
        for (int trial = 0; trial < 50; ++trial) {
            const Syndrome s{random_defects(rng, 400, 2)};
            CHECK(decode_greedy(g, s).chain == decode_mwpm(g, s).chain);
        }
    }
    SUBCASE("search finds a four defect separation") {
        Rng rng(12);
        bool found = false;
        for (int trial = 0; trial < 2000 && !found; ++trial) {
            // four defects on one row, spread over a short stretch
            std::vector<int> xs = random_defects(rng, 10, 4);
            Syndrome s;
            for (int x : xs) s.defects.push_back(3 * 20 + x);
            const auto gw = decode_greedy(g, s).matching_weight;
            const auto mw = decode_mwpm(g, s).matching_weight;
            CHECK(gw >= mw);
            if (gw > mw) {
                found = true;
                MESSAGE("greedy " << gw << " vs matching " << mw << " at x = " << xs[0] << "," << xs[1] << ","
                                  << xs[2] << "," << xs[3]);
            }
        }
        CHECK(found);
        // the instance 0, 3, 5, 8: greedy pairs 3-5 first and pays 2 + 8
        const Syndrome fixed{{60, 63, 65, 68}};
        CHECK(decode_greedy(g, fixed).matching_weight == 10);
        CHECK(decode_mwpm(g, fixed).matching_weight == 6);
    }
}

TEST_CASE("maximum likelihood oracle") {
    const auto t = build_torus(3);
    const auto code = css_from_complex(t);
    const auto E = static_cast<std::size_t>(t.num_edges());
    SUBCASE("single edge error is attributed to the trivial class") {
        for (int e = 0; e < t.num_edges(); ++e) {
            const BinaryChain err(E, {e});
            const auto ml = decode_ml_bruteforce(t, code, Sector::primal, vertex_syndrome(t, err), 0.05);
            CHECK(vertex_syndrome(t, ml.correction) == vertex_syndrome(t, err));
            CHECK(residual_class(t, code, Sector::primal, err, ml.correction).success);
        }
    }
    SUBCASE("p = 1/2 is degenerate") {
        const auto ml = decode_ml_bruteforce(t, code, Sector::primal, Syndrome{{0, 1}}, 0.5);
        REQUIRE(ml.class_probability.size() == 4);
        for (double q : ml.class_probability) CHECK(q == doctest::Approx(ml.class_probability[0]));
    }
    SUBCASE("probabilities sum to the syndrome probability") {
        // brute force over all 2^18 errors with syndrome {0, 1}
        const double p = 0.1;
        const Syndrome s{{0, 1}};
        double direct = 0.0;
        for (std::uint32_t mask = 0; mask < (1u << 18); ++mask) {
            BinaryChain err(E);
            for (int e = 0; e < 18; ++e)
                if (mask >> e & 1) err.toggle(e);
            if (vertex_syndrome(t, err) == s)
                direct += std::pow(p, err.weight()) * std::pow(1 - p, 18.0 - static_cast<double>(err.weight()));
        }
        const auto ml = decode_ml_bruteforce(t, code, Sector::primal, s, p);
        const double total = std::accumulate(ml.class_probability.begin(), ml.class_probability.end(), 0.0);
        CHECK(total == doctest::Approx(direct).epsilon(1e-9));
    }
    SUBCASE("large instances are refused") {
        const auto big = build_torus(6);
        CHECK(kind_of([&] { decode_ml_bruteforce(big, css_from_complex(big), Sector::primal, Syndrome{}, 0.1); }) ==
              ErrorKind::oracle_infeasible);
    }
}

TEST_CASE("residual classification") {
    const auto c = build_handled_surface([] {
        Blueprint bp;
        bp.L = 8;
        bp.N = 2;
        return bp;
    }());
    const auto code = css_from_complex(c);
    const auto E = static_cast<std::size_t>(c.num_edges());
    SUBCASE("exact correction succeeds") {
        const BinaryChain e(E, {3, 17, 40});
        CHECK(residual_class(c, code, Sector::primal, e, e).success);
        CHECK(residual_class(c, code, Sector::dual, e, e).success);
    }
    SUBCASE("a handle seam flips exactly one qubit") {
        const BinaryChain seam(E, c.handles[0].seam.edges);
        const auto out = residual_class(c, code, Sector::primal, seam, BinaryChain(E));
        CHECK_FALSE(out.success);
        CHECK(out.flipped.size() == 1);
        for (int j = 0; j < code.k; ++j) {
            const auto single = residual_class(c, code, Sector::primal, code.logical_pairs[j].z, BinaryChain(E));
            CHECK(single.flipped == std::vector<int>{j});
            const auto dual = residual_class(c, code, Sector::dual, code.logical_pairs[j].x, BinaryChain(E));
            CHECK(dual.flipped == std::vector<int>{j});
        }
    }
    SUBCASE("stabilizers do not change the outcome") {
        Rng rng(21);
        const DecodingGraph gp(c, Sector::primal), gd(c, Sector::dual);
        for (int trial = 0; trial < 200; ++trial) {
            const auto e = sample_iid_error(c, 0.08, rng);
            const auto cx = decode_mwpm(gp, vertex_syndrome(c, e.x_chain)).chain;
            const auto cz = decode_mwpm(gd, face_syndrome(c, e.z_chain)).chain;
            const auto ox = residual_class(c, code, Sector::primal, e.x_chain, cx);
            const auto oz = residual_class(c, code, Sector::dual, e.z_chain, cz);
            const int f = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(c.num_faces())));
            const int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(c.num_vertices)));
            CHECK(residual_class(c, code, Sector::primal, e.x_chain, cx + code.face_stabilizers[f]).flipped == ox.flipped);
            CHECK(residual_class(c, code, Sector::primal, e.x_chain + code.face_stabilizers[f], cx).flipped == ox.flipped);
            CHECK(residual_class(c, code, Sector::dual, e.z_chain, cz + code.vertex_stabilizers[v]).flipped == oz.flipped);
        }
    }
    SUBCASE("mismatched correction") {
        CHECK(kind_of([&] { residual_class(c, code, Sector::primal, BinaryChain(E, {0}), BinaryChain(E)); }) ==
              ErrorKind::inconsistent_correction);
    }
}

TEST_CASE("wilson interval") {
    const auto iv = wilson_interval(10, 100);
    const double z = 1.959963984540054, n = 100, ph = 0.1;
    const double centre = (ph + z * z / (2 * n)) / (1 + z * z / n);
    const double half = z / (1 + z * z / n) * std::sqrt(ph * (1 - ph) / n + z * z / (4 * n * n));
    CHECK(iv.lo == doctest::Approx(centre - half));
    CHECK(iv.hi == doctest::Approx(centre + half));
    CHECK(wilson_interval(0, 50).lo == doctest::Approx(0.0));
    CHECK(wilson_interval(50, 50).hi == doctest::Approx(1.0));
}

TEST_CASE("trial runner") {
    const auto t = build_torus(5);
    const auto code = css_from_complex(t);
    SUBCASE("no noise, no failures") {
        const auto s = run_trials(t, code, 0.0, 500, DecoderKind::mwpm, 1);
        CHECK(s.failures == 0);
        CHECK(s.epsilon() == 0.0);
    }
    SUBCASE("deterministic and thread independent") {
        TrialOptions one{1, true}, three{3, true};
        const auto a = run_trials(t, code, 0.08, 2000, DecoderKind::mwpm, 42, one);
        const auto b = run_trials(t, code, 0.08, 2000, DecoderKind::mwpm, 42, three);
        CHECK(a.failures == b.failures);
        CHECK(a.failures_x == b.failures_x);
        CHECK(a.failures_z == b.failures_z);
        CHECK(a.qubit_flips == b.qubit_flips);
        REQUIRE(a.log.size() == 2000);
        REQUIRE(b.log.size() == 2000);
        for (std::size_t i = 0; i < a.log.size(); ++i) {
            CHECK(a.log[i].trial == static_cast<long long>(i));
            CHECK(a.log[i].success == b.log[i].success);
            CHECK(a.log[i].defects == b.log[i].defects);
        }
        const auto iv = a.interval();
        CHECK(iv.lo <= a.epsilon());
        CHECK(a.epsilon() <= iv.hi);
        CHECK(a.failures <= a.trials);
        CHECK(a.failures >= std::max(a.failures_x, a.failures_z));
    }
    SUBCASE("trial i replays alone") {
        const auto all = run_trials(t, code, 0.1, 50, DecoderKind::mwpm, 7, {1, true});
        for (int i : {0, 13, 49}) {
            const auto e = sample_iid_error(t, 0.1, derive_seed(7, static_cast<std::uint64_t>(i)));
            const auto s = syndrome_of(t, e);
            CHECK(all.log[i].defects == static_cast<int>(s.x.defects.size() + s.z.defects.size()));
        }
    }
    SUBCASE("decoder kinds") {
        const auto g = run_trials(t, code, 0.05, 1000, DecoderKind::greedy, 3, {1, false});
        CHECK(g.trials == 1000);
        const auto t3 = build_torus(3);
        const auto ml = run_trials(t3, css_from_complex(t3), 0.05, 200, DecoderKind::ml, 3, {1, false});
        CHECK(ml.trials == 200);
        CHECK(decoder_from_string(to_string(DecoderKind::greedy)) == DecoderKind::greedy);
        CHECK(kind_of([] { decoder_from_string("union-find"); }) == ErrorKind::invalid_parameter);
    }
    SUBCASE("larger tori fail less") {
        const auto s3 = run_trials(build_torus(3), css_from_complex(build_torus(3)), 0.05, 20000, DecoderKind::mwpm, 5);
        const auto s7 = run_trials(build_torus(7), css_from_complex(build_torus(7)), 0.05, 20000, DecoderKind::mwpm, 5);
        CHECK(s7.interval().hi < s3.interval().lo);
    }
}

TEST_CASE("per handle attribution") {
    Blueprint bp;
    bp.L = 8;
    bp.N = 2;
    const auto c = build_handled_surface(bp);
    const auto code = css_from_complex(c);
    const auto s = run_trials(c, code, 0.06, 3000, DecoderKind::mwpm, 2, {1, false});
    CHECK(s.handle_qubits == code.k - 2);
    long long flips = 0;
    for (auto f : s.qubit_flips) flips += f;
    CHECK(flips >= s.failures);
    CHECK(s.handle_failures + s.base_failures >= s.failures);
    CHECK(s.per_handle_epsilon() == doctest::Approx(double(s.handle_failures) / s.trials / s.handle_qubits));
}

TEST_CASE("scaling fit") {
    SUBCASE("synthetic round trip") {
        std::vector<ScalingPoint> pts;
        for (double d : {3.0, 5.0, 7.0})
            for (double p : {0.01, 0.02, 0.04}) pts.push_back({d, p, std::pow(p / 0.1, 1.0 * d)});
        const auto fit = fit_scaling(pts, 1.0);
        CHECK(fit.K == doctest::Approx(1.0).epsilon(0.02));
        CHECK(fit.p_c == doctest::Approx(0.1).epsilon(0.02));
        CHECK(fit.rms_residual < 1e-9);
        CHECK(fit.monotone_in_p);
    }
    SUBCASE("degenerate designs") {
        std::vector<ScalingPoint> same_d{{3, 0.01, 1e-3}, {3, 0.02, 1e-2}, {3, 0.03, 3e-2}};
        CHECK(kind_of([&] { fit_scaling(same_d, 1.0); }) == ErrorKind::fit_underdetermined);
        std::vector<ScalingPoint> same_p{{3, 0.01, 1e-3}, {5, 0.01, 1e-4}, {7, 0.01, 1e-5}};
        CHECK(kind_of([&] { fit_scaling(same_p, 1.0); }) == ErrorKind::fit_underdetermined);
    }
    SUBCASE("non-monotone data is flagged") {
        std::vector<ScalingPoint> pts;
        for (double d : {3.0, 5.0, 7.0})
            for (double p : {0.01, 0.02, 0.04}) pts.push_back({d, p, std::pow(p / 0.1, d)});
        pts[1].epsilon = pts[0].epsilon / 2;
        CHECK_FALSE(fit_scaling(pts, 1.0).monotone_in_p);
    }
    SUBCASE("torus data") {
        std::vector<ScalingPoint> pts;
        for (int L : {3, 5, 7}) {
            const auto t = build_torus(L);
            const auto code = css_from_complex(t);
            for (double p : {0.02, 0.03, 0.05}) {
                const auto s = run_trials(t, code, p, 20000, DecoderKind::mwpm, 17);
                pts.push_back({double(L), p, s.epsilon()});
            }
        }
        const auto fit = fit_scaling(pts, 1.0);
        MESSAGE("torus fit K = " << fit.K << ", p_c = " << fit.p_c << ", rms = " << fit.rms_residual);
        CHECK(fit.monotone_in_p);
        CHECK(fit.p_c > 0.05);
        CHECK(fit.p_c < 0.15);
    }
}
