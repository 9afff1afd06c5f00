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
#include <queue>

#include "highgenus/error.hpp"
#include "highgenus/geometry.hpp"
#include "highgenus/surgery.hpp"

using namespace hg;

namespace {

std::vector<int> distances(const CellComplex& c, int root) {
    const auto adj = adjacency(c);
    std::vector<int> d(static_cast<std::size_t>(c.num_vertices), -1);
    std::queue<int> q;
    d[root] = 0;
    q.push(root);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (auto [w, e] : adj[v])
            if (d[w] < 0) {
                d[w] = d[v] + 1;
                q.push(w);
            }
    }
    return d;
}

// direct transcription of the recursion, summing over all earlier kinks
std::vector<double> recursion_by_sum(double rho, int r_max) {
    std::vector<double> c(static_cast<std::size_t>(r_max) + 1, 0.0);
    for (int r = 0; r <= r_max; ++r) {
        double s = 0.0;
        for (int k = 0; k <= r; ++k) s += c[k] * (r - k);
        c[r] = 4.0 * r + rho * s;
    }
    return c;
}

// walks counted by enumeration, for tiny radii
long long walks_by_enumeration(const Adjacency& adj, int v, int r) {
    if (r == 0) return 1;
    long long n = 0;
    for (auto [w, e] : adj[v]) n += walks_by_enumeration(adj, w, r - 1);
    return n;
}

Blueprint blueprint(int L, int N) {
    Blueprint bp;
    bp.L = L;
    bp.N = N;
    bp.seed = 1;
    return bp;
}

}  // namespace

TEST_CASE("flat circle growth") {
    const auto t = build_torus(40);
    const auto g = measure_circle_growth(t, 0, 15);
    REQUIRE(g.perimeter.size() == 16);
    CHECK(g.perimeter[0] == 1);
    for (int r = 1; r <= 15; ++r) {
        CHECK(g.perimeter[r] == 4 * r);
        CHECK(g.area[r] == 2LL * r * r + 2 * r + 1);
        CHECK(g.area[r] == g.area[r - 1] + g.perimeter[r]);
    }
}

TEST_CASE("one kink adds r - r_k") {
    const auto c = build_handled_surface(blueprint(32, 1));
    const auto val = valences(c);
    std::vector<int> kinks;
    for (int v = 0; v < c.num_vertices; ++v)
        if (val[v] == 5) kinks.push_back(v);
    REQUIRE(kinks.size() == 8);
    const auto from_kink = distances(c, kinks[0]);
    for (int rk : {0, 2, 3}) {
        CAPTURE(rk);
        // root at distance rk from the first kink, as far as possible from the rest
        int root = -1, gap = -1;
        for (int v = 0; v < c.num_vertices; ++v) {
            if (from_kink[v] != rk || (rk > 0 && val[v] != 4)) continue;
            const auto d = distances(c, v);
            int nearest = 1 << 30;
            for (std::size_t i = 1; i < kinks.size(); ++i) nearest = std::min(nearest, d[kinks[i]]);
            if (nearest > gap) {
                gap = nearest;
                root = v;
            }
        }
        REQUIRE(gap > rk + 4);
        const auto g = measure_circle_growth(c, root, gap);
        for (int r = 1; r <= gap; ++r) CHECK(g.perimeter[r] == 4 * r + std::max(0, r - rk));
    }
}

TEST_CASE("perimeter recursion") {
    const auto flat = solve_perimeter_recursion(0.0, 30);
    for (int r = 0; r <= 30; ++r) CHECK(flat[r] == doctest::Approx(4.0 * r));
    const auto flat_area = area_from_perimeter(flat);
    for (int r = 0; r <= 30; ++r) CHECK(flat_area[r] == doctest::Approx(2.0 * r * r + 2 * r + 1));

    for (double rho : {0.01, 0.125, 0.5}) {
        const auto fast = solve_perimeter_recursion(rho, 40);
        const auto slow = recursion_by_sum(rho, 40);
        CHECK(fast[1] == doctest::Approx(4.0));
        for (int r = 0; r <= 40; ++r) CHECK(fast[r] == doctest::Approx(slow[r]).epsilon(1e-12));
    }
    for (int L : {8, 16, 32}) {
        const auto c = solve_perimeter_recursion(8.0 / (L * L), 2 * L);
        double worst = 0.0;
        for (int r = 1; r <= 2 * L; ++r) worst = std::max(worst, std::abs(c[r] / closed_form_perimeter(L, r) - 1.0));
        CAPTURE(L);
        CHECK(worst <= 0.05);
    }
}

TEST_CASE("closed form perimeter") {
    CHECK(closed_form_perimeter(16, 1e-6) / 1e-6 == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(closed_form_perimeter(10, 10) / 10 == doctest::Approx(std::sqrt(2.0) * std::sinh(std::sqrt(8.0))));
    CHECK(closed_form_perimeter(10, 10) / 10 == doctest::Approx(11.93).epsilon(1e-3));
    double prev = 0.0, prev_step = 0.0;
    for (int r = 1; r <= 40; ++r) {
        const double v = closed_form_perimeter(8, r);
        CHECK(v > prev);
        CHECK(v - prev >= prev_step);
        prev_step = v - prev;
        prev = v;
    }
}

TEST_CASE("predicted minimal loop") {
    ScalingParams sp;
    sp.L = 16;
    for (int N : {64, 256, 1024}) {
        sp.N = N;
        const auto p = predicted_min_loop(sp);
        CHECK(p.reference == doctest::Approx(16 * std::log(N) / std::sqrt(8.0)));
        CAPTURE(N);
        CHECK(p.radius / (16 * std::log(N)) == doctest::Approx(1 / std::sqrt(8.0)).epsilon(0.2));
        // smallest radius meeting the area condition
        const auto a = area_from_perimeter(solve_perimeter_recursion(sp.resolved_rho(), p.radius));
        CHECK(a[p.radius] >= sp.alpha * 256.0 * N);
        CHECK(a[p.radius - 1] < sp.alpha * 256.0 * N);

        auto sym = sp;
        sym.symmetrized = true;
        CHECK(predicted_min_loop(sym).radius < p.radius);
        auto whole = sp;
        whole.alpha = 1.0;
        const int shift = predicted_min_loop(whole).radius - p.radius;
        CHECK(shift >= 0);
        CHECK(shift <= sp.L);
    }
    sp.N = 1;
    try {
        predicted_min_loop(sp);
        FAIL("expected undefined scaling");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::undefined_scaling);
    }
}

TEST_CASE("threshold factor product") {
    ScalingParams sp;
    sp.L = 16;
    sp.N = 256;
    SUBCASE("flat area gives factors near one") {
        const auto f = threshold_factor_product(sp, [](int r) { return 2.0 * r * r + 2.0 * r + 1.0; });
        CHECK(f.terms == static_cast<int>(std::floor(std::log(16 * std::log(256.0)) / std::log(3.0))));
        CHECK(f.value == doctest::Approx(1.0).epsilon(0.1));
        CHECK_FALSE(f.beta_warning);
    }
    SUBCASE("terms follow the stated formula") {
        const auto f = threshold_factor_product(sp);
        const auto a = area_from_perimeter(solve_perimeter_recursion(sp.resolved_rho(), 729));
        double product = 1.0;
        REQUIRE(f.terms_detail.size() == static_cast<std::size_t>(f.terms));
        for (const auto& t : f.terms_detail) {
            const double r = std::pow(3.0, t.k);
            CHECK(t.radius == static_cast<long long>(r));
            CHECK(t.area == doctest::Approx(a[static_cast<std::size_t>(r)]));
            const double expect = std::pow(2 * r * r / t.area, std::pow(1 / r, sp.beta));
            CHECK(t.factor == doctest::Approx(expect));
            product *= expect;
        }
        CHECK(f.value == doctest::Approx(product));
        // curved areas exceed 2 r^2, so every base is below one
        CHECK(f.value <= 1.0);
    }
    SUBCASE("empty product and beta flag") {
        ScalingParams tiny;
        tiny.L = 1;
        tiny.N = 2;  // L ln N < 3
        const auto f = threshold_factor_product(tiny);
        CHECK(f.empty_product);
        CHECK(f.value == 1.0);
        auto other = sp;
        other.beta = 1.0;
        CHECK(threshold_factor_product(other).beta_warning);
    }
}

TEST_CASE("threshold factor closed form") {
    for (int L : {4, 8, 16}) {
        const double v = threshold_factor_closed(L, 16, 1.0);
        CHECK(v == doctest::Approx(8 * std::exp(-12.0 / L)));
        for (double N : {2.0, 1e3, 1e9}) CHECK(threshold_factor_closed(L, N, 1.0) == v);
    }
    double prev = 0.0;
    for (int L = 2; L <= 64; L *= 2) {
        const double v = threshold_factor_closed(L, 256, kLog3Of2);
        CHECK(v > prev);
        prev = v;
    }
    // along log N = L^{beta/(1-beta)} the factor stays above 8 e^{-12}
    for (int L = 2; L <= 12; ++L) {
        const double lnN = fidelity_schedule(L, kLog3Of2);
        CHECK(threshold_factor_closed(L, std::exp(lnN), kLog3Of2) >= 8 * std::exp(-12.0) * (1 - 1e-9));
    }
}

TEST_CASE("fidelity exponent") {
    CHECK(fidelity_exponent(8, 100, 1.0) == doctest::Approx(8 * std::log(100.0)));
    CHECK(fidelity_exponent(8, 2, kLog3Of2) < fidelity_exponent(8, 16, kLog3Of2));
    for (int L : {2, 4, 6}) {
        const double b = kLog3Of2;
        const double lnN = fidelity_schedule(L, b);
        CHECK(lnN == doctest::Approx(std::pow(L, b / (1 - b))));
        CHECK(fidelity_exponent(L, std::exp(lnN), b) == doctest::Approx(lnN).epsilon(1e-9));
    }
    CHECK(std::isinf(fidelity_schedule(8, 1.0)));
}

TEST_CASE("walk growth") {
    SUBCASE("flat torus") {
        const auto g = count_walks(build_torus(6), 7, 12);
        for (int r = 0; r <= 12; ++r) CHECK(g.counts[r] == std::pow(4.0, r));
        CHECK(g.v == 4.0);
        CHECK(g.multiplier == 1.0);
    }
    SUBCASE("enumeration oracle on a handled surface") {
        const auto c = build_handled_surface(blueprint(8, 4));
        const auto adj = adjacency(c);
        const auto val = valences(c);
        const int kink = static_cast<int>(std::find(val.begin(), val.end(), 5) - val.begin());
        const auto g = count_walks(c, kink, 6);
        CHECK(g.counts[1] == 5.0);
        for (int r = 0; r <= 6; ++r) CHECK(g.counts[r] == static_cast<double>(walks_by_enumeration(adj, kink, r)));
    }
    SUBCASE("curved growth constant") {
        const auto c = build_handled_surface(blueprint(8, 4));
        const auto g = count_walks(c, 0, 60);
        CHECK(g.v > 4.0);
        CHECK(g.v < 5.0);
        CHECK(g.multiplier > 0.8);
        CHECK(g.multiplier < 1.0);
    }
}
