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

#include "highgenus/geometry.hpp"

#include <queue>
#include <string>

#include "highgenus/error.hpp"

namespace hg {

GrowthProfile measure_circle_growth(const CellComplex& c, int root, int r_max) {
    if (r_max < 1) throw Error(ErrorKind::invalid_parameter, "r_max must be at least 1");
    if (root < 0 || root >= c.num_vertices) throw Error(ErrorKind::invalid_parameter, "no such root " + std::to_string(root));
    const auto adj = adjacency(c);
    std::vector<int> dist(c.num_vertices, -1);
    GrowthProfile g;
    g.perimeter.assign(r_max + 1, 0);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        ++g.perimeter[dist[v]];
        if (dist[v] == r_max) continue;
        for (auto [w, e] : adj[v]) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[v] + 1;
            q.push(w);
        }
    }
    long long sum = 0;
    for (long long x : g.perimeter) g.area.push_back(sum += x);
    return g;
}

std::vector<double> solve_perimeter_recursion(double rho, int r_max) {
    if (rho < 0.0) throw Error(ErrorKind::invalid_parameter, "kink density must be non-negative");
    std::vector<double> c(std::max(r_max, 0) + 1, 0.0);
    double s0 = 0.0, s1 = 0.0;  // sum c(k), sum k c(k) over k < r
    for (int r = 1; r <= r_max; ++r) {
        s0 += c[r - 1];
        s1 += (r - 1) * c[r - 1];
        c[r] = 4.0 * r + rho * (r * s0 - s1);
    }
    return c;
}

std::vector<double> area_from_perimeter(const std::vector<double>& c) {
    std::vector<double> a(c.size());
    double sum = 1.0;
    for (std::size_t r = 0; r < c.size(); ++r) {
        if (r > 0) sum += c[r];
        a[r] = sum;
    }
    return a;
}

double closed_form_perimeter(double L, double r) {
    if (L <= 0) throw Error(ErrorKind::invalid_parameter, "L must be positive");
    return L * std::sqrt(2.0) * std::sinh(std::sqrt(8.0) * r / L);
}

MinLoopPrediction predicted_min_loop(const ScalingParams& sp) {
    if (sp.N < 2) throw Error(ErrorKind::undefined_scaling, "minimal loop prediction needs N >= 2");
    const double rho = sp.resolved_rho();
    const double goal = sp.alpha * double(sp.L) * sp.L * sp.N;
    MinLoopPrediction out;
    out.reference = sp.L * std::log(double(sp.N)) / std::sqrt(8.0);
    int r_max = 16;
    for (;;) {
        const auto a = area_from_perimeter(solve_perimeter_recursion(rho, r_max));
        for (int r = 0; r <= r_max; ++r)
            if (a[r] >= goal) {
                out.radius = r;
                return out;
            }
        r_max *= 2;
    }
}

ThresholdFactor threshold_factor_product(const ScalingParams& sp, const AreaFunction& area) {
    if (!(sp.beta > 0.0 && sp.beta <= 1.0)) throw Error(ErrorKind::invalid_parameter, "beta must lie in (0, 1]");
    ThresholdFactor out;
    out.beta_warning = std::abs(sp.beta - kLog3Of2) > 1e-9;
    const double top = sp.L * std::log(double(sp.N));
    double log_value = 0.0;
    long long radius = 3;
    for (int k = 1; radius <= top; ++k, radius *= 3) {
        const double a = area(static_cast<int>(radius));
        const double base = 2.0 * double(radius) * double(radius) / a;
        const double exponent = std::pow(1.0 / double(radius), sp.beta);
        log_value += exponent * std::log(base);
        out.terms = k;
        out.terms_detail.push_back({k, radius, a, std::pow(base, exponent)});
    }
    out.empty_product = out.terms == 0;
    out.value = std::exp(log_value);
    return out;
}

ThresholdFactor threshold_factor_product(const ScalingParams& sp) {
    const double top = sp.L * std::log(double(std::max(sp.N, 1)));
    const auto a = area_from_perimeter(solve_perimeter_recursion(sp.resolved_rho(), std::max(1, static_cast<int>(top))));
    return threshold_factor_product(sp, [&a](int r) { return a[r]; });
}

double threshold_factor_closed(double L, double N, double beta) {
    if (!(beta > 0.0 && beta <= 1.0)) throw Error(ErrorKind::invalid_parameter, "beta must lie in (0, 1]");
    return 8.0 * std::exp(-12.0 * std::pow(std::log(N), 1.0 - beta) / std::pow(L, beta));
}

double fidelity_exponent(double L, double N, double beta) {
    if (N < 2) throw Error(ErrorKind::undefined_scaling, "fidelity exponent needs N >= 2");
    return std::pow(L * std::log(N), beta);
}

double fidelity_schedule(double L, double beta) {
    if (beta >= 1.0) return INFINITY;
    return std::pow(L, beta / (1.0 - beta));
}

WalkGrowth count_walks(const CellComplex& c, int root, int r_max) {
    if (r_max < 1) throw Error(ErrorKind::invalid_parameter, "r_max must be at least 1");
    if (root < 0 || root >= c.num_vertices) throw Error(ErrorKind::invalid_parameter, "no such root " + std::to_string(root));
    const auto adj = adjacency(c);
    std::vector<double> cur(c.num_vertices, 0.0), next(c.num_vertices);
    cur[root] = 1.0;
    WalkGrowth g;
    g.counts.push_back(1.0);
    for (int r = 1; r <= r_max; ++r) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int v = 0; v < c.num_vertices; ++v) {
            if (cur[v] == 0.0) continue;
            for (auto [w, e] : adj[v]) next[w] += cur[v];
        }
        std::swap(cur, next);
        double total = 0.0;
        for (double x : cur) total += x;
        g.counts.push_back(total);
    }
    g.v = g.counts[r_max] / g.counts[r_max - 1];
    g.multiplier = 4.0 / g.v;
    return g;
}

}  // namespace hg
