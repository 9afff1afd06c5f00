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

#include <cmath>
#include <functional>
#include <vector>

#include "highgenus/complex.hpp"

namespace hg {

/// BFS layer sizes around a root.
struct GrowthProfile {
    std::vector<long long> perimeter;  // c(r), r = 0..r_max
    std::vector<long long> area;       // a(r) = 1 + sum c
};

GrowthProfile measure_circle_growth(const CellComplex& c, int root, int r_max);

inline const double kLog3Of2 = std::log(2.0) / std::log(3.0);

struct ScalingParams {
    int L = 8;
    int N = 2;
    double beta = kLog3Of2;
    /// Kink density; non-positive means 8/L^2 (16/L^2 if symmetrized).
    double rho = 0.0;
    bool symmetrized = false;
    double alpha = 0.5;

    double resolved_rho() const { return rho > 0.0 ? rho : (symmetrized ? 16.0 : 8.0) / (double(L) * L); }
};

/// c(r) = 4r + rho * sum_{k<r} c(k) (r - k).
std::vector<double> solve_perimeter_recursion(double rho, int r_max);

/// a(r) = 1 + sum_{r'=1..r} c(r').
std::vector<double> area_from_perimeter(const std::vector<double>& c);

double closed_form_perimeter(double L, double r);

struct MinLoopPrediction {
    int radius = 0;
    double reference = 0.0;  // L ln N / sqrt 8
};

MinLoopPrediction predicted_min_loop(const ScalingParams& sp);

struct ThresholdTerm {
    int k = 0;
    long long radius = 0;  // 3^k
    double area = 0.0;
    double factor = 1.0;  // [2 r^2 / a(r)]^{(1/r)^beta}
};

struct ThresholdFactor {
    double value = 1.0;
    std::vector<ThresholdTerm> terms_detail;
    int terms = 0;
    bool empty_product = false;
    bool beta_warning = false;  // beta differs from log_3 2
};

using AreaFunction = std::function<double(int)>;

ThresholdFactor threshold_factor_product(const ScalingParams& sp, const AreaFunction& area);
/// Area taken from the perimeter recursion at the params' kink density.
ThresholdFactor threshold_factor_product(const ScalingParams& sp);

double threshold_factor_closed(double L, double N, double beta);

double fidelity_exponent(double L, double N, double beta);
/// L^{beta / (1 - beta)}; infinite for beta = 1.
double fidelity_schedule(double L, double beta);

struct WalkGrowth {
    std::vector<double> counts;  // w(r), r = 0..r_max
    double v = 0.0;
    double multiplier = 0.0;  // 4 / v
};

WalkGrowth count_walks(const CellComplex& c, int root, int r_max);

}  // namespace hg
