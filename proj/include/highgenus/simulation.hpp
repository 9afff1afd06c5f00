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
#include <span>
#include <string>
#include <vector>

#include "highgenus/decoding.hpp"

namespace hg {

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

/// 95% Wilson score interval for k successes in n trials.
Interval wilson_interval(long long k, long long n, double z = 1.959963984540054);

struct TrialRecord {
    std::uint64_t seed = 0;
    long long trial = 0;
    double p = 0.0;
    DecoderKind decoder = DecoderKind::mwpm;
    int defects = 0;
    long long correction_weight = 0;
    bool success = true;
    std::vector<std::string> flipped;  // "x<j>" or "z<j>"
};

struct TrialSummary {
    long long trials = 0;
    long long failures = 0;
    long long failures_x = 0;
    long long failures_z = 0;
    /// Trials in which some logical qubit outside the base torus flipped.
    long long handle_failures = 0;
    long long base_failures = 0;
    std::vector<long long> qubit_flips;  // per logical qubit, either sector
    int handle_qubits = 0;
    double p = 0.0;
    DecoderKind decoder = DecoderKind::mwpm;
    std::uint64_t seed = 0;
    std::vector<TrialRecord> log;

    double epsilon() const { return trials ? double(failures) / double(trials) : 0.0; }
    Interval interval() const { return wilson_interval(failures, trials); }
    /// Handle-sector failure fraction divided by the number of handle qubits.
    double per_handle_epsilon() const;
    Interval per_handle_interval() const;
    /// Mean marginal flip rate over handle qubits.
    double per_handle_marginal(const std::vector<int>& base_qubits) const;
};

struct TrialOptions {
    int threads = 0;  // 0: hardware concurrency
    bool keep_log = false;
};

/// Trial i draws its noise from derive_seed(seed, i), so any trial can be
/// replayed alone.
TrialSummary run_trials(const CellComplex& c, const CssCode& code, double p, long long trials, DecoderKind decoder,
                        std::uint64_t seed, const TrialOptions& options = {});

struct ScalingPoint {
    double d = 0.0;
    double p = 0.0;
    double epsilon = 0.0;
};

struct ScalingFit {
    double beta = 1.0;
    double K = 0.0;
    double p_c = 0.0;
    double rms_residual = 0.0;
    std::vector<double> residuals;  // ln eps - model, per used point
    int points_used = 0;
    int points_dropped = 0;  // eps = 0
    bool monotone_in_p = true;
};

/// Least squares of ln eps = K d^beta ln(p / p_c) in (K, p_c), beta fixed.
ScalingFit fit_scaling(std::span<const ScalingPoint> points, double beta);

}  // namespace hg
