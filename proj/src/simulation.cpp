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

#include "highgenus/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <thread>

#include "highgenus/error.hpp"

namespace hg {

Interval wilson_interval(long long k, long long n, double z) {
    if (n <= 0) return {0.0, 1.0};
    const double nn = double(n);
    const double phat = double(k) / nn;
    const double z2 = z * z;
    const double centre = (phat + z2 / (2 * nn)) / (1 + z2 / nn);
    const double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / (1 + z2 / nn);
    return {k == 0 ? 0.0 : std::max(0.0, centre - half), k == n ? 1.0 : std::min(1.0, centre + half)};
}

double TrialSummary::per_handle_epsilon() const {
    if (trials == 0 || handle_qubits == 0) return 0.0;
    return double(handle_failures) / double(trials) / handle_qubits;
}

Interval TrialSummary::per_handle_interval() const {
    auto iv = wilson_interval(handle_failures, trials);
    if (handle_qubits > 0) {
        iv.lo /= handle_qubits;
        iv.hi /= handle_qubits;
    }
    return iv;
}

double TrialSummary::per_handle_marginal(const std::vector<int>& base_qubits) const {
    if (trials == 0) return 0.0;
    long long flips = 0;
    int count = 0;
    for (std::size_t j = 0; j < qubit_flips.size(); ++j) {
        if (std::find(base_qubits.begin(), base_qubits.end(), static_cast<int>(j)) != base_qubits.end()) continue;
        flips += qubit_flips[j];
        ++count;
    }
    return count ? double(flips) / double(trials) / count : 0.0;
}

namespace {

struct Worker {
    const CellComplex& c;
    const CssCode& code;
    const DecodingGraph& primal;
    const DecodingGraph& dual;
    double p;
    DecoderKind decoder;
    std::uint64_t seed;
    bool keep_log;

    Correction decode(Sector sector, const Syndrome& s) const {
        const auto& g = sector == Sector::primal ? primal : dual;
        switch (decoder) {
            case DecoderKind::mwpm: return decode_mwpm(g, s);
            case DecoderKind::greedy: return decode_greedy(g, s);
            case DecoderKind::ml: {
                auto ml = decode_ml_bruteforce(c, code, sector, s, p);
                const auto w = static_cast<long long>(ml.correction.weight());
                return {std::move(ml.correction), w};
            }
        }
        return decode_mwpm(g, s);
    }

    void run(long long begin, long long end, TrialSummary& out) const {
        out.qubit_flips.assign(code.k, 0);
        std::vector<char> is_base(code.k, 0);
        for (int j : code.base_qubits) is_base[j] = 1;
        for (long long t = begin; t < end; ++t) {
            const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
            Rng rng(trial_seed);
            const auto e = sample_iid_error(c, p, rng);
            const auto syn = syndrome_of(c, e);
            const auto cx = decode(Sector::primal, syn.x);
            const auto cz = decode(Sector::dual, syn.z);
            const auto ox = residual_class(c, code, Sector::primal, e.x_chain, cx.chain);
            const auto oz = residual_class(c, code, Sector::dual, e.z_chain, cz.chain);
            ++out.trials;
            std::vector<char> flipped(code.k, 0);
            for (int j : ox.flipped) flipped[j] = 1;
            for (int j : oz.flipped) flipped[j] = 1;
            bool handle = false, base = false;
            for (int j = 0; j < code.k; ++j) {
                if (!flipped[j]) continue;
                ++out.qubit_flips[j];
                (is_base[j] ? base : handle) = true;
            }
            out.failures += !(ox.success && oz.success);
            out.failures_x += !ox.success;
            out.failures_z += !oz.success;
            out.handle_failures += handle;
            out.base_failures += base;
            if (keep_log) {
                TrialRecord r;
                r.seed = seed;
                r.trial = t;
                r.p = p;
                r.decoder = decoder;
                r.defects = static_cast<int>(syn.x.defects.size() + syn.z.defects.size());
                r.correction_weight = static_cast<long long>(cx.chain.weight() + cz.chain.weight());
                r.success = ox.success && oz.success;
                for (int j : ox.flipped) r.flipped.push_back("x" + std::to_string(j));
                for (int j : oz.flipped) r.flipped.push_back("z" + std::to_string(j));
                out.log.push_back(std::move(r));
            }
        }
    }
};

void merge(TrialSummary& into, TrialSummary&& part) {
    into.trials += part.trials;
    into.failures += part.failures;
    into.failures_x += part.failures_x;
    into.failures_z += part.failures_z;
    into.handle_failures += part.handle_failures;
    into.base_failures += part.base_failures;
    if (into.qubit_flips.size() < part.qubit_flips.size()) into.qubit_flips.resize(part.qubit_flips.size(), 0);
    for (std::size_t j = 0; j < part.qubit_flips.size(); ++j) into.qubit_flips[j] += part.qubit_flips[j];
    for (auto& r : part.log) into.log.push_back(std::move(r));
}

}  // namespace

TrialSummary run_trials(const CellComplex& c, const CssCode& code, double p, long long trials, DecoderKind decoder,
                        std::uint64_t seed, const TrialOptions& options) {
    if (trials < 1) throw Error(ErrorKind::invalid_parameter, "trials must be at least 1");
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::invalid_parameter, "error probability must lie in [0, 1]");
    const DecodingGraph primal(c, Sector::primal);
    const DecodingGraph dual(c, Sector::dual);
    const Worker worker{c, code, primal, dual, p, decoder, seed, options.keep_log};

    int threads = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = static_cast<int>(std::clamp<long long>(threads, 1, trials));
    std::vector<TrialSummary> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto chunk = [&](int i) {
        const long long begin = trials * i / threads, end = trials * (i + 1) / threads;
        try {
            worker.run(begin, end, parts[i]);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (threads == 1) {
        chunk(0);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(chunk, i);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    TrialSummary out;
    out.p = p;
    out.decoder = decoder;
    out.seed = seed;
    out.qubit_flips.assign(code.k, 0);
    out.handle_qubits = code.k - static_cast<int>(code.base_qubits.size());
    for (auto& part : parts) merge(out, std::move(part));
    return out;
}

ScalingFit fit_scaling(std::span<const ScalingPoint> points, double beta) {
    if (!(beta > 0.0 && beta <= 1.0)) throw Error(ErrorKind::invalid_parameter, "beta must lie in (0, 1]");
    ScalingFit fit;
    fit.beta = beta;
    std::vector<ScalingPoint> used;
    for (const auto& pt : points) {
        if (!(pt.p > 0.0 && pt.p < 1.0) || pt.d <= 0.0)
            throw Error(ErrorKind::invalid_parameter, "scaling points need d > 0 and 0 < p < 1");
        if (pt.epsilon > 0.0)
            used.push_back(pt);
        else
            ++fit.points_dropped;
    }
    std::set<double> ds, ps;
    for (const auto& pt : used) {
        ds.insert(pt.d);
        ps.insert(pt.p);
    }
    if (ds.size() < 3 || ps.size() < 3)
        throw Error(ErrorKind::fit_underdetermined, "need at least 3 distinct distances and 3 distinct rates with nonzero failures");

    // eps should grow with p at fixed d
    std::map<double, std::vector<std::pair<double, double>>> by_d;
    for (const auto& pt : used) by_d[pt.d].emplace_back(pt.p, pt.epsilon);
    for (auto& [d, row] : by_d) {
        std::sort(row.begin(), row.end());
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i].second < row[i - 1].second) fit.monotone_in_p = false;
    }

    double suu = 0, suv = 0, svv = 0, suy = 0, svy = 0;
    for (const auto& pt : used) {
        const double v = std::pow(pt.d, beta);
        const double u = v * std::log(pt.p);
        const double y = std::log(pt.epsilon);
        suu += u * u;
        suv += u * v;
        svv += v * v;
        suy += u * y;
        svy += v * y;
    }
    const double det = suu * svv - suv * suv;
    if (std::abs(det) <= 1e-12 * std::max(1.0, suu * svv))
        throw Error(ErrorKind::fit_underdetermined, "scaling design matrix is singular");
    const double A = (suy * svv - svy * suv) / det;
    const double B = (suu * svy - suv * suy) / det;
    if (!(A > 0.0)) throw Error(ErrorKind::undefined_scaling, "fitted K is not positive");
    fit.K = A;
    fit.p_c = std::exp(-B / A);
    double ss = 0;
    for (const auto& pt : used) {
        const double v = std::pow(pt.d, beta);
        const double r = std::log(pt.epsilon) - (A * v * std::log(pt.p) + B * v);
        fit.residuals.push_back(r);
        ss += r * r;
    }
    fit.points_used = static_cast<int>(used.size());
    fit.rms_residual = std::sqrt(ss / used.size());
    return fit;
}

}  // namespace hg
