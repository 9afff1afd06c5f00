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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "highgenus/complex.hpp"
#include "highgenus/decoding.hpp"
#include "highgenus/error.hpp"
#include "highgenus/homology.hpp"
#include "highgenus/io.hpp"
#include "highgenus/random.hpp"
#include "highgenus/simulation.hpp"
#include "highgenus/surgery.hpp"

namespace hg::cli {

namespace {

std::string join_ints(const std::vector<int>& xs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

std::string num(double x) { return format_number(x); }
std::string num(long long x) { return format_number(x); }
std::string num(int x) { return format_number(static_cast<long long>(x)); }

std::filesystem::path out_dir(const ExperimentConfig& cfg) {
    return cfg.out_dir.empty() ? default_output_dir() : std::filesystem::path(cfg.out_dir);
}

void add_output(CLI::App* sub, ExperimentConfig& cfg) {
    sub->add_option("--out-dir", cfg.out_dir, std::string("directory for results (default: $") + kOutDirEnv + " or .)");
}

void add_input(CLI::App* sub, ExperimentConfig& cfg, bool many) {
    auto* opt = sub->add_option("-i,--input", cfg.inputs, many ? "surface files" : "surface file")->required();
    if (!many) opt->expected(1);
}

// Flags do not record their default on their own; the echo needs it.
CLI::Option* add_switch(CLI::App* sub, const std::string& names, bool& target, const std::string& desc) {
    return sub->add_flag(names, target, desc)->default_str(target ? "true" : "false");
}

void add_seed(CLI::App* sub, ExperimentConfig& cfg) { sub->add_option("--seed", cfg.seed, "master seed"); }

// Runs one pipeline stage, prefixing any error with the stage name.
template <class F>
auto stage(const std::string& name, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.kind(), name + ": " + e.detail());
    }
}

std::vector<std::string> diagnostics_row(const std::string& name, const CellComplex& c) {
    const auto r = validate(c);
    const int valence5 = r.valence_histogram.count(5) ? r.valence_histogram.at(5) : 0;
    return {name,
            num(r.vertices),
            num(r.edges),
            num(r.faces),
            num(r.euler),
            num((2 - r.euler) / 2),
            num(valence5),
            num(r.kink_excess),
            num(r.kink_density()),
            num(static_cast<int>(c.handles.size())),
            r.ok ? "pass" : "fail"};
}

int cmd_build(const CLI::App& sub, const ExperimentConfig& cfg) {
    ResultBundle bundle;
    bundle.command = "build";
    bundle.config_text = config_echo(sub);
    CsvTable diag;
    diag.header = {"stage", "vertices", "edges", "faces", "euler", "genus", "valence5", "kink_excess", "kink_density",
                   "handles", "validate"};
    std::ostringstream summary;

    CellComplex c;
    if (cfg.kind == "torus") {
        c = stage("build", [&] { return build_torus(cfg.L); });
        diag.add(diagnostics_row("build", c));
    } else if (cfg.kind == "join") {
        c = stage("build", [&] { return join_two_tori(cfg.L); });
        diag.add(diagnostics_row("build", c));
        summary << "joined side " << join_side(cfg.L) << "\n";
    } else if (cfg.kind == "handled") {
        Blueprint bp;
        bp.L = cfg.L;
        bp.N = cfg.N;
        bp.hole_side = cfg.hole_side;
        bp.tube_length = cfg.tube_length;
        bp.base_side = cfg.base_side;
        bp.seed = cfg.seed;
        bp.reversing_glue = cfg.reversing_glue;
        c = stage("build", [&] { return build_handled_surface(bp); });
        diag.add(diagnostics_row("build", c));
        summary << "base side " << c.blueprint->base_side << " (default " << bp.default_base_side() << ")\n";
        if (cfg.repair) {
            const auto echo = c.blueprint;
            c = stage("repair", [&] { return repair_handles(c, derive_seed(cfg.seed, 1), cfg.reversing_glue).complex; });
            c.blueprint = echo;
            diag.add(diagnostics_row("repair", c));
        }
        if (cfg.symmetrize) {
            const double before = validate(c).kink_density();
            const auto handles_before = c.handles.size();
            auto sym = stage("symmetrize", [&] { return symmetrize(c, *c.blueprint, derive_seed(cfg.seed, 2)); });
            c = std::move(sym.complex);
            diag.add(diagnostics_row("symmetrize", c));
            const double after = validate(c).kink_density();
            summary << "symmetrize: used " << sym.used_handles.size() << " of " << handles_before
                    << " handles, common loop length " << sym.common_length << ", detours " << sym.detours
                    << ", kink excess " << sym.kink_excess_before << " -> " << sym.kink_excess_after
                    << ", effective kink density ratio " << (before > 0 ? after / before : 0.0) << "\n";
            CsvTable skipped;
            skipped.header = {"handle", "reason"};
            for (const auto& sk : sym.skipped) skipped.add({num(sk.handle), sk.reason});
            bundle.tables.emplace_back("skipped", std::move(skipped));
        }
    } else {
        throw Error(ErrorKind::invalid_parameter, "unknown surface kind '" + cfg.kind + "'");
    }
    c.seed = cfg.seed;
    const auto report = validate(c);
    if (!report.ok) throw Error(ErrorKind::internal_error, "validate: built surface is invalid\n" + report.to_text());

    const std::filesystem::path dir = out_dir(cfg);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const std::filesystem::path file = cfg.surface_out.empty() ? dir / "surface.json" : std::filesystem::path(cfg.surface_out);
    stage("write", [&] {
        save_surface(c, file.string());
        return 0;
    });
    std::ostringstream hash;
    hash << std::hex << surface_hash(c);
    bundle.complex_hash = hash.str();
    summary << report.to_text() << "surface written to " << file.string() << "\n";
    bundle.summary = summary.str();
    bundle.tables.emplace_back("diagnostics", std::move(diag));
    bundle.write(dir);
    std::cout << bundle.summary;
    return 0;
}

int cmd_validate(const CLI::App& sub, const ExperimentConfig& cfg) {
    const CellComplex c = load_surface(cfg.inputs.front());
    const auto report = validate(c);
    ResultBundle bundle;
    bundle.command = "validate";
    bundle.config_text = config_echo(sub);
    std::ostringstream hash;
    hash << std::hex << surface_hash(c);
    bundle.complex_hash = hash.str();
    bundle.summary = report.to_text();
    CsvTable hist;
    hist.header = {"valence", "count"};
    for (auto [v, n] : report.valence_histogram) hist.add({num(v), num(n)});
    bundle.tables.emplace_back("valence", std::move(hist));
    bundle.write(out_dir(cfg));
    std::cout << bundle.summary;
    return report.ok ? 0 : static_cast<int>(ErrorFamily::surgery);
}

int cmd_systole(const CLI::App& sub, const ExperimentConfig& cfg) {
    const CellComplex c = load_surface(cfg.inputs.front());
    const auto rep = systole(c, !c.handles.empty());
    ResultBundle bundle;
    bundle.command = "systole";
    bundle.config_text = config_echo(sub);
    CsvTable t;
    t.header = {"sector", "length", "witness_edges"};
    t.add({"primal", num(rep.primal), join_ints(rep.primal_witness.support())});
    t.add({"dual", num(rep.dual), join_ints(rep.dual_witness.support())});
    CsvTable h;
    h.header = {"handle", "l_loop_length"};
    for (std::size_t i = 0; i < rep.handle_loops.size(); ++i) h.add({num(c.handles[i].id), num(rep.handle_loops[i])});
    std::ostringstream s;
    s << "primal systole " << rep.primal << "\ndual systole " << rep.dual << "\n";
    if (!rep.handle_loops.empty()) {
        auto sorted = rep.handle_loops;
        std::sort(sorted.begin(), sorted.end());
        s << "handle l-loops: min " << sorted.front() << ", median " << sorted[sorted.size() / 2] << ", max "
          << sorted.back() << "\n";
    }
    bundle.summary = s.str();
    bundle.tables.emplace_back("systole", std::move(t));
    bundle.tables.emplace_back("handle_loops", std::move(h));
    bundle.write(out_dir(cfg));
    std::cout << bundle.summary;
    return 0;
}

ScalingParams params_for(const CellComplex& c, const ExperimentConfig& cfg) {
    ScalingParams sp;
    sp.L = c.blueprint ? c.blueprint->L : cfg.L;
    sp.N = c.blueprint ? c.blueprint->N : cfg.N;
    sp.symmetrized = c.blueprint ? c.blueprint->symmetrized : cfg.symmetrize;
    sp.beta = cfg.beta;
    sp.alpha = cfg.alpha;
    return sp;
}

std::vector<int> pick_roots(const CellComplex& c, const ExperimentConfig& cfg) {
    if (cfg.root >= 0) return {cfg.root};
    Rng rng(derive_seed(cfg.seed, 3));
    std::vector<int> all(c.num_vertices);
    for (int v = 0; v < c.num_vertices; ++v) all[v] = v;
    const int want = std::min(cfg.roots, c.num_vertices);
    for (int i = 0; i < want; ++i) std::swap(all[i], all[i + uniform_below(rng, all.size() - i)]);
    all.resize(want);
    return all;
}

int cmd_growth(const CLI::App& sub, const ExperimentConfig& cfg) {
    const CellComplex c = load_surface(cfg.inputs.front());
    const auto sp = params_for(c, cfg);
    int r_max = cfg.r_max;
    if (r_max <= 0) r_max = sp.N >= 2 ? predicted_min_loop(sp).radius : 2 * sp.L;
    // files without a blueprint use the kink density they actually have
    const double rho = c.blueprint ? sp.resolved_rho() : validate(c).kink_density();
    const auto c_rec = solve_perimeter_recursion(rho, r_max);
    const auto a_rec = area_from_perimeter(c_rec);
    const auto roots = pick_roots(c, cfg);
    CsvTable t;
    t.header = {"root", "r", "c_measured", "c_recursion", "c_closed_form", "a_measured", "a_recursion"};
    std::vector<double> mean_a(r_max + 1, 0.0), mean_c(r_max + 1, 0.0);
    for (int root : roots) {
        const auto g = measure_circle_growth(c, root, r_max);
        for (int r = 0; r <= r_max; ++r) {
            t.add({num(root), num(r), num(g.perimeter[r]), num(c_rec[r]), num(closed_form_perimeter(sp.L, r)),
                   num(g.area[r]), num(a_rec[r])});
            mean_a[r] += double(g.area[r]);
            mean_c[r] += double(g.perimeter[r]);
        }
    }
    CsvTable m;
    m.header = {"r", "c_measured_mean", "c_recursion", "a_measured_mean", "a_recursion", "area_ratio"};
    double worst = 1.0;
    for (int r = 0; r <= r_max; ++r) {
        mean_a[r] /= static_cast<double>(roots.size());
        mean_c[r] /= static_cast<double>(roots.size());
        const double ratio = mean_a[r] / a_rec[r];
        worst = std::max(worst, std::max(ratio, 1.0 / ratio));
        m.add({num(r), num(mean_c[r]), num(c_rec[r]), num(mean_a[r]), num(a_rec[r]), num(ratio)});
    }
    ResultBundle bundle;
    bundle.command = "growth";
    bundle.config_text = config_echo(sub);
    std::ostringstream s;
    s << "kink density used " << rho << ", measured " << validate(c).kink_density() << "\n"
      << "r_max " << r_max << ", roots " << roots.size() << "\n"
      << "worst mean-area factor vs recursion " << worst << "\n";
    bundle.summary = s.str();
    bundle.tables.emplace_back("profiles", std::move(t));
    bundle.tables.emplace_back("mean", std::move(m));
    bundle.write(out_dir(cfg));
    std::cout << bundle.summary;
    return 0;
}

int cmd_simulate(const CLI::App& sub, const ExperimentConfig& cfg) {
    const DecoderKind decoder = decoder_from_string(cfg.decoder);
    for (double p : cfg.p)
        if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::invalid_parameter, "p must lie in [0, 1]");
    if (cfg.trials < 1) throw Error(ErrorKind::invalid_parameter, "trials must be at least 1");
    ResultBundle bundle;
    bundle.command = "simulate";
    bundle.config_text = config_echo(sub);
    CsvTable t;
    t.header = {"surface", "distance", "p", "decoder", "seed", "trials", "failures", "epsilon", "ci_low", "ci_high",
                "failures_x", "failures_z", "handle_qubits", "handle_failures", "per_handle_epsilon",
                "per_handle_low", "per_handle_high", "per_handle_marginal", "base_failures"};
    std::vector<ScalingPoint> points;
    std::ostringstream s;
    for (std::size_t i = 0; i < cfg.inputs.size(); ++i) {
        const CellComplex c = load_surface(cfg.inputs[i]);
        const CssCode code = css_from_complex(c);
        const auto sys = systole(c);
        const int d = std::min(sys.primal, sys.dual);
        s << cfg.inputs[i] << ": k=" << code.k << " distance " << d << "\n";
        CsvTable log;
        log.header = {"seed", "trial", "p", "decoder", "defects", "correction_weight", "outcome", "flipped_sectors"};
        for (std::size_t j = 0; j < cfg.p.size(); ++j) {
            const double p = cfg.p[j];
            // each (surface, p) point gets its own stream family
            const std::uint64_t seed = derive_seed(derive_seed(cfg.seed, i), j);
            TrialOptions opt;
            opt.threads = cfg.threads;
            opt.keep_log = cfg.log_trials;
            const auto sum = run_trials(c, code, p, cfg.trials, decoder, seed, opt);
            const auto iv = sum.interval();
            const auto hv = sum.per_handle_interval();
            t.add({cfg.inputs[i], num(d), num(p), to_string(decoder), std::to_string(seed), num(sum.trials),
                   num(sum.failures), num(sum.epsilon()), num(iv.lo), num(iv.hi), num(sum.failures_x),
                   num(sum.failures_z), num(sum.handle_qubits), num(sum.handle_failures), num(sum.per_handle_epsilon()),
                   num(hv.lo), num(hv.hi), num(sum.per_handle_marginal(code.base_qubits)), num(sum.base_failures)});
            s << "  p=" << p << " eps=" << sum.epsilon() << " [" << iv.lo << ", " << iv.hi << "]\n";
            for (const auto& r : sum.log) {
                std::string flipped;
                for (const auto& f : r.flipped) flipped += (flipped.empty() ? "" : " ") + f;
                log.add({std::to_string(r.seed), num(r.trial), num(r.p), to_string(r.decoder), num(r.defects),
                         num(r.correction_weight), r.success ? "success" : "failure", flipped});
            }
            if (p > 0.0 && p < 1.0) points.push_back({double(d), p, sum.epsilon()});
        }
        if (cfg.log_trials) bundle.tables.emplace_back("trials_" + std::to_string(i), std::move(log));
    }
    bundle.tables.insert(bundle.tables.begin(), {"summary", std::move(t)});
    if (cfg.fit) {
        const auto fit = fit_scaling(points, cfg.beta);
        CsvTable f;
        f.header = {"beta", "K", "p_c", "rms_residual", "points_used", "points_dropped", "monotone_in_p"};
        f.add({num(fit.beta), num(fit.K), num(fit.p_c), num(fit.rms_residual), num(fit.points_used),
               num(fit.points_dropped), fit.monotone_in_p ? "true" : "false"});
        s << "fit: K=" << fit.K << " p_c=" << fit.p_c << " rms=" << fit.rms_residual << "\n";
        bundle.tables.emplace_back("fit", std::move(f));
    }
    bundle.summary = s.str();
    bundle.write(out_dir(cfg));
    std::cout << bundle.summary;
    return 0;
}

int cmd_threshold(const CLI::App& sub, const ExperimentConfig& cfg) {
    ScalingParams sp;
    sp.L = cfg.L;
    sp.N = cfg.N;
    sp.beta = cfg.beta;
    sp.alpha = cfg.alpha;
    sp.symmetrized = cfg.symmetrize;
    const auto prod = threshold_factor_product(sp);
    const double closed = threshold_factor_closed(cfg.L, cfg.N, cfg.beta);
    CsvTable t;
    t.header = {"k", "radius", "area", "factor_k", "running_product"};
    double running = 1.0;
    for (const auto& term : prod.terms_detail) {
        running *= term.factor;
        t.add({num(term.k), num(term.radius), num(term.area), num(term.factor), num(running)});
    }
    std::ostringstream s;
    s << "product " << prod.value << " over " << prod.terms << " terms" << (prod.empty_product ? " (empty product)" : "")
      << (prod.beta_warning ? " (beta differs from log_3 2)" : "") << "\n"
      << "closed form " << closed << "\nratio product/closed " << prod.value / closed << "\n";
    CsvTable summary;
    summary.header = {"L", "N", "beta", "rho", "product", "closed_form", "ratio", "empty_product", "beta_warning",
                      "min_loop_radius", "min_loop_reference", "fidelity_exponent", "schedule", "walk_multiplier"};
    std::string r_star = "", ref = "", fid = "";
    if (cfg.N >= 2) {
        const auto ml = predicted_min_loop(sp);
        r_star = num(ml.radius);
        ref = num(ml.reference);
        fid = num(fidelity_exponent(cfg.L, cfg.N, cfg.beta));
        s << "predicted minimal loop " << ml.radius << " (reference " << ml.reference << ")\n";
    }
    std::string multiplier;
    if (!cfg.inputs.empty()) {
        const CellComplex c = load_surface(cfg.inputs.front());
        const int root = cfg.root >= 0 ? cfg.root : 0;
        const auto w = count_walks(c, root, cfg.r_max > 0 ? cfg.r_max : 12);
        multiplier = num(w.multiplier);
        s << "walk growth v " << w.v << ", multiplier 4/v " << w.multiplier << "\n";
    }
    summary.add({num(cfg.L), num(cfg.N), num(cfg.beta), num(sp.resolved_rho()), num(prod.value), num(closed),
                 num(prod.value / closed), prod.empty_product ? "true" : "false", prod.beta_warning ? "true" : "false",
                 r_star, ref, fid, num(fidelity_schedule(cfg.L, cfg.beta)), multiplier});
    ResultBundle bundle;
    bundle.command = "threshold";
    bundle.config_text = config_echo(sub);
    bundle.summary = s.str();
    bundle.tables.emplace_back("factors", std::move(t));
    bundle.tables.emplace_back("summary", std::move(summary));
    bundle.write(out_dir(cfg));
    std::cout << bundle.summary;
    return 0;
}

int cmd_walks(const CLI::App& sub, const ExperimentConfig& cfg) {
    const CellComplex c = load_surface(cfg.inputs.front());
    const int r_max = cfg.r_max > 0 ? cfg.r_max : 12;
    const auto roots = pick_roots(c, cfg);
    CsvTable t;
    t.header = {"root", "valence", "r", "walks", "ratio"};
    std::ostringstream s;
    const auto val = valences(c);
    for (int root : roots) {
        const auto w = count_walks(c, root, r_max);
        for (int r = 0; r <= r_max; ++r)
            t.add({num(root), num(val[root]), num(r), num(w.counts[r]), r ? num(w.counts[r] / w.counts[r - 1]) : ""});
        s << "root " << root << ": v " << w.v << ", 4/v " << w.multiplier << "\n";
    }
    ResultBundle bundle;
    bundle.command = "walks";
    bundle.config_text = config_echo(sub);
    bundle.summary = s.str();
    bundle.tables.emplace_back("counts", std::move(t));
    bundle.write(out_dir(cfg));
    std::cout << bundle.summary;
    return 0;
}

}  // namespace

std::unique_ptr<Cli> make_cli() {
    auto cli = std::make_unique<Cli>();
    auto& app = cli->app;
    auto& cfg = cli->cfg;
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML/INI config file with one [subcommand] section; flags override it");
    auto make = [&](const char* name, const char* desc) {
        auto* sub = app.add_subcommand(name, desc);
        sub->option_defaults()->always_capture_default();
        sub->add_option("--config-format", cfg.config_format, "config format version")->check(CLI::Range(1, kConfigFormat));
        cli->commands.push_back(sub);
        return sub;
    };

    auto* build = make("build", "construct a surface and write it to a file");
    build->add_option("--kind", cfg.kind, "handled, torus or join")->check(CLI::IsMember({"handled", "torus", "join"}));
    build->add_option("-L,--L", cfg.L, "handle scale (torus side for kind=torus)");
    build->add_option("-N,--N", cfg.N, "number of handles");
    build->add_option("--hole-side", cfg.hole_side, "hole side (0: L/4)");
    build->add_option("--tube-length", cfg.tube_length, "tube length (0: L/4)");
    build->add_option("--base-side", cfg.base_side, "base torus side (0: ceil(L sqrt(N/2)), grown if too dense)");
    add_switch(build, "--repair,!--no-repair", cfg.repair, "cut handles across their width and re-pair randomly");
    add_switch(build, "--symmetrize,!--no-symmetrize", cfg.symmetrize, "also cut along l-loops and re-pair");
    add_switch(build, "--reversing-glue,!--no-reversing-glue", cfg.reversing_glue, "glue circles orientation-reversing");
    build->add_option("-o,--surface-out", cfg.surface_out, "surface file (default <out-dir>/surface.json)");
    add_seed(build, cfg);
    add_output(build, cfg);

    auto* val = make("validate", "check a surface file");
    add_input(val, cfg, false);
    add_output(val, cfg);

    auto* sys = make("systole", "shortest nontrivial cycles and per-handle l-loops");
    add_input(sys, cfg, false);
    add_output(sys, cfg);

    auto* growth = make("growth", "measured circle growth against the perimeter recursion");
    add_input(growth, cfg, false);
    growth->add_option("--roots", cfg.roots, "number of random roots");
    growth->add_option("--root", cfg.root, "single root vertex (-1: random roots)");
    growth->add_option("--r-max", cfg.r_max, "largest radius (0: predicted minimal loop)");
    growth->add_option("-L,--L", cfg.L, "handle scale when the file has no blueprint");
    growth->add_option("-N,--N", cfg.N, "handle count when the file has no blueprint");
    growth->add_option("--alpha", cfg.alpha, "area fraction for the minimal loop condition");
    add_seed(growth, cfg);
    add_output(growth, cfg);

    auto* sim = make("simulate", "Monte Carlo logical failure rates");
    add_input(sim, cfg, true);
    sim->add_option("-p", cfg.p, "physical error rates");
    sim->add_option("--trials", cfg.trials, "trials per rate");
    sim->add_option("--decoder", cfg.decoder, "mwpm, greedy or ml")->check(CLI::IsMember({"mwpm", "greedy", "ml"}));
    sim->add_option("--threads", cfg.threads, "worker threads (0: all cores)");
    add_switch(sim, "--log-trials,!--no-log-trials", cfg.log_trials, "write one row per trial");
    add_switch(sim, "--fit,!--no-fit", cfg.fit, "fit eps ~ (p/p_c)^(K d^beta) across inputs");
    sim->add_option("--beta", cfg.beta, "decoder exponent for the fit");
    add_seed(sim, cfg);
    add_output(sim, cfg);

    auto* thr = make("threshold", "threshold-factor product, closed form and walk multiplier");
    thr->add_option("-L,--L", cfg.L, "handle scale");
    thr->add_option("-N,--N", cfg.N, "number of handles");
    thr->add_option("--beta", cfg.beta, "decoder exponent");
    thr->add_option("--alpha", cfg.alpha, "area fraction for the minimal loop condition");
    add_switch(thr, "--symmetrize,!--no-symmetrize", cfg.symmetrize, "use the doubled kink density");
    thr->add_option("-i,--input", cfg.inputs, "surface for the walk multiplier");
    thr->add_option("--root", cfg.root, "walk root (default 0)");
    thr->add_option("--r-max", cfg.r_max, "walk length (0: 12)");
    add_output(thr, cfg);

    auto* walks = make("walks", "count walks from roots");
    add_input(walks, cfg, false);
    walks->add_option("--root", cfg.root, "root vertex (-1: random roots)");
    walks->add_option("--roots", cfg.roots, "number of random roots");
    walks->add_option("--r-max", cfg.r_max, "walk length (0: 12)");
    add_seed(walks, cfg);
    add_output(walks, cfg);
    return cli;
}

std::string config_echo(const CLI::App& sub) { return "[" + sub.get_name() + "]\n" + sub.config_to_str(true, false); }

int run(int argc, const char* const* argv) {
    auto cli = make_cli();
    try {
        cli->app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = cli->app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ErrorFamily::config);
    }
    try {
        for (auto* sub : cli->commands) {
            if (!sub->parsed()) continue;
            const std::string name = sub->get_name();
            const auto& cfg = cli->cfg;
            if (name == "build") return cmd_build(*sub, cfg);
            if (name == "validate") return cmd_validate(*sub, cfg);
            if (name == "systole") return cmd_systole(*sub, cfg);
            if (name == "growth") return cmd_growth(*sub, cfg);
            if (name == "simulate") return cmd_simulate(*sub, cfg);
            if (name == "threshold") return cmd_threshold(*sub, cfg);
            if (name == "walks") return cmd_walks(*sub, cfg);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(family_of(e.kind()));
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(ErrorFamily::internal);
    }
    return static_cast<int>(ErrorFamily::internal);
}

}  // namespace hg::cli
