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
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "highgenus/geometry.hpp"

namespace hg::cli {

inline constexpr int kConfigFormat = 1;

/// Every knob any subcommand reads. Defaults are explicit so an echoed
/// config reproduces a run on its own.
struct ExperimentConfig {
    int config_format = kConfigFormat;
    std::vector<std::string> inputs;
    std::string out_dir;
    std::string surface_out;

    std::string kind = "handled";  // handled | torus | join
    int L = 8;
    int N = 1;
    int hole_side = 0;
    int tube_length = 0;
    int base_side = 0;
    bool repair = true;
    bool symmetrize = false;
    bool reversing_glue = false;
    std::uint64_t seed = 1;

    std::vector<double> p = {0.01, 0.02, 0.05};
    long long trials = 1000;
    std::string decoder = "mwpm";
    int threads = 0;
    bool log_trials = false;
    bool fit = false;

    double beta = kLog3Of2;
    double alpha = 0.5;
    int roots = 10;
    int root = -1;
    int r_max = 0;
};

struct Cli {
    CLI::App app{"highgenus: lattice codes on high-genus surfaces"};
    ExperimentConfig cfg;
    std::vector<CLI::App*> commands;
};

std::unique_ptr<Cli> make_cli();

/// Echo of the selected subcommand's options, defaults included, in the
/// config-file syntax it accepts.
std::string config_echo(const CLI::App& sub);

/// Parses and runs; returns the process exit code.
int run(int argc, const char* const* argv);

}  // namespace hg::cli
