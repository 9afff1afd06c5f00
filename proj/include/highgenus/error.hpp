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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hg {

enum class ErrorKind {
    invalid_parameter,
    surgery_conflict,
    length_mismatch,
    self_sew_unsupported,
    blueprint_too_dense,
    not_simple,
    separating_cut,
    one_sided_cut,
    repair_infeasible,
    symmetrize_failed,
    dual_undefined,
    bounded_complex,
    not_a_cycle,
    no_such_handle,
    invalid_syndrome,
    oracle_infeasible,
    inconsistent_correction,
    fit_underdetermined,
    undefined_scaling,
    internal_error,
    io_error,
    format_error,
};

/// Coarse grouping used by the command-line tool to pick an exit code.
enum class ErrorFamily { config = 2, surgery = 3, io = 4, infeasible = 5, internal = 1 };

std::string_view to_string(ErrorKind kind);
ErrorFamily family_of(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// Message without the kind prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace hg
