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

#include "highgenus/error.hpp"

namespace hg {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::surgery_conflict: return "surgery-conflict";
        case ErrorKind::length_mismatch: return "length-mismatch";
        case ErrorKind::self_sew_unsupported: return "self-sew-unsupported";
        case ErrorKind::blueprint_too_dense: return "blueprint-too-dense";
        case ErrorKind::not_simple: return "not-simple";
        case ErrorKind::separating_cut: return "separating-cut";
        case ErrorKind::one_sided_cut: return "one-sided-cut";
        case ErrorKind::repair_infeasible: return "repair-infeasible";
        case ErrorKind::symmetrize_failed: return "symmetrize-failed";
        case ErrorKind::dual_undefined: return "dual-undefined";
        case ErrorKind::bounded_complex: return "bounded-complex";
        case ErrorKind::not_a_cycle: return "not-a-cycle";
        case ErrorKind::no_such_handle: return "no-such-handle";
        case ErrorKind::invalid_syndrome: return "invalid-syndrome";
        case ErrorKind::oracle_infeasible: return "oracle-infeasible";
        case ErrorKind::inconsistent_correction: return "inconsistent-correction";
        case ErrorKind::fit_underdetermined: return "fit-underdetermined";
        case ErrorKind::undefined_scaling: return "undefined-scaling";
        case ErrorKind::internal_error: return "internal-error";
        case ErrorKind::io_error: return "io-error";
        case ErrorKind::format_error: return "format-error";
    }
    return "unknown";
}

ErrorFamily family_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_parameter:
        case ErrorKind::undefined_scaling:
        case ErrorKind::format_error:
            return ErrorFamily::config;
        case ErrorKind::surgery_conflict:
        case ErrorKind::length_mismatch:
        case ErrorKind::self_sew_unsupported:
        case ErrorKind::blueprint_too_dense:
        case ErrorKind::not_simple:
        case ErrorKind::separating_cut:
        case ErrorKind::one_sided_cut:
        case ErrorKind::symmetrize_failed:
        case ErrorKind::dual_undefined:
        case ErrorKind::bounded_complex:
        case ErrorKind::no_such_handle:
            return ErrorFamily::surgery;
        case ErrorKind::io_error:
            return ErrorFamily::io;
        case ErrorKind::repair_infeasible:
        case ErrorKind::oracle_infeasible:
        case ErrorKind::fit_underdetermined:
        case ErrorKind::invalid_syndrome:
        case ErrorKind::not_a_cycle:
        case ErrorKind::inconsistent_correction:
            return ErrorFamily::infeasible;
        case ErrorKind::internal_error:
            return ErrorFamily::internal;
    }
    return ErrorFamily::internal;
}

}  // namespace hg
