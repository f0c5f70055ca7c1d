/*
   Copyright 2026 The cyclofam authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLOFAM_BOUNDS_HPP
#define CYCLOFAM_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclofam/family.hpp"

namespace cyclofam {

/// How a lower bound on the rho-value is meant:
///   attainable_min - the minimum over g equals the bound exactly,
///   non_strict     - rho >= bound for every candidate,
///   strict         - rho >  bound for every candidate.
enum class BoundKind { attainable_min, non_strict, strict };

struct RhoBound {
    Rational value;
    BoundKind kind = BoundKind::non_strict;
};

/// The case table of rho-value lower bounds for k = 2^m p^n and an
/// admissible discriminant D. Throws UnsupportedShapeError when k is not of
/// that form and OutsideBoundTableError when the pair has no table entry
/// (inadmissible D, or one of the small-k cases the table excludes:
/// k = 2^m with m < 3, and p = 3 with k = 3 or 6).
RhoBound theorem_bound(std::uint64_t k, std::uint64_t D);

/// Candidate-level check of a table entry: every g with gcd(g, k) = 1 is
/// constructed (no primality filtering) and its exact rho compared against
/// the bound; for attainable_min the minimum over g must equal the bound.
struct AuditReport {
    std::uint64_t k = 0;
    std::uint64_t D = 0;
    RhoBound bound;
    Rational min_rho;
    std::uint64_t argmin_g = 0;
    std::vector<std::string> violations;  // "(k, D, g): rho ..." for each failed comparison
    bool pass = false;
};

AuditReport audit(std::uint64_t k, std::uint64_t D);

/// One line of the bounds listing: pairs outside the case table carry no
/// bound or report.
struct BoundsLine {
    std::uint64_t k = 0;
    std::uint64_t D = 0;
    std::optional<AuditReport> report;
};

/// Audits every (k <= k_max of the form 2^m p^n, admissible D). The sweep
/// over pairs is OpenMP-parallel when threads != 1; results are ordered by
/// (k, D) regardless of the thread count. threads = 0 picks the default.
std::vector<BoundsLine> audit_range(std::uint64_t k_max, int threads = 0);

std::string to_string(BoundKind kind);

}  // namespace cyclofam

#endif
