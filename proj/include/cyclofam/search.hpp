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

#ifndef CYCLOFAM_SEARCH_HPP
#define CYCLOFAM_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclofam/family.hpp"

namespace cyclofam {

/// Summary of one validated family.
struct PassingFamily {
    Rational rho;
    std::uint64_t D = 0;
    std::uint64_t g = 0;
    std::size_t deg_t = 0;
};

/// Best family for one embedding degree, mirroring the quadruple
/// (rho_k, D, g, deg t(x)); no outcome when nothing passes validation.
struct SearchOutcome {
    Rational rho;
    std::string rho_display;  // 3 decimals, rounded half away from zero
    std::uint64_t D = 0;
    std::uint64_t g = 0;
    std::size_t deg_t = 0;
};

struct SearchRecord {
    std::uint64_t k = 0;
    std::optional<SearchOutcome> outcome;
    std::vector<PassingFamily> all_passing;  // only when collect_all is set
};

struct SearchOptions {
    ValidationMode mode = ValidationMode::table1;
    int threads = 0;  // 0: library default; 1: serial reference path
    bool collect_all = false;
};

/// True when k factors as 2^m p^n (k = 1 and pure powers of two included).
bool has_search_shape(std::uint64_t k);

/// Exact rho rounded to 3 decimals, half away from zero.
std::string rho_display_3dp(const Rational& rho);

/// Enumerates every admissible D and every g with gcd(g, k) = 1, validates
/// each candidate, and keeps the passer minimizing (rho, deg t, g, D).
/// Throws UnsupportedShapeError unless k = 2^m p^n.
SearchRecord search_k(std::uint64_t k, const SearchOptions& options = {});

/// search_k over every k <= k_max of the form 2^m p^n, ascending. The
/// (k, D, g) candidate space is swept in parallel (OpenMP) unless
/// threads = 1; records are bit-identical for any thread count.
std::vector<SearchRecord> search_range(std::uint64_t k_max, const SearchOptions& options = {});

}  // namespace cyclofam

#endif
