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

#include "cyclofam/search.hpp"

#include <numeric>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cyclofam/errors.hpp"

namespace cyclofam {

bool has_search_shape(std::uint64_t k) {
    return k == 1 || two_power_times_prime_power(k).has_value();
}

std::string rho_display_3dp(const Rational& rho) {
    const bool negative = rho.sign() < 0;
    const Integer scaled = cyclofam::abs(rho.num()) * 1000;
    const Integer den = rho.den();
    Integer q = scaled / den;
    const Integer rem = scaled % den;
    if (2 * rem >= den) q += 1;  // half away from zero
    const Integer whole = q / 1000;
    const Integer frac = q % 1000;
    std::string fs = frac.get_str();
    fs.insert(0, 3 - fs.size(), '0');
    return (negative ? "-" : "") + whole.get_str() + "." + fs;
}

namespace {

// selection order: smallest rho, then deg t, then g, then D
bool better(const PassingFamily& a, const PassingFamily& b) {
    if (a.rho != b.rho) return a.rho < b.rho;
    return std::tie(a.deg_t, a.g, a.D) < std::tie(b.deg_t, b.g, b.D);
}

SearchRecord fold_record(std::uint64_t k, std::vector<std::optional<PassingFamily>>& slots,
                         bool collect_all) {
    SearchRecord rec;
    rec.k = k;
    std::optional<PassingFamily> best;
    for (auto& slot : slots) {
        if (!slot) continue;
        if (!best || better(*slot, *best)) best = *slot;
        if (collect_all) rec.all_passing.push_back(*slot);
    }
    if (best)
        rec.outcome = SearchOutcome{best->rho, rho_display_3dp(best->rho), best->D, best->g,
                                    best->deg_t};
    return rec;
}

struct PairContext {
    std::uint64_t k = 0;
    std::uint64_t D = 0;
    CycloModulusPtr mod;
    std::optional<CycloElement> sqrt_d;
};

struct Job {
    std::size_t pair = 0;
    std::uint64_t g = 0;
    std::size_t slot = 0;  // position within the per-k slot array
};

std::optional<PassingFamily> evaluate(const PairContext& ctx, std::uint64_t g,
                                      ValidationMode mode) {
    const FamilyCandidate c = construct_candidate(ctx.mod, *ctx.sqrt_d, ctx.D, g);
    const ValidationReport rep = validate_complete_family(c, mode, ReportDetail::quick);
    if (!rep.pass) return std::nullopt;
    return PassingFamily{c.rho, ctx.D, g, c.t.degree().value_or(0)};
}

}  // namespace

SearchRecord search_k(std::uint64_t k, const SearchOptions& options) {
    if (!has_search_shape(k))
        throw UnsupportedShapeError("search_k: k = " + std::to_string(k) +
                                    " is not of the form 2^m p^n");
    std::vector<std::optional<PassingFamily>> slots;
    CycloModulusPtr mod;
    for (const std::uint64_t D : admissible_discriminants(k)) {
        if (!mod) mod = CycloModulus::create(k);
        const CycloElement s = sqrt_minus_d(mod, D);
        const PairContext ctx{k, D, mod, s};
        for (std::uint64_t g = 1; g <= k; ++g) {
            if (std::gcd(g, k) != 1) continue;
            slots.push_back(evaluate(ctx, g, options.mode));
        }
    }
    return fold_record(k, slots, options.collect_all);
}

std::vector<SearchRecord> search_range(std::uint64_t k_max, const SearchOptions& options) {
    std::vector<std::uint64_t> ks;
    for (std::uint64_t k = 1; k <= k_max; ++k)
        if (has_search_shape(k)) ks.push_back(k);

    // one context per (k, D): the modulus and sqrt(-D) are shared read-only
    std::vector<PairContext> pairs;
    std::vector<Job> jobs;
    std::vector<std::size_t> slots_per_k(ks.size(), 0);
    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
        const std::uint64_t k = ks[ki];
        CycloModulusPtr mod;
        for (const std::uint64_t D : admissible_discriminants(k)) {
            if (!mod) mod = CycloModulus::create(k);
            PairContext ctx;
            ctx.k = k;
            ctx.D = D;
            ctx.mod = mod;
            ctx.sqrt_d = sqrt_minus_d(mod, D);
            pairs.push_back(std::move(ctx));
            for (std::uint64_t g = 1; g <= k; ++g) {
                if (std::gcd(g, k) != 1) continue;
                jobs.push_back(Job{pairs.size() - 1, g, slots_per_k[ki]++});
            }
        }
    }

    // per-k result slots, written independently by each job
    std::vector<std::vector<std::optional<PassingFamily>>> slots(ks.size());
    std::vector<std::size_t> job_k(jobs.size());
    for (std::size_t ki = 0, j = 0; ki < ks.size(); ++ki) {
        slots[ki].resize(slots_per_k[ki]);
        while (j < jobs.size() && pairs[jobs[j].pair].k == ks[ki]) job_k[j++] = ki;
    }

    const auto run_one = [&](std::size_t j) {
        const Job& job = jobs[j];
        slots[job_k[j]][job.slot] = evaluate(pairs[job.pair], job.g, options.mode);
    };

    if (options.threads == 1) {
        // serial reference path, kept independent of OpenMP for testing
        for (std::size_t j = 0; j < jobs.size(); ++j) run_one(j);
    } else {
#ifdef _OPENMP
        const int nthreads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
        for (std::size_t j = 0; j < jobs.size(); ++j) run_one(j);
#else
        for (std::size_t j = 0; j < jobs.size(); ++j) run_one(j);
#endif
    }

    std::vector<SearchRecord> records(ks.size());
    for (std::size_t ki = 0; ki < ks.size(); ++ki)
        records[ki] = fold_record(ks[ki], slots[ki], options.collect_all);
    return records;
}

}  // namespace cyclofam
