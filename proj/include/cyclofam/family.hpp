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

#ifndef CYCLOFAM_FAMILY_HPP
#define CYCLOFAM_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "cyclofam/cyclotomic.hpp"
#include "cyclofam/polynomial.hpp"

namespace cyclofam {

/// Input triple for the constructor: embedding degree k, CM discriminant D
/// (square-free, conductor dividing k) and the exponent g selecting the
/// primitive root of unity eta = zeta_k^g (1 <= g <= k, gcd(g, k) = 1).
struct FamilyParams {
    std::uint64_t k = 0;
    std::uint64_t D = 0;
    std::uint64_t g = 0;
};

/// A constructed polynomial family with r(x) = Phi_k(x). On construction the
/// exact identities 4q = t^2 + D y^2, r | q + 1 - t, r | Phi_k(t - 1) and
/// deg q = 2 max(deg t, deg y) have all been checked.
struct FamilyCandidate {
    FamilyParams params;
    Polynomial t;  // x^g + 1 reduced mod r
    Polynomial r;  // Phi_k
    Polynomial y;  // -(1/D)(x^g - 1) s  reduced mod r
    Polynomial q;  // (t^2 + D y^2) / 4
    Polynomial s;  // image of sqrt(-D)
    Rational rho;  // deg q / deg r, exact
};

/// Builds the candidate for (k, D, g). Throws FamilyNonexistentError when
/// conductor(D) does not divide k, std::invalid_argument on bad g or D.
FamilyCandidate construct_candidate(const FamilyParams& params);

/// Same, reusing a modulus and sqrt(-D) computed once per (k, D).
FamilyCandidate construct_candidate(const CycloModulusPtr& mod, const CycloElement& sqrt_d,
                                    std::uint64_t D, std::uint64_t g);

/// Recomputes all four structural identities from the stored polynomials,
/// including the CM identity from scratch and the divisibility checks by
/// long division. Heavier than the constructor's checks; used by the audit
/// and the acceptance suite.
bool verify_candidate_identities(const FamilyCandidate& c);
bool verify_candidate_identities(const FamilyCandidate& c, const CycloModulusPtr& mod);

/// deg q / deg r as an exact rational.
Rational rho_of(const Polynomial& q, const Polynomial& r);

/// Outcome of the "represents primes" decision procedure with its witnesses:
/// N (lcm of coefficient denominators), M (gcd of the integer values over one
/// period) and the smallest prime dividing every integer value, if any.
struct ReprReport {
    bool non_constant = false;
    bool positive_leading = false;
    bool represents_integers = false;
    Integer N{1};
    bool irreducible = false;
    std::optional<Integer> value_gcd_M;
    std::optional<Integer> blocking_prime;
    bool represents_primes = false;
};

/// full: every report field is computed. quick: stops at the first failed
/// condition (cheapest first), leaving later fields defaulted.
enum class ReportDetail { full, quick };

/// f(n) is an integer for some integer n; decided by scanning 0 <= n < N.
/// Returns the verdict and the scan modulus N.
std::pair<bool, Integer> represents_integers(const Polynomial& f);

/// Non-constant, irreducible, positive leading coefficient, represents
/// integers, and the integer values have gcd 1.
ReprReport represents_primes(const Polynomial& f, ReportDetail detail = ReportDetail::full);

/// Maximal e with f = h^e for a rational polynomial h; e = 1 when f is not a
/// proper power. For even e, h is normalized to a positive leading
/// coefficient. Requires f nonzero.
std::pair<Polynomial, unsigned> perfect_power_root(const Polynomial& f);

/// table1 replicates the search procedure: q must represent primes and y must
/// represent integers (t is automatic since Phi_k is monic over Z). strict
/// additionally allows q = h^e, requiring h to represent primes, and checks
/// r itself plus the divisibility conditions.
enum class ValidationMode { table1, strict };

struct ValidationReport {
    ValidationMode mode = ValidationMode::table1;
    ReprReport q_report;
    bool y_represents_integers = false;
    Integer y_N{1};
    std::optional<Polynomial> power_base;  // strict only: q = base^exponent
    unsigned power_exponent = 1;
    std::optional<ReprReport> base_report;
    std::optional<ReprReport> r_report;
    bool divisibility_ok = true;
    bool pass = false;
};

ValidationReport validate_complete_family(const FamilyCandidate& c,
                                          ValidationMode mode = ValidationMode::table1,
                                          ReportDetail detail = ReportDetail::full);

}  // namespace cyclofam

#endif
