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

#include "cyclofam/family.hpp"

#include <numeric>
#include <stdexcept>

#include "cyclofam/errors.hpp"
#include "cyclofam/factorization.hpp"

namespace cyclofam {

namespace {

// Phi_k(t - 1) reduced mod Phi_k, using t - 1 = x^g in the quotient ring:
// the image is sum_j c_j x^(g j) over the nonzero coefficients c_j of Phi_k.
Polynomial phi_at_t_minus_one(const CycloModulusPtr& mod, std::uint64_t g) {
    const Polynomial& r = mod->modulus();
    Polynomial acc;
    for (std::size_t j = 0; j < r.size(); ++j) {
        const Rational c = r.coeff(j);
        if (c.is_zero()) continue;
        acc += mod->power_of_x((g * j) % mod->k()) * c;
    }
    return acc;
}

std::size_t degree_or_zero(const Polynomial& f) {
    return f.degree().value_or(0);
}

}  // namespace

Rational rho_of(const Polynomial& q, const Polynomial& r) {
    if (q.is_zero() || r.is_zero() || r.is_constant())
        throw std::invalid_argument("rho_of: q must be nonzero and deg r >= 1");
    return {Integer(static_cast<unsigned long>(q.degree().value())),
            Integer(static_cast<unsigned long>(r.degree().value()))};
}

FamilyCandidate construct_candidate(const FamilyParams& params) {
    if (params.k < 1) throw std::invalid_argument("construct_candidate: k must be >= 1");
    const CycloModulusPtr mod = CycloModulus::create(params.k);
    const CycloElement s = sqrt_minus_d(mod, params.D);
    return construct_candidate(mod, s, params.D, params.g);
}

FamilyCandidate construct_candidate(const CycloModulusPtr& mod, const CycloElement& sqrt_d,
                                    std::uint64_t D, std::uint64_t g) {
    const std::uint64_t k = mod->k();
    if (g < 1 || g > k || std::gcd(g, k) != 1)
        throw std::invalid_argument("construct_candidate: need 1 <= g <= k with gcd(g, k) = 1");

    FamilyCandidate c;
    c.params = {k, D, g};
    c.r = mod->modulus();
    c.s = sqrt_d.residue();

    const Polynomial xg = mod->power_of_x(g);
    c.t = xg + Polynomial::constant(1);

    // y maps to (eta - 1)/sqrt(-D) = -(1/D)(eta - 1) sqrt(-D)
    const Polynomial y1 = mod->reduce((xg - Polynomial::constant(1)) * c.s);
    const Rational d_rat(Integer(static_cast<unsigned long>(D)));
    c.y = -(y1 / d_rat);

    c.q = (c.t * c.t + d_rat * (c.y * c.y)) / Rational(4);

    if (c.q.is_zero())
        throw Error("construct_candidate: degenerate zero q (internal)");
    const std::size_t max_deg = std::max(degree_or_zero(c.t), degree_or_zero(c.y));
    if (c.q.degree().value() != 2 * max_deg)
        throw Error("construct_candidate: deg q != 2 max(deg t, deg y) (internal)");
    if (!mod->reduce(c.q + Polynomial::constant(1) - c.t).is_zero())
        throw Error("construct_candidate: r does not divide q + 1 - t (internal)");
    if (!phi_at_t_minus_one(mod, g).is_zero())
        throw Error("construct_candidate: r does not divide Phi_k(t - 1) (internal)");

    c.rho = rho_of(c.q, c.r);
    const Rational via_degrees(Integer(static_cast<unsigned long>(2 * max_deg)),
                               Integer(static_cast<unsigned long>(mod->phi())));
    if (c.rho != via_degrees)
        throw Error("construct_candidate: rho disagrees with degree formula (internal)");
    return c;
}

bool verify_candidate_identities(const FamilyCandidate& c) {
    return verify_candidate_identities(c, CycloModulus::create(c.params.k));
}

bool verify_candidate_identities(const FamilyCandidate& c, const CycloModulusPtr& mod) {
    const Rational d_rat(Integer(static_cast<unsigned long>(c.params.D)));
    const Polynomial four_q = c.q * Rational(4);
    if (four_q != c.t * c.t + d_rat * (c.y * c.y)) return false;

    // long-division route, independent of the ring fast paths
    if (!(c.q + Polynomial::constant(1) - c.t).divrem(c.r).second.is_zero()) return false;

    const std::size_t max_deg = std::max(degree_or_zero(c.t), degree_or_zero(c.y));
    if (c.q.is_zero() || c.q.degree().value() != 2 * max_deg) return false;

    if (!phi_at_t_minus_one(mod, c.params.g).is_zero()) return false;
    if (mod->modulus() != c.r) return false;
    return c.rho == rho_of(c.q, c.r);
}

std::pair<bool, Integer> represents_integers(const Polynomial& f) {
    const Integer N = f.denominator_lcm();
    if (N == 1) return {true, N};
    // f(n) integral iff N | (N f)(n); integer Horner keeps the scan cheap
    std::vector<Integer> scaled(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) scaled[i] = (f.coeff(i) * Rational(N)).num();
    for (Integer n = 0; n < N; ++n) {
        Integer acc = 0;
        for (std::size_t i = scaled.size(); i-- > 0;) acc = acc * n + scaled[i];
        if (mpz_divisible_p(acc.get_mpz_t(), N.get_mpz_t())) return {true, N};
    }
    return {false, N};
}

namespace {

struct GcdCheck {
    Integer M{0};
    std::optional<Integer> blocking;
    bool ok = false;
};

// N * f with integer coefficients; f(n) is integral iff N | value(n), and
// then f(n) = value(n) / N. Keeps the scans in plain integer arithmetic.
struct ScaledPoly {
    std::vector<Integer> coeffs;
    Integer N;

    explicit ScaledPoly(const Polynomial& f) : N(f.denominator_lcm()) {
        coeffs.resize(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) coeffs[i] = (f.coeff(i) * Rational(N)).num();
    }

    Integer eval(const Integer& n) const {
        Integer acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * n + coeffs[i];
        return acc;
    }

    // value of N * f at n, integral-ness of f(n), and f(n) itself
    bool integral_value(const Integer& n, Integer& out) const {
        const Integer v = eval(n);
        if (!mpz_divisible_p(v.get_mpz_t(), N.get_mpz_t())) return false;
        out = v / N;
        return true;
    }

    std::vector<std::uint64_t> coeffs_mod(std::uint64_t m) const {
        std::vector<std::uint64_t> w(coeffs.size());
        const Integer mz(static_cast<unsigned long>(m));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Integer c = coeffs[i] % mz;
            if (c < 0) c += mz;
            w[i] = c.get_ui();
        }
        return w;
    }
};

std::uint64_t horner_mod(const std::vector<std::uint64_t>& w, std::uint64_t n,
                         std::uint64_t m) {
    std::uint64_t acc = 0;
    n %= m;
    for (std::size_t i = w.size(); i-- > 0;) acc = (acc * n + w[i]) % m;
    return acc;
}

std::uint64_t u64_powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

// Does p divide f(n) for every integer n with f(n) integral? Exact and
// bounded: integrality depends only on n mod N, and on each integral residue
// class the map t -> f(r + N t) is an integer-valued polynomial whose value
// gcd equals the gcd of its finite differences at t = 0..deg. So p divides
// the whole class iff the difference table of its values taken mod p is
// identically zero. Requires p coprime to N and both below 2^31.
bool prime_divides_all_values_u64(const ScaledPoly& scaled, std::uint64_t p,
                                  std::uint64_t n_small) {
    const std::size_t d = scaled.coeffs.size() - 1;
    const auto w_mod_n = scaled.coeffs_mod(n_small);
    const auto w_mod_p = scaled.coeffs_mod(p);
    const std::uint64_t n_inv = u64_powmod(n_small % p, p - 2, p);  // p prime, p coprime to N
    std::vector<std::uint64_t> diffs(d + 1);
    for (std::uint64_t r = 0; r < n_small; ++r) {
        if (horner_mod(w_mod_n, r, n_small) != 0) continue;  // class not integral
        for (std::size_t t = 0; t <= d; ++t)
            diffs[t] = horner_mod(w_mod_p, (r + n_small * t) % p, p) * n_inv % p;
        for (std::size_t level = 0; level <= d; ++level) {
            if (diffs[0] != 0) return false;
            for (std::size_t t = 0; t + level + 1 <= d; ++t)
                diffs[t] = (diffs[t + 1] + p - diffs[t]) % p;
        }
    }
    return true;
}

// Fallback for awkward moduli (p dividing N, or sizes past 2^31): the
// periodic scan over [0, pN), in exact arithmetic.
bool prime_divides_all_values_scan(const ScaledPoly& scaled, const Integer& p) {
    const Integer limit = p * scaled.N;
    Integer value;
    for (Integer x = 0; x < limit; ++x)
        if (scaled.integral_value(x, value) && value % p != 0) return false;
    return true;
}

bool prime_divides_all_values(const ScaledPoly& scaled, const Integer& p) {
    if (mpz_fits_ulong_p(p.get_mpz_t()) && mpz_fits_ulong_p(scaled.N.get_mpz_t())) {
        const std::uint64_t pu = p.get_ui();
        const std::uint64_t nu = scaled.N.get_ui();
        if (pu < (std::uint64_t{1} << 31) && nu < (std::uint64_t{1} << 31) && nu % pu != 0)
            return prime_divides_all_values_u64(scaled, pu, nu);
    }
    return prime_divides_all_values_scan(scaled, p);
}

// gcd({f(x) in Z : x in Z}) = 1? Any prime dividing every integer value
// divides the gcd of the values at finitely many integral points, so the
// candidate primes come from factoring such a gcd; each candidate then gets
// the exact per-class divisibility test above. M is the gcd of the integer
// values over the first period [0, N), widened only when every value there
// is a root. For the decision the gcd keeps absorbing values past the
// period, which sheds spurious primes and never changes the answer.
GcdCheck value_gcd_check(const Polynomial& f, const Integer& N, ReportDetail detail) {
    (void)detail;
    GcdCheck out;
    const ScaledPoly scaled(f);
    Integer value;

    // integrality pre-filter in machine words when N allows it
    std::vector<std::uint64_t> w_mod_n;
    std::uint64_t n_small = 0;
    if (N > 1 && mpz_fits_ulong_p(N.get_mpz_t()) && N.get_ui() < (std::uint64_t{1} << 31)) {
        n_small = N.get_ui();
        w_mod_n = scaled.coeffs_mod(n_small);
    }
    const auto integral_at = [&](const Integer& n, Integer& v) {
        if (n_small != 0 && horner_mod(w_mod_n, mpz_fdiv_ui(n.get_mpz_t(), n_small), n_small) != 0)
            return false;
        return scaled.integral_value(n, v);
    };

    const Integer scan_end = N * (Integer(static_cast<unsigned long>(f.size())) + 2);
    Integer g = 0;
    Integer n = 0;
    for (; n < N; ++n)
        if (integral_at(n, value)) g = cyclofam::gcd(g, value);
    for (; g == 0 && n < scan_end; ++n)
        if (integral_at(n, value)) g = cyclofam::gcd(g, value);
    out.M = g;
    if (g == 0) return out;  // no nonzero integer value in reach: cannot happen for nonzero f

    Integer decision = g;
    for (int hits = 0; n < scan_end && hits < 24 && decision != 1; ++n) {
        if (!integral_at(n, value) || value == 0) continue;
        decision = cyclofam::gcd(decision, value);
        ++hits;
    }
    if (decision == 1) {
        out.ok = true;
        return out;
    }
    for (const auto& [p, e] : factorize(decision)) {
        if (prime_divides_all_values(scaled, p)) {
            out.blocking = p;
            return out;
        }
    }
    out.ok = true;
    return out;
}

}  // namespace

ReprReport represents_primes(const Polynomial& f, ReportDetail detail) {
    ReprReport rep;
    rep.non_constant = !f.is_constant();
    if (detail == ReportDetail::quick && !rep.non_constant) return rep;

    rep.positive_leading = !f.is_zero() && f.leading().sign() > 0;
    if (detail == ReportDetail::quick && !rep.positive_leading) return rep;

    auto [ri, N] = represents_integers(f);
    rep.represents_integers = ri;
    rep.N = N;
    if (detail == ReportDetail::quick && !ri) return rep;

    bool gcd_ok = false;
    if (ri && rep.non_constant) {
        const GcdCheck gc = value_gcd_check(f, N, detail);
        rep.value_gcd_M = gc.M;
        rep.blocking_prime = gc.blocking;
        gcd_ok = gc.ok;
        if (detail == ReportDetail::quick && !gcd_ok) return rep;
    }

    if (rep.non_constant) rep.irreducible = irreducible_over_q(f);

    rep.represents_primes = rep.non_constant && rep.positive_leading &&
                            rep.represents_integers && gcd_ok && rep.irreducible;
    return rep;
}

namespace {

// Exact rational e-th root, if it exists.
std::optional<Rational> rational_root(const Rational& c, unsigned e) {
    if (e == 1) return c;
    if (c.is_zero()) return Rational(0);
    if (c.sign() < 0 && e % 2 == 0) return std::nullopt;
    const Integer num = cyclofam::abs(c.num());
    const Integer den = c.den();
    Integer rn, rd;
    if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), e)) return std::nullopt;
    if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), e)) return std::nullopt;
    Rational r(rn, rd);
    return c.sign() < 0 ? -r : r;
}

}  // namespace

std::pair<Polynomial, unsigned> perfect_power_root(const Polynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("perfect_power_root: zero polynomial");
    if (f.is_constant()) return {f, 1};

    const SquarefreeDecomposition dec = squarefree_decomposition(f);
    unsigned e0 = 0;
    for (const auto& [part, mult] : dec.parts)
        e0 = std::gcd(e0, static_cast<unsigned>(mult));

    std::vector<unsigned> es;
    for (unsigned e = e0; e >= 1; --e)
        if (e0 % e == 0) es.push_back(e);

    for (const unsigned e : es) {
        if (e == 1) break;
        const auto root = rational_root(dec.content, e);
        if (!root) continue;
        Polynomial h = Polynomial::constant(*root);
        for (const auto& [part, mult] : dec.parts)
            h = h * part.pow(static_cast<unsigned>(mult) / e);
        if (e % 2 == 0 && h.leading().sign() < 0) h = -h;
        if (h.pow(e) != f)
            throw Error("perfect_power_root: reconstruction check failed (internal)");
        return {h, e};
    }
    return {f, 1};
}

ValidationReport validate_complete_family(const FamilyCandidate& c, ValidationMode mode,
                                          ReportDetail detail) {
    ValidationReport rep;
    rep.mode = mode;

    auto [yi, yN] = represents_integers(c.y);
    rep.y_represents_integers = yi;
    rep.y_N = yN;

    if (mode == ValidationMode::table1) {
        if (detail == ReportDetail::quick && !yi) return rep;
        rep.q_report = represents_primes(c.q, detail);
        rep.pass = yi && rep.q_report.represents_primes;
        return rep;
    }

    // strict: q may be a proper power of a prime-representing polynomial
    if (detail == ReportDetail::full) rep.q_report = represents_primes(c.q, detail);
    if (detail == ReportDetail::quick && !yi) return rep;

    auto [base, e] = perfect_power_root(c.q);
    rep.power_base = base;
    rep.power_exponent = e;
    rep.base_report = represents_primes(base, detail);
    if (detail == ReportDetail::quick && !rep.base_report->represents_primes) return rep;

    rep.r_report = represents_primes(c.r, detail);
    if (detail == ReportDetail::quick && !rep.r_report->represents_primes) return rep;

    const CycloModulusPtr mod = CycloModulus::create(c.params.k);
    rep.divisibility_ok =
        mod->reduce(c.q + Polynomial::constant(1) - c.t).is_zero() &&
        phi_at_t_minus_one(mod, c.params.g).is_zero();

    rep.pass = yi && rep.base_report->represents_primes && rep.r_report->represents_primes &&
               rep.divisibility_ok;
    return rep;
}

}  // namespace cyclofam
