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

#include "cyclofam/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cyclofam/errors.hpp"
#include "cyclofam/integer.hpp"

namespace cyclofam {

std::optional<PrimePowerShape> two_power_times_prime_power(std::uint64_t k) {
    if (k < 2) return std::nullopt;
    PrimePowerShape s;
    std::uint64_t rest = k;
    while (rest % 2 == 0) {
        rest /= 2;
        ++s.m;
    }
    if (rest == 1) return s;  // pure power of two
    const auto fac = factorize(Integer(static_cast<unsigned long>(rest)));
    if (fac.size() != 1) return std::nullopt;
    s.p = fac[0].first.get_ui();
    s.n = fac[0].second;
    return s;
}

namespace {

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Phi_{p^n}(x) = sum_{a<p} x^{a p^(n-1)}
Polynomial phi_odd_prime_power(std::uint64_t p, unsigned n) {
    const std::uint64_t step = pow_u64(p, n - 1);
    std::vector<Rational> c(step * (p - 1) + 1);
    for (std::uint64_t a = 0; a < p; ++a) c[a * step] = Rational(1);
    return Polynomial(std::move(c));
}

// Phi_{2^m p^n}(x) = sum_{a<p} (-1)^a x^{a 2^(m-1) p^(n-1)}, m >= 1
Polynomial phi_mixed(unsigned m, std::uint64_t p, unsigned n) {
    const std::uint64_t step = (std::uint64_t{1} << (m - 1)) * pow_u64(p, n - 1);
    std::vector<Rational> c(step * (p - 1) + 1);
    for (std::uint64_t a = 0; a < p; ++a) c[a * step] = Rational(a % 2 == 0 ? 1 : -1);
    return Polynomial(std::move(c));
}

Polynomial x_pow_minus_one(std::uint64_t n) {
    std::vector<Rational> c(n + 1);
    c[0] = Rational(-1);
    c[n] = Rational(1);
    return Polynomial(std::move(c));
}

}  // namespace

Polynomial cyclotomic_poly(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
    if (n == 1) return Polynomial::parse("-1,1");  // x - 1
    if (const auto s = two_power_times_prime_power(n)) {
        if (s->n == 0) return Polynomial::monomial(1, std::uint64_t{1} << (s->m - 1)) +
                              Polynomial::constant(1);
        if (s->m == 0) return phi_odd_prime_power(s->p, s->n);
        return phi_mixed(s->m, s->p, s->n);
    }
    return cyclotomic_poly_generic(n);
}

Polynomial cyclotomic_poly_generic(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly_generic: n must be >= 1");
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, ascending over divisors of n
    std::map<std::uint64_t, Polynomial> phi;
    for (std::uint64_t d : divisors(n)) {
        Polynomial num = x_pow_minus_one(d);
        for (std::uint64_t e : divisors(d)) {
            if (e == d) continue;
            auto [q, r] = num.divrem(phi.at(e));
            if (!r.is_zero())
                throw Error("cyclotomic_poly_generic: non-exact divisor product");
            num = std::move(q);
        }
        phi.emplace(d, std::move(num));
    }
    return phi.at(n);
}

std::shared_ptr<const CycloModulus> CycloModulus::create(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("CycloModulus: k must be >= 1");
    Polynomial mod = cyclotomic_poly(k);
    const std::uint64_t phi = mod.degree().value();
    return std::shared_ptr<const CycloModulus>(
        new CycloModulus(k, phi, std::move(mod), two_power_times_prime_power(k)));
}

// Adds c * (x^i mod Phi_k) into acc, for 0 <= i < k. The closed forms write
// at most p coefficients.
void CycloModulus::accumulate_power(std::vector<Rational>& acc, std::uint64_t i,
                                    const Rational& c) const {
    if (i < phi_) {
        acc[i] += c;
        return;
    }
    const PrimePowerShape& s = *shape_;
    if (s.n == 0) {
        // k = 2^m: x^(k/2) = -1
        acc[i - phi_] -= c;
        return;
    }
    if (s.m == 0) {
        // k = p^n: x^(phi + h) = -sum_{a <= p-2} x^(a p^(n-1) + h)
        const std::uint64_t step = pow_u64(s.p, s.n - 1);
        const std::uint64_t h = i - phi_;
        for (std::uint64_t a = 0; a + 1 < s.p; ++a) acc[a * step + h] -= c;
        return;
    }
    // k = 2^m p^n, m >= 1: let E = 2^(m-1) p^(n-1), so Phi_k alternates on
    // multiples of E and x^(k/2) = -1 drives the middle band.
    const std::uint64_t E = (std::uint64_t{1} << (s.m - 1)) * pow_u64(s.p, s.n - 1);
    const std::uint64_t half = E * s.p;
    if (i <= half) {
        const std::uint64_t h = half - i;
        if (h == 0) {
            acc[0] -= c;
            return;
        }
        for (std::uint64_t a = 0; a + 1 < s.p; ++a) {
            if (a % 2 == 0) acc[(a + 1) * E - h] -= c;
            else acc[(a + 1) * E - h] += c;
        }
        return;
    }
    if (i < k_ - E) {
        acc[i - half] -= c;
        return;
    }
    const std::uint64_t h = k_ - i;
    for (std::uint64_t a = 0; a + 1 < s.p; ++a) {
        if (a % 2 == 0) acc[(a + 1) * E - h] += c;
        else acc[(a + 1) * E - h] -= c;
    }
}

Polynomial CycloModulus::reduce(const Polynomial& a) const {
    if (a.size() <= phi_) return a;
    if (!shape_) return a.divrem(modulus_).second;
    std::vector<Rational> acc(phi_);
    const auto& coeffs = a.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        accumulate_power(acc, i % k_, coeffs[i]);
    }
    return Polynomial(std::move(acc));
}

Polynomial CycloModulus::power_of_x(std::uint64_t i) const {
    i %= k_;
    if (i < phi_) return Polynomial::monomial(1, i);
    if (!shape_) return Polynomial::monomial(1, i).divrem(modulus_).second;
    std::vector<Rational> acc(phi_);
    accumulate_power(acc, i, Rational(1));
    return Polynomial(std::move(acc));
}

CycloElement::CycloElement(CycloModulusPtr mod, Polynomial value) : mod_(std::move(mod)) {
    if (!mod_) throw std::invalid_argument("CycloElement: null modulus");
    residue_ = mod_->reduce(value);
}

namespace {

void require_same_modulus(const CycloElement& a, const CycloElement& b) {
    if (a.modulus()->k() != b.modulus()->k())
        throw std::invalid_argument("CycloElement: modulus mismatch (k=" +
                                    std::to_string(a.modulus()->k()) + " vs k=" +
                                    std::to_string(b.modulus()->k()) + ")");
}

}  // namespace

CycloElement CycloElement::operator-() const { return {mod_, -residue_}; }

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    require_same_modulus(a, b);
    return {a.mod_, a.residue_ + b.residue_};
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    require_same_modulus(a, b);
    return {a.mod_, a.residue_ - b.residue_};
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    require_same_modulus(a, b);
    return {a.mod_, a.residue_ * b.residue_};
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    require_same_modulus(a, b);
    return a.residue_ == b.residue_;
}

CycloElement ring_mul(const CycloElement& a, const CycloElement& b) { return a * b; }

CycloElement power_of_x_mod(const CycloModulusPtr& mod, const Integer& i) {
    if (i < 0) throw std::invalid_argument("power_of_x_mod: exponent must be >= 0");
    const Integer r = i % Integer(static_cast<unsigned long>(mod->k()));
    return {mod, mod->power_of_x(r.get_ui())};
}

int legendre_symbol(const Integer& a, const Integer& p) {
    if (p <= 2 || !is_probable_prime(p))
        throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

std::uint64_t conductor(std::uint64_t D) {
    if (D == 0) throw std::invalid_argument("conductor: D must be >= 1");
    if (!is_squarefree(Integer(static_cast<unsigned long>(D))))
        throw std::invalid_argument("conductor: D must be square-free");
    return D % 4 == 3 ? D : 4 * D;
}

std::vector<std::uint64_t> admissible_discriminants(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("admissible_discriminants: k must be >= 1");
    std::vector<std::uint64_t> out;
    // D = 3 (mod 4): conductor D, so D | k
    for (const std::uint64_t d : divisors(k))
        if (d % 4 == 3 && is_squarefree(Integer(static_cast<unsigned long>(d))))
            out.push_back(d);
    // otherwise: conductor 4D, so 4D | k
    if (k % 4 == 0)
        for (const std::uint64_t d : divisors(k / 4))
            if (d % 4 != 3 && is_squarefree(Integer(static_cast<unsigned long>(d))))
                out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

CycloElement sqrt_minus_d(const CycloModulusPtr& mod, std::uint64_t D) {
    const std::uint64_t k = mod->k();
    const std::uint64_t f = conductor(D);
    if (k % f != 0)
        throw FamilyNonexistentError(
            "sqrt(-" + std::to_string(D) + ") is not in Q(zeta_" + std::to_string(k) +
            "): conductor " + std::to_string(f) + " does not divide " + std::to_string(k));

    CycloElement s(mod, Polynomial::constant(1));
    std::uint64_t rest = D;
    bool even = false;
    if (rest % 2 == 0) {
        even = true;
        rest /= 2;
    }
    for (const auto& [p, e] : factorize(Integer(static_cast<unsigned long>(rest)))) {
        // Gauss sum: sum_a (a/p) zeta_p^a squares to (-1)^((p-1)/2) * p
        const std::uint64_t pu = p.get_ui();
        const std::uint64_t step = k / pu;
        std::vector<Rational> g(k);
        for (std::uint64_t a = 1; a < pu; ++a)
            g[a * step] = Rational(legendre_symbol(Integer(static_cast<unsigned long>(a)), p));
        s = s * CycloElement(mod, Polynomial(std::move(g)));
    }
    if (even) {
        // sqrt(-2) = zeta_8^3 + zeta_8; here 8 | k since 8 | conductor(D) | k
        Polynomial z8 = Polynomial::monomial(1, 3 * (k / 8)) + Polynomial::monomial(1, k / 8);
        s = s * CycloElement(mod, std::move(z8));
    }

    const Integer neg_d = -Integer(static_cast<unsigned long>(D));
    const CycloElement minus_d(mod, Polynomial::constant(Rational(neg_d)));
    CycloElement sq = s * s;
    if (sq == minus_d) return s;
    if (sq == -minus_d) {
        // raw product squares to +D; multiply by zeta_4 (4 | k holds in
        // exactly these cases)
        s = s * CycloElement(mod, mod->power_of_x(k / 4));
        if (s * s == minus_d) return s;
    }
    throw Error("sqrt_minus_d: Gauss-sum composition failed to square to -D (internal)");
}

}  // namespace cyclofam
