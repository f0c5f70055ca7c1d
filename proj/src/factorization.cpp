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

#include "cyclofam/factorization.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "cyclofam/errors.hpp"
#include "cyclofam/integer.hpp"

namespace cyclofam {

namespace {

// ---------------------------------------------------------------------------
// Integer polynomials (ascending coefficients, trailing entry nonzero).
// ---------------------------------------------------------------------------

using IPoly = std::vector<Integer>;

void iz_normalize(IPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int iz_deg(const IPoly& a) { return static_cast<int>(a.size()) - 1; }

IPoly iz_derivative(const IPoly& a) {
    if (a.size() <= 1) return {};
    IPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        d[i - 1] = a[i] * Integer(static_cast<unsigned long>(i));
    iz_normalize(d);
    return d;
}

Integer iz_content(const IPoly& a) {
    Integer g = 0;
    for (const auto& c : a) g = cyclofam::gcd(g, c);
    return g;  // 0 for the zero polynomial
}

// Primitive part with positive leading coefficient.
IPoly iz_primitive(IPoly a) {
    iz_normalize(a);
    if (a.empty()) return a;
    Integer g = iz_content(a);
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

// Exact division over Z; nullopt when b does not divide a.
std::optional<IPoly> iz_exact_div(const IPoly& a, const IPoly& b) {
    if (b.empty()) throw std::invalid_argument("iz_exact_div: zero divisor");
    if (a.empty()) return IPoly{};
    if (a.size() < b.size()) return std::nullopt;
    IPoly rem = a;
    IPoly quot(a.size() - b.size() + 1, Integer(0));
    const Integer& lb = b.back();
    for (std::size_t i = rem.size(); i-- >= b.size();) {
        if (rem[i] != 0) {
            if (!mpz_divisible_p(rem[i].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
            const Integer q = rem[i] / lb;
            quot[i - b.size() + 1] = q;
            for (std::size_t j = 0; j < b.size(); ++j)
                rem[i - b.size() + 1 + j] -= q * b[j];
        }
        if (i + 1 == b.size()) break;
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    iz_normalize(quot);
    return quot;
}


IPoly iz_div_or_throw(const IPoly& a, const IPoly& b) {
    auto q = iz_exact_div(a, b);
    if (!q) throw Error("internal: expected exact division over Z");
    return std::move(*q);
}

// Pseudo-remainder up to a constant factor (enough for a primitive PRS).
IPoly iz_prem(IPoly a, const IPoly& b) {
    const Integer& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        iz_normalize(a);
    }
    return a;
}

// Primitive PRS gcd; result is primitive with positive leading coefficient.
IPoly iz_gcd(IPoly a, IPoly b) {
    a = iz_primitive(std::move(a));
    b = iz_primitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (b.size() > 1) {
        IPoly r = iz_prem(a, b);
        if (r.empty()) return iz_primitive(std::move(b));
        a = std::move(b);
        b = iz_primitive(std::move(r));
    }
    return IPoly{Integer(1)};  // nonzero constant remainder: coprime
}

Polynomial iz_to_poly(const IPoly& a) {
    std::vector<Rational> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = Rational(a[i]);
    return Polynomial(std::move(c));
}

// Splits f into rational content and primitive integer part (positive lead).
std::pair<Rational, IPoly> rational_content_split(const Polynomial& f) {
    const Integer N = f.denominator_lcm();
    IPoly F(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Rational c = f.coeff(i) * Rational(N);
        F[i] = c.num();
    }
    iz_normalize(F);
    if (F.empty()) return {Rational(0), {}};
    Integer g = iz_content(F);
    if (F.back() < 0) g = -g;
    for (auto& c : F) c /= g;
    return {Rational(g, N), F};
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p an odd prime below 2^31.
// ---------------------------------------------------------------------------

using MPoly = std::vector<std::uint64_t>;

void mp_normalize(MPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int mp_deg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

std::uint64_t u64_powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t u64_inv(std::uint64_t a, std::uint64_t p) { return u64_powmod(a, p - 2, p); }

MPoly mp_from_ipoly(const IPoly& f, std::uint64_t p) {
    MPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer c = f[i] % Integer(static_cast<unsigned long>(p));
        if (c < 0) c += static_cast<unsigned long>(p);
        r[i] = c.get_ui();
    }
    mp_normalize(r);
    return r;
}

MPoly mp_mul(const MPoly& a, const MPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    mp_normalize(r);
    return r;
}

MPoly mp_sub(MPoly a, const MPoly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    mp_normalize(a);
    return a;
}

MPoly mp_monic(MPoly a, std::uint64_t p) {
    if (a.empty() || a.back() == 1) return a;
    const std::uint64_t inv = u64_inv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

MPoly mp_rem(MPoly a, const MPoly& b, std::uint64_t p) {
    const std::uint64_t linv = u64_inv(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t q = a.back() * linv % p;
        const std::size_t shift = a.size() - b.size();
        if (q != 0)
            for (std::size_t j = 0; j + 1 < b.size(); ++j)
                a[shift + j] = (a[shift + j] + p - q * b[j] % p) % p;
        a.pop_back();
        mp_normalize(a);
        if (a.empty()) break;
    }
    return a;
}

MPoly mp_divexact(MPoly a, const MPoly& b, std::uint64_t p) {
    const std::uint64_t linv = u64_inv(b.back(), p);
    MPoly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size()) {
        const std::uint64_t q = a.back() * linv % p;
        const std::size_t shift = a.size() - b.size();
        quot[shift] = q;
        if (q != 0)
            for (std::size_t j = 0; j + 1 < b.size(); ++j)
                a[shift + j] = (a[shift + j] + p - q * b[j] % p) % p;
        a.pop_back();
        mp_normalize(a);
        if (a.empty()) break;
    }
    mp_normalize(quot);
    return quot;
}

MPoly mp_gcd(MPoly a, MPoly b, std::uint64_t p) {
    while (!b.empty()) {
        a = mp_rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return mp_monic(std::move(a), p);
}

MPoly mp_derivative(const MPoly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    MPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
    mp_normalize(d);
    return d;
}

// base^e mod f, with an arbitrary-precision exponent
MPoly mp_powmod(MPoly base, const Integer& e, const MPoly& f, std::uint64_t p) {
    MPoly result{1};
    if (e == 0) return result;
    base = mp_rem(std::move(base), f, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = mp_rem(mp_mul(result, result, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = mp_rem(mp_mul(result, base, p), f, p);
    }
    return result;
}

// Extended Euclid: returns (s, t) with s*a + t*b = 1; requires gcd(a,b) = 1.
std::pair<MPoly, MPoly> mp_bezout(const MPoly& a, const MPoly& b, std::uint64_t p) {
    MPoly r0 = a, r1 = b;
    MPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        const MPoly q = mp_divexact(r0, r1, p);  // Euclidean quotient
        MPoly r2 = mp_sub(r0, mp_mul(q, r1, p), p);
        MPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
        MPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (mp_deg(r0) != 0)
        throw Error("mp_bezout: inputs are not coprime (internal)");
    const std::uint64_t inv = u64_inv(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    return {s0, t0};
}

// ---------------------------------------------------------------------------
// Distinct-degree / equal-degree factorization mod p.
// ---------------------------------------------------------------------------

// Groups (product, d): product of all monic irreducible factors of degree d.
struct DdfGroups {
    std::vector<std::pair<MPoly, int>> groups;
    int factor_count = 0;
    bool irreducible = false;
};

DdfGroups ddf(const MPoly& f_in, std::uint64_t p) {
    DdfGroups out;
    MPoly v = mp_monic(f_in, p);
    MPoly h{0, 1};  // x
    int i = 0;
    while (mp_deg(v) >= 2 * (i + 1)) {
        ++i;
        h = mp_powmod(std::move(h), Integer(static_cast<unsigned long>(p)), v, p);
        const MPoly g = mp_gcd(mp_sub(h, MPoly{0, 1}, p), v, p);
        if (mp_deg(g) > 0) {
            out.groups.emplace_back(g, i);
            out.factor_count += mp_deg(g) / i;
            v = mp_divexact(std::move(v), g, p);
            if (!v.empty() && mp_deg(v) > 0) h = mp_rem(std::move(h), v, p);
        }
    }
    if (mp_deg(v) > 0) {
        out.groups.emplace_back(v, mp_deg(v));
        out.factor_count += 1;
    }
    out.irreducible = out.factor_count == 1;
    return out;
}

// Cantor-Zassenhaus split of a product of distinct irreducibles of degree d.
void edf(const MPoly& f, int d, std::uint64_t p, std::mt19937_64& rng,
         std::vector<MPoly>& out) {
    if (mp_deg(f) == d) {
        out.push_back(mp_monic(f, p));
        return;
    }
    const Integer exponent =
        (pow_ui(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
    while (true) {
        MPoly a(static_cast<std::size_t>(mp_deg(f)), 0);
        for (auto& c : a) c = rng() % p;
        mp_normalize(a);
        if (mp_deg(a) < 1) continue;
        MPoly b = mp_powmod(std::move(a), exponent, f, p);
        if (b.empty()) continue;
        b[0] = (b[0] + p - 1) % p;
        mp_normalize(b);
        if (b.empty()) continue;
        const MPoly g = mp_gcd(b, f, p);
        if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) {
            edf(g, d, p, rng, out);
            edf(mp_divexact(f, g, p), d, p, rng, out);
            return;
        }
    }
}

std::vector<MPoly> full_modular_factorization(const MPoly& f, std::uint64_t p) {
    std::mt19937_64 rng(0x5EEDBA5Eu ^ (p * 0x9E3779B97F4A7C15ull) ^
                        (static_cast<std::uint64_t>(mp_deg(f)) << 32));
    std::vector<MPoly> factors;
    for (const auto& [prod, d] : ddf(f, p).groups) edf(prod, d, p, rng, factors);
    std::sort(factors.begin(), factors.end(), [](const MPoly& a, const MPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting: monic factorization over Z/p^(2^j), quadratic steps along
// a balanced subproduct tree.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Integer>;  // coefficients canonical in [0, m)

void z_normalize(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly z_mod(IPoly a, const Integer& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    z_normalize(a);
    return a;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) c %= m;
    z_normalize(r);
    return r;
}

ZPoly z_sub(ZPoly a, const ZPoly& b, const Integer& m) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
        if (a[i] < 0) a[i] += m;
    }
    z_normalize(a);
    return a;
}

ZPoly z_add(ZPoly a, const ZPoly& b, const Integer& m) {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += b[i];
        if (a[i] >= m) a[i] -= m;
    }
    z_normalize(a);
    return a;
}

// divrem by a monic divisor
std::pair<ZPoly, ZPoly> z_divrem_monic(ZPoly a, const ZPoly& b, const Integer& m) {
    if (b.empty() || b.back() != 1)
        throw Error("z_divrem_monic: divisor must be monic (internal)");
    if (a.size() < b.size()) return {ZPoly{}, std::move(a)};
    ZPoly quot(a.size() - b.size() + 1, Integer(0));
    for (std::size_t i = a.size(); i-- >= b.size();) {
        const Integer q = a[i];
        if (q != 0) {
            quot[i - b.size() + 1] = q;
            for (std::size_t j = 0; j + 1 < b.size(); ++j) {
                const std::size_t idx = i - b.size() + 1 + j;
                a[idx] = (a[idx] - q * b[j]) % m;
                if (a[idx] < 0) a[idx] += m;
            }
            a[i] = 0;
        }
        if (i + 1 == b.size()) break;
    }
    a.resize(b.size() - 1);
    z_normalize(a);
    z_normalize(quot);
    return {std::move(quot), std::move(a)};
}

ZPoly z_from_mp(const MPoly& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = Integer(static_cast<unsigned long>(a[i]));
    return r;
}

struct HenselNode {
    std::size_t lo = 0, mid = 0, hi = 0;
    ZPoly g, h;  // node polynomial = g * h; g covers [lo,mid), h covers [mid,hi)
    ZPoly s, t;  // s*g + t*h = 1 (mod current modulus)
    std::unique_ptr<HenselNode> left, right;
};

std::unique_ptr<HenselNode> hensel_build(const std::vector<MPoly>& fs, std::size_t lo,
                                         std::size_t hi, std::uint64_t p) {
    auto node = std::make_unique<HenselNode>();
    node->lo = lo;
    node->hi = hi;
    node->mid = lo + (hi - lo + 1) / 2;
    MPoly g{1}, h{1};
    for (std::size_t i = lo; i < node->mid; ++i) g = mp_mul(g, fs[i], p);
    for (std::size_t i = node->mid; i < hi; ++i) h = mp_mul(h, fs[i], p);
    auto [s, t] = mp_bezout(g, h, p);
    node->g = z_from_mp(g);
    node->h = z_from_mp(h);
    node->s = z_from_mp(s);
    node->t = z_from_mp(t);
    if (node->mid - lo > 1) node->left = hensel_build(fs, lo, node->mid, p);
    if (hi - node->mid > 1) node->right = hensel_build(fs, node->mid, hi, p);
    return node;
}

// One quadratic step: lifts node data from mod m to mod m2 = m^2, where f is
// the node polynomial taken mod m2 (monic).
void hensel_step(HenselNode& node, const ZPoly& f, const Integer& m2) {
    const std::size_t dg = node.g.size(), dh = node.h.size();
    const ZPoly e = z_sub(f, z_mul(node.g, node.h, m2), m2);
    auto [q, r] = z_divrem_monic(z_mul(node.s, e, m2), node.h, m2);
    ZPoly g2 = z_add(z_add(node.g, z_mul(node.t, e, m2), m2), z_mul(q, node.g, m2), m2);
    ZPoly h2 = z_add(node.h, r, m2);
    if (g2.size() != dg || h2.size() != dh || g2.back() != 1 || h2.back() != 1)
        throw Error("hensel_step: degree drift (internal)");

    const ZPoly b =
        z_sub(z_add(z_mul(node.s, g2, m2), z_mul(node.t, h2, m2), m2), ZPoly{Integer(1)}, m2);
    auto [c, d] = z_divrem_monic(z_mul(node.s, b, m2), h2, m2);
    ZPoly s2 = z_sub(node.s, d, m2);
    ZPoly t2 = z_sub(z_sub(node.t, z_mul(node.t, b, m2), m2), z_mul(c, g2, m2), m2);

    node.g = std::move(g2);
    node.h = std::move(h2);
    node.s = std::move(s2);
    node.t = std::move(t2);
    if (node.left) hensel_step(*node.left, node.g, m2);
    if (node.right) hensel_step(*node.right, node.h, m2);
}

void hensel_collect(const HenselNode& node, std::vector<ZPoly>& out) {
    if (node.mid - node.lo == 1) out[node.lo] = node.g;
    else hensel_collect(*node.left, out);
    if (node.hi - node.mid == 1) out[node.mid] = node.h;
    else hensel_collect(*node.right, out);
}

// Lifts the monic factorization of F/lc(F) from mod p to mod m >= target.
// Returns (m, lifted monic factors modulo m).
std::pair<Integer, std::vector<ZPoly>> hensel_lift(const IPoly& F,
                                                   const std::vector<MPoly>& fs,
                                                   std::uint64_t p, const Integer& target) {
    auto root = hensel_build(fs, 0, fs.size(), p);
    Integer m(static_cast<unsigned long>(p));
    while (m < target) {
        const Integer m2 = m * m;
        Integer lc_inv;
        if (!mpz_invert(lc_inv.get_mpz_t(), F.back().get_mpz_t(), m2.get_mpz_t()))
            throw Error("hensel_lift: leading coefficient not invertible (internal)");
        ZPoly f = z_mod(F, m2);
        for (auto& c : f) c = c * lc_inv % m2;
        z_normalize(f);
        hensel_step(*root, f, m2);
        m = m2;
    }
    std::vector<ZPoly> lifted(fs.size());
    hensel_collect(*root, lifted);
    return {m, std::move(lifted)};
}

// ---------------------------------------------------------------------------
// Zassenhaus driver.
// ---------------------------------------------------------------------------

Integer balanced(Integer c, const Integer& m) {
    if (2 * c > m) c -= m;
    return c;
}

IPoly balanced_poly(const ZPoly& a, const Integer& m) {
    IPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = balanced(a[i], m);
    iz_normalize(r);
    return r;
}

// Coefficient bound for lc(F)-adjusted factors (Landau-Mignotte, padded).
Integer mignotte_target(const IPoly& F) {
    Integer norm_sq = 0;
    for (const auto& c : F) norm_sq += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), norm_sq.get_mpz_t());
    norm += 1;
    const Integer bound =
        (Integer(1) << static_cast<unsigned long>(F.size())) * norm * cyclofam::abs(F.back());
    return 2 * bound + 1;
}

constexpr int kModularRounds = 6;

struct ModularScan {
    bool proved_irreducible = false;
    std::uint64_t best_p = 0;
    int best_count = 0;
};

// Tries several odd primes with squarefree image: any irreducible image or an
// empty factor-degree intersection proves irreducibility over Q; otherwise
// reports the prime with the fewest modular factors.
ModularScan scan_modular(const IPoly& F) {
    ModularScan scan;
    const int n = iz_deg(F);
    std::vector<char> degset(static_cast<std::size_t>(n) + 1, 1);
    int rounds = 0;
    Integer p(2);
    while (rounds < kModularRounds) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        const std::uint64_t pu = p.get_ui();
        if (mpz_divisible_ui_p(F.back().get_mpz_t(), pu)) continue;
        const MPoly fp = mp_from_ipoly(F, pu);
        if (mp_deg(fp) != n) continue;
        if (mp_deg(mp_gcd(fp, mp_derivative(fp, pu), pu)) != 0) continue;  // not squarefree
        ++rounds;
        const DdfGroups groups = ddf(fp, pu);
        if (groups.irreducible) {
            scan.proved_irreducible = true;
            return scan;
        }
        // subset sums of the modular factor degrees
        std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
        reach[0] = 1;
        for (const auto& [prod, d] : groups.groups) {
            const int copies = mp_deg(prod) / d;
            for (int c = 0; c < copies; ++c)
                for (int s = n - d; s >= 0; --s)
                    if (reach[s]) reach[s + d] = 1;
        }
        for (int i = 0; i <= n; ++i) degset[i] &= reach[i];
        bool nontrivial = false;
        for (int i = 1; i < n; ++i) nontrivial |= degset[i] != 0;
        if (!nontrivial) {
            scan.proved_irreducible = true;
            return scan;
        }
        if (scan.best_p == 0 || groups.factor_count < scan.best_count) {
            scan.best_p = pu;
            scan.best_count = groups.factor_count;
        }
    }
    return scan;
}

// Exact factorization of a squarefree primitive polynomial with positive
// leading coefficient, degree >= 2 and nonzero constant term.
std::vector<IPoly> zassenhaus(IPoly F) {
    std::vector<IPoly> result;
    const ModularScan scan = scan_modular(F);
    if (scan.proved_irreducible) {
        result.push_back(std::move(F));
        return result;
    }

    const std::uint64_t p = scan.best_p;
    const std::vector<MPoly> modular = full_modular_factorization(mp_from_ipoly(F, p), p);
    auto [m, lifted] = hensel_lift(F, modular, p, mignotte_target(F));

    std::vector<std::size_t> remaining(lifted.size());
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});

    std::size_t s = 1;
    while (2 * s <= remaining.size()) {
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        bool found = false;
        while (true) {
            // cheap filter first: the candidate's constant term must divide
            // lc(F) * F(0)
            Integer t0 = F.back() % m;
            if (t0 < 0) t0 += m;
            for (const std::size_t i : idx) {
                const ZPoly& g = lifted[remaining[i]];
                t0 = t0 * g[0] % m;
            }
            t0 = balanced(t0, m);
            const Integer c0 = F.back() * F[0];
            if (t0 != 0 && mpz_divisible_p(c0.get_mpz_t(), t0.get_mpz_t())) {
                ZPoly prod{F.back() % m};
                if (prod[0] < 0) prod[0] += m;
                for (const std::size_t i : idx) prod = z_mul(prod, lifted[remaining[i]], m);
                const IPoly cand = iz_primitive(balanced_poly(prod, m));
                if (auto quot = iz_exact_div(F, cand)) {
                    result.push_back(cand);
                    F = iz_primitive(std::move(*quot));
                    std::vector<std::size_t> next;
                    for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
                        if (j < idx.size() && idx[j] == i) { ++j; continue; }
                        next.push_back(remaining[i]);
                    }
                    remaining = std::move(next);
                    found = true;
                    break;
                }
            }
            // advance to the next size-s combination
            std::size_t i = s;
            bool advanced = false;
            while (i-- > 0) {
                if (idx[i] != i + remaining.size() - s) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
        if (!found) ++s;
    }
    if (iz_deg(F) >= 1) result.push_back(std::move(F));
    return result;
}

// Factors a squarefree primitive part (degree >= 1, positive lead).
std::vector<IPoly> factor_squarefree(IPoly F) {
    std::vector<IPoly> out;
    if (iz_deg(F) < 1) return out;
    std::size_t v = 0;
    while (v < F.size() && F[v] == 0) ++v;
    if (v > 0) {
        out.push_back(IPoly{Integer(0), Integer(1)});  // the factor x
        F.erase(F.begin(), F.begin() + static_cast<std::ptrdiff_t>(v));
    }
    if (iz_deg(F) == 1) {
        out.push_back(std::move(F));
    } else if (iz_deg(F) >= 2) {
        auto factors = zassenhaus(std::move(F));
        out.insert(out.end(), std::make_move_iterator(factors.begin()),
                   std::make_move_iterator(factors.end()));
    }
    return out;
}

// Yun's squarefree decomposition of a primitive positive-lead polynomial.
std::vector<std::pair<IPoly, int>> yun(const IPoly& F) {
    std::vector<std::pair<IPoly, int>> parts;
    if (iz_deg(F) < 1) return parts;
    const IPoly Fd = iz_derivative(F);
    const IPoly u = iz_gcd(F, Fd);
    if (iz_deg(u) == 0) {
        parts.emplace_back(F, 1);
        return parts;
    }
    IPoly v = iz_div_or_throw(F, u);
    IPoly w = iz_div_or_throw(Fd, u);
    int i = 1;
    while (iz_deg(v) >= 1) {
        IPoly d = w;
        const IPoly vd = iz_derivative(v);
        if (d.size() < vd.size()) d.resize(vd.size(), Integer(0));
        for (std::size_t j = 0; j < vd.size(); ++j) d[j] -= vd[j];
        iz_normalize(d);
        const IPoly h = iz_gcd(v, d);
        if (iz_deg(h) >= 1) parts.emplace_back(h, i);
        v = iz_div_or_throw(v, h);
        w = iz_div_or_throw(d, h);
        ++i;
    }
    return parts;
}

// Rational root search on a primitive polynomial with nonzero constant term.
// Conservative: gives up when divisor enumeration would be disproportionate,
// which only costs a shortcut (Zassenhaus still finds linear factors).
bool has_rational_root(const IPoly& F) {
    const Integer a0 = cyclofam::abs(F.front());
    const Integer an = cyclofam::abs(F.back());
    if (mpz_sizeinbase(a0.get_mpz_t(), 2) > 62 || mpz_sizeinbase(an.get_mpz_t(), 2) > 62)
        return false;
    const std::vector<std::uint64_t> nums = divisors(a0.get_ui());
    const std::vector<std::uint64_t> dens = divisors(an.get_ui());
    if (nums.size() * dens.size() > 10000) return false;
    const Polynomial f = iz_to_poly(F);
    for (const std::uint64_t r : nums)
        for (const std::uint64_t s : dens) {
            if (std::gcd(r, s) != 1) continue;
            const Rational root(Integer(static_cast<unsigned long>(r)),
                                Integer(static_cast<unsigned long>(s)));
            if (f.eval(root).is_zero() || f.eval(-root).is_zero()) return true;
        }
    return false;
}

}  // namespace

SquarefreeDecomposition squarefree_decomposition(const Polynomial& f) {
    if (f.is_zero())
        throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    auto [content, F] = rational_content_split(f);
    SquarefreeDecomposition out;
    out.content = content;
    for (const auto& [part, mult] : yun(F)) out.parts.emplace_back(iz_to_poly(part), mult);
    return out;
}

FactoredPoly factor_over_q(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_over_q: zero polynomial");
    auto [content, F] = rational_content_split(f);
    FactoredPoly out;
    out.content = content;
    if (iz_deg(F) >= 1) {
        for (const auto& [part, mult] : yun(F))
            for (auto& irr : factor_squarefree(part))
                out.factors.emplace_back(iz_to_poly(irr), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        const auto da = a.first.degree().value(), db = b.first.degree().value();
        if (da != db) return da < db;
        for (std::size_t i = 0; i <= da; ++i) {
            const Rational ca = a.first.coeff(i), cb = b.first.coeff(i);
            if (ca != cb) return ca < cb;
        }
        return false;
    });
    // safety net: the factorization must multiply back exactly
    Polynomial check = Polynomial::constant(out.content);
    for (const auto& [factor, mult] : out.factors)
        check = check * factor.pow(static_cast<unsigned>(mult));
    if (check != f) throw Error("factor_over_q: recombination check failed (internal)");
    return out;
}

bool irreducible_over_q(const Polynomial& f) {
    if (f.is_constant())
        throw std::invalid_argument("irreducible_over_q: constant polynomial");
    auto [content, F] = rational_content_split(f);
    (void)content;
    const int d = iz_deg(F);
    if (d == 1) return true;
    if (F.front() == 0) return false;
    if (has_rational_root(F)) return false;
    if (d <= 3) return true;  // degree 2 or 3 without a rational root
    if (iz_deg(iz_gcd(F, iz_derivative(F))) > 0) return false;
    const ModularScan scan = scan_modular(F);
    if (scan.proved_irreducible) return true;
    return zassenhaus(std::move(F)).size() == 1;
}

}  // namespace cyclofam
