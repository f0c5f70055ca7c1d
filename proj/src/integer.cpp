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

#include "cyclofam/integer.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyclofam {

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Brent's cycle-finding variant of Pollard rho. n must be odd, composite
// and > 1. Returns a nontrivial factor.
Integer pollard_brent(const Integer& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEUL);
    while (true) {
        Integer y = rng.get_z_range(n - 3) + 2;
        Integer c = rng.get_z_range(n - 3) + 1;
        Integer x = y, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long step = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long j = 0; j < r && d == 1; j += step) {
                ys = y;
                const unsigned long lim = std::min(step, r - j);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * cyclofam::abs(x - y) % n;
                }
                d = cyclofam::gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                d = cyclofam::gcd(cyclofam::abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n) return d;
        // cycle degenerated; retry with new parameters
    }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
    std::map<Integer, unsigned> acc;
    Integer m = n;
    for (unsigned long d : {2UL, 3UL, 5UL}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            ++acc[Integer(static_cast<long>(d))];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        }
    }
    // wheel over 6k +- 1
    for (unsigned long d = 7; d <= 1000000UL && Integer(d) * d <= m;
         d += (d % 6 == 1) ? 4 : 2) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            ++acc[Integer(static_cast<long>(d))];
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        }
    }
    factor_into(m, acc);
    return {acc.begin(), acc.end()};
}

bool is_squarefree(const Integer& n) {
    if (n < 1) throw std::invalid_argument("is_squarefree: argument must be >= 1");
    for (const auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

std::uint64_t euler_phi(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("euler_phi: argument must be >= 1");
    Integer phi = 1;
    for (const auto& [p, e] : factorize(Integer(static_cast<unsigned long>(k))))
        phi *= pow_ui(p, e - 1) * (p - 1);
    return phi.get_ui();
}

std::vector<std::uint64_t> divisors(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("divisors: argument must be >= 1");
    std::vector<std::uint64_t> divs{1};
    for (const auto& [p, e] : factorize(Integer(static_cast<unsigned long>(k)))) {
        const std::uint64_t pu = p.get_ui();
        const std::size_t base = divs.size();
        std::uint64_t pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= pu;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace cyclofam
