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

#ifndef CYCLOFAM_INTEGER_HPP
#define CYCLOFAM_INTEGER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cyclofam {

/// Arbitrary-precision signed integer (sign-and-magnitude, canonical zero).
using Integer = mpz_class;

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer pow_ui(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Integer abs(const Integer& a) {
    Integer r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

/// BPSW + Miller-Rabin; suitable for the small auxiliary primes handled here.
bool is_probable_prime(const Integer& n);

/// Prime factorization in ascending prime order (trial division, then
/// Pollard-Brent rho for any 64-bit-plus cofactor). Requires n >= 1.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// True iff n >= 1 has no repeated prime factor.
bool is_squarefree(const Integer& n);

/// Euler's totient.
std::uint64_t euler_phi(std::uint64_t k);

/// Divisors of k in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t k);

}  // namespace cyclofam

#endif
