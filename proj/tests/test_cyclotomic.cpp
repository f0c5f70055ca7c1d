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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "cyclofam/cyclotomic.hpp"
#include "cyclofam/errors.hpp"

using namespace cyclofam;

namespace {

// long-division oracle for the closed-form reductions
Polynomial oracle_x_pow_mod(std::uint64_t k, std::uint64_t i) {
    return Polynomial::monomial(1, i).divrem(cyclotomic_poly_generic(k)).second;
}

}  // namespace

TEST_CASE("euler phi examples and brute force") {
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(43) == 42);
    CHECK(euler_phi(1) == 1);
    for (std::uint64_t k = 1; k <= 200; ++k) {
        std::uint64_t count = 0;
        for (std::uint64_t a = 1; a <= k; ++a)
            if (std::gcd(a, k) == 1) ++count;
        CHECK(euler_phi(k) == count);
    }
}

TEST_CASE("shape decomposition") {
    CHECK_FALSE(two_power_times_prime_power(1).has_value());
    const auto s12 = two_power_times_prime_power(12);
    REQUIRE(s12.has_value());
    CHECK(s12->m == 2);
    CHECK(s12->p == 3);
    CHECK(s12->n == 1);
    const auto s64 = two_power_times_prime_power(64);
    REQUIRE(s64.has_value());
    CHECK(s64->m == 6);
    CHECK(s64->n == 0);
    CHECK_FALSE(two_power_times_prime_power(15).has_value());
    CHECK_FALSE(two_power_times_prime_power(60).has_value());
}

TEST_CASE("cyclotomic polynomial closed forms") {
    CHECK(cyclotomic_poly(12) == Polynomial::parse("1,0,-1,0,1"));
    CHECK(cyclotomic_poly(8) == Polynomial::parse("1,0,0,0,1"));
    CHECK(cyclotomic_poly(9) == Polynomial::parse("1,0,0,1,0,0,1"));
    CHECK(cyclotomic_poly(1) == Polynomial::parse("-1,1"));
    CHECK(cyclotomic_poly(2) == Polynomial::parse("1,1"));
}

TEST_CASE("cyclotomic fast paths equal the generic construction up to 200") {
    for (std::uint64_t k = 1; k <= 200; ++k) {
        const Polynomial fast = cyclotomic_poly(k);
        CHECK(fast == cyclotomic_poly_generic(k));
        CHECK(fast.degree().value() == euler_phi(k));
        CHECK(fast.leading() == Rational(1));
        CHECK(fast.has_integer_coeffs());
    }
}

TEST_CASE("power of x closed forms at k = 12") {
    const auto mod = CycloModulus::create(12);
    CHECK(power_of_x_mod(mod, Integer(6)).residue() == Polynomial::constant(-1));
    CHECK(power_of_x_mod(mod, Integer(3)).residue() == Polynomial::monomial(1, 3));
    CHECK(power_of_x_mod(mod, Integer(5)).residue() == Polynomial::parse("0,-1,0,1"));
    CHECK(power_of_x_mod(mod, Integer(12)).residue() == Polynomial::constant(1));
    CHECK_THROWS_AS(power_of_x_mod(mod, Integer(-1)), std::invalid_argument);
}

TEST_CASE("closed-form reduction equals the long-division oracle") {
    std::mt19937_64 rng(1021);
    for (std::uint64_t k = 1; k <= 200; ++k) {
        if (k > 1 && !two_power_times_prime_power(k)) continue;
        const auto mod = CycloModulus::create(k);
        std::uniform_int_distribution<std::uint64_t> exp(0, 5 * k);
        for (int iter = 0; iter < 25; ++iter) {
            const std::uint64_t i = exp(rng);
            CHECK(power_of_x_mod(mod, Integer(static_cast<unsigned long>(i))).residue() ==
                  oracle_x_pow_mod(k, i));
        }
    }
}

TEST_CASE("powers of x form a cyclic group") {
    std::mt19937_64 rng(5150);
    for (const std::uint64_t k : {7, 12, 16, 27, 40, 45, 81}) {
        const auto mod = CycloModulus::create(k);
        CHECK(power_of_x_mod(mod, Integer(static_cast<unsigned long>(k))).residue() ==
              Polynomial::constant(1));
        std::uniform_int_distribution<std::uint64_t> exp(0, 3 * k);
        for (int iter = 0; iter < 20; ++iter) {
            const std::uint64_t i = exp(rng), j = exp(rng);
            const auto fi = power_of_x_mod(mod, Integer(static_cast<unsigned long>(i)));
            const auto fj = power_of_x_mod(mod, Integer(static_cast<unsigned long>(j)));
            CHECK(fi * fj == power_of_x_mod(mod, Integer(static_cast<unsigned long>(i + j))));
        }
    }
}

TEST_CASE("ring multiplication") {
    const auto mod3 = CycloModulus::create(3);
    const CycloElement gauss(mod3, Polynomial::parse("1,2"));  // 2x + 1
    CHECK((gauss * gauss).residue() == Polynomial::constant(-3));

    const auto mod12 = CycloModulus::create(12);
    const auto z = power_of_x_mod(mod12, Integer(1));
    const auto zk1 = power_of_x_mod(mod12, Integer(11));
    CHECK((z * zk1).residue() == Polynomial::constant(1));

    const CycloElement zero(mod12, Polynomial{});
    CHECK((zero * z).is_zero());

    CHECK_THROWS_AS(z * gauss, std::invalid_argument);
}

TEST_CASE("legendre symbol") {
    CHECK(legendre_symbol(Integer(2), Integer(7)) == 1);
    CHECK(legendre_symbol(Integer(5), Integer(7)) == -1);
    CHECK(legendre_symbol(Integer(7), Integer(7)) == 0);

    // Euler's criterion as the oracle
    for (const long p : {3L, 5L, 7L, 11L, 13L, 23L}) {
        for (long a = -10; a <= 10; ++a) {
            Integer euler;
            const Integer pz(p), az(a);
            const Integer base = (az % pz + pz) % pz;
            mpz_powm_ui(euler.get_mpz_t(), base.get_mpz_t(),
                        static_cast<unsigned long>((p - 1) / 2), pz.get_mpz_t());
            const int expected = euler == 0 ? 0 : (euler == 1 ? 1 : -1);
            CHECK(legendre_symbol(az, pz) == expected);
        }
    }

    std::mt19937_64 rng(88);
    std::uniform_int_distribution<long> vals(-50, 50);
    for (int iter = 0; iter < 100; ++iter) {
        const Integer a(vals(rng)), b(vals(rng)), p(23);
        CHECK(legendre_symbol(a * b, p) == legendre_symbol(a, p) * legendre_symbol(b, p));
    }

    CHECK_THROWS_AS(legendre_symbol(Integer(1), Integer(2)), std::invalid_argument);
    CHECK_THROWS_AS(legendre_symbol(Integer(1), Integer(9)), std::invalid_argument);
}

TEST_CASE("conductor") {
    CHECK(conductor(3) == 3);
    CHECK(conductor(1) == 4);
    CHECK(conductor(2) == 8);
    CHECK(conductor(5) == 20);
    CHECK(conductor(7) == 7);
    CHECK(conductor(6) == 24);
    CHECK_THROWS_AS(conductor(4), std::invalid_argument);
    CHECK_THROWS_AS(conductor(9), std::invalid_argument);
    CHECK_THROWS_AS(conductor(12), std::invalid_argument);
    CHECK_THROWS_AS(conductor(0), std::invalid_argument);
}

TEST_CASE("admissible discriminants") {
    CHECK(admissible_discriminants(12) == std::vector<std::uint64_t>{1, 3});
    CHECK(admissible_discriminants(7) == std::vector<std::uint64_t>{7});
    CHECK(admissible_discriminants(5).empty());
    CHECK(admissible_discriminants(8) == std::vector<std::uint64_t>{1, 2});
    CHECK(admissible_discriminants(1).empty());
    CHECK(admissible_discriminants(24) == std::vector<std::uint64_t>{1, 2, 3, 6});
    CHECK(admissible_discriminants(15) == std::vector<std::uint64_t>{3, 15});
}

TEST_CASE("sqrt(-D) fixtures") {
    CHECK(sqrt_minus_d(CycloModulus::create(4), 1).residue() == Polynomial::x());
    CHECK(sqrt_minus_d(CycloModulus::create(8), 2).residue() == Polynomial::parse("0,1,0,1"));
    CHECK(sqrt_minus_d(CycloModulus::create(3), 3).residue() == Polynomial::parse("1,2"));
}

TEST_CASE("sqrt(-D) squares to -D for every admissible pair up to 60") {
    for (std::uint64_t k = 1; k <= 60; ++k) {
        const auto ds = admissible_discriminants(k);
        if (ds.empty()) continue;
        const auto mod = CycloModulus::create(k);
        for (const std::uint64_t d : ds) {
            const CycloElement s = sqrt_minus_d(mod, d);
            const Integer neg(-static_cast<long>(d));
            CHECK((s * s).residue() == Polynomial::constant(Rational(neg)));
        }
    }
}

TEST_CASE("sqrt(-D) rejects pairs whose conductor does not divide k") {
    CHECK_THROWS_AS(sqrt_minus_d(CycloModulus::create(9), 5), FamilyNonexistentError);
    CHECK_THROWS_AS(sqrt_minus_d(CycloModulus::create(7), 3), FamilyNonexistentError);
    CHECK_THROWS_AS(sqrt_minus_d(CycloModulus::create(4), 2), FamilyNonexistentError);
}
