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

#include "cyclofam/errors.hpp"
#include "cyclofam/factorization.hpp"
#include "cyclofam/family.hpp"
#include "test_util.hpp"

using namespace cyclofam;

namespace {

// the well-known ideal family with k = 12, D = 3
const char* kBnT = "1,0,6";
const char* kBnR = "1,6,18,36,36";
const char* kBnQ = "1,6,24,36,36";

Polynomial scaled_shifted_square(std::uint64_t k) {
    // (1/3)(x-1)^2 Phi_k + x, the displayed q for k = 9 and 27
    const Polynomial phi = cyclotomic_poly(k);
    return Polynomial::parse("-1,1").pow(2) * phi * Rational(1, 3) + Polynomial::x();
}

}  // namespace

TEST_CASE("displayed fixture k = 9") {
    const FamilyCandidate c = construct_candidate({9, 3, 1});
    CHECK(c.t == Polynomial::parse("1,1"));
    CHECK(c.r == Polynomial::parse("1,0,0,1,0,0,1"));
    CHECK(c.q == scaled_shifted_square(9));
    CHECK(c.rho == Rational(4, 3));
    CHECK(verify_candidate_identities(c));
}

TEST_CASE("displayed fixture k = 27") {
    const FamilyCandidate c = construct_candidate({27, 3, 1});
    CHECK(c.t == Polynomial::parse("1,1"));
    CHECK(c.r == cyclotomic_poly(27));
    CHECK(c.q == scaled_shifted_square(27));
    CHECK(c.rho == Rational(10, 9));
    CHECK(verify_candidate_identities(c));
}

TEST_CASE("degenerate small-k candidates") {
    const FamilyCandidate k3g1 = construct_candidate({3, 3, 1});
    CHECK(k3g1.q == Polynomial::parse("1,2,1"));
    CHECK(k3g1.rho == Rational(1));

    const FamilyCandidate k3g2 = construct_candidate({3, 3, 2});
    CHECK(k3g2.q == Polynomial::parse("0,0,1"));

    const FamilyCandidate k4g1 = construct_candidate({4, 1, 1});
    CHECK(k4g1.q == Polynomial::parse("1/2,1,1/2"));

    const FamilyCandidate k4g3 = construct_candidate({4, 1, 3});
    CHECK(k4g3.q == Polynomial::parse("1/2,-1,1/2"));
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(construct_candidate({9, 5, 1}), FamilyNonexistentError);
    CHECK_THROWS_AS(construct_candidate({7, 3, 1}), FamilyNonexistentError);
    CHECK_THROWS_AS(construct_candidate({9, 3, 3}), std::invalid_argument);  // gcd(3,9) > 1
    CHECK_THROWS_AS(construct_candidate({9, 3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(construct_candidate({9, 3, 10}), std::invalid_argument);
    CHECK_THROWS_AS(construct_candidate({9, 12, 1}), std::invalid_argument);  // 12 not square-free
}

TEST_CASE("candidate invariants for all (k <= 40, admissible D, every g)") {
    for (std::uint64_t k = 1; k <= 40; ++k) {
        const auto ds = admissible_discriminants(k);
        if (ds.empty()) continue;
        const auto mod = CycloModulus::create(k);
        for (const std::uint64_t D : ds) {
            const CycloElement s = sqrt_minus_d(mod, D);
            for (std::uint64_t g = 1; g <= k; ++g) {
                if (std::gcd(g, k) != 1) continue;
                const FamilyCandidate c = construct_candidate(mod, s, D, g);
                CHECK(c.t.has_integer_coeffs());  // monic modulus keeps t integral
                CHECK(verify_candidate_identities(c));
                CHECK((c.y * Rational(Integer(static_cast<unsigned long>(D))))
                          .has_integer_coeffs());
            }
        }
    }
}

TEST_CASE("represents integers") {
    auto [a, na] = represents_integers(Polynomial::parse("1/2,1,1/2"));
    CHECK(a);
    CHECK(na == 2);

    auto [b, nb] = represents_integers(Polynomial::parse("1/2,1/2,1/2"));
    CHECK_FALSE(b);
    CHECK(nb == 2);

    auto [c, nc] = represents_integers(Polynomial::parse(kBnQ));
    CHECK(c);
    CHECK(nc == 1);

    auto [z, nz] = represents_integers(Polynomial{});
    CHECK(z);
    CHECK(nz == 1);
}

TEST_CASE("represents primes: fixture set with witnesses") {
    const ReprReport bn = represents_primes(Polynomial::parse(kBnQ));
    CHECK(bn.represents_primes);
    CHECK(bn.N == 1);
    REQUIRE(bn.value_gcd_M.has_value());
    CHECK(*bn.value_gcd_M == 1);
    CHECK_FALSE(bn.blocking_prime.has_value());
    CHECK(bn.irreducible);

    const ReprReport sq = represents_primes(Polynomial::parse("1,2,1"));
    CHECK_FALSE(sq.represents_primes);
    CHECK_FALSE(sq.irreducible);
    CHECK(sq.N == 1);
    REQUIRE(sq.value_gcd_M.has_value());
    CHECK(*sq.value_gcd_M == 1);
    CHECK_FALSE(sq.blocking_prime.has_value());

    const ReprReport blocked = represents_primes(Polynomial::parse("2,1,1"));
    CHECK_FALSE(blocked.represents_primes);
    CHECK(blocked.irreducible);
    CHECK(blocked.N == 1);
    REQUIRE(blocked.value_gcd_M.has_value());
    CHECK(*blocked.value_gcd_M == 2);
    REQUIRE(blocked.blocking_prime.has_value());
    CHECK(*blocked.blocking_prime == 2);

    const ReprReport lin = represents_primes(Polynomial::parse("1,2"));
    CHECK(lin.represents_primes);
    CHECK(lin.N == 1);
    CHECK(*lin.value_gcd_M == 1);

    const ReprReport half = represents_primes(Polynomial::parse("1/2,1,1/2"));
    CHECK_FALSE(half.represents_primes);
    CHECK(half.N == 2);
    CHECK(half.represents_integers);
    CHECK_FALSE(half.irreducible);
    REQUIRE(half.value_gcd_M.has_value());
    CHECK(*half.value_gcd_M == 2);
    REQUIRE(half.blocking_prime.has_value());
    CHECK(*half.blocking_prime == 2);
}

TEST_CASE("represents primes: edge cases") {
    const ReprReport constant = represents_primes(Polynomial::constant(7));
    CHECK_FALSE(constant.represents_primes);
    CHECK_FALSE(constant.non_constant);

    const ReprReport zero = represents_primes(Polynomial{});
    CHECK_FALSE(zero.represents_primes);

    const ReprReport negative = represents_primes(Polynomial::parse("1,-1"));
    CHECK_FALSE(negative.represents_primes);
    CHECK_FALSE(negative.positive_leading);

    // all integer values of x^2 - x are even; the first scan window is all
    // zeros, so the gcd window widens before the prime test
    const ReprReport parity = represents_primes(Polynomial::parse("0,-1,1"));
    CHECK_FALSE(parity.represents_primes);
    REQUIRE(parity.blocking_prime.has_value());
    CHECK(*parity.blocking_prime == 2);

    // x: M starts as gcd{f(0)} = 0, widened until f(1) = 1
    const ReprReport ident = represents_primes(Polynomial::x());
    CHECK(ident.represents_primes);
    CHECK(*ident.value_gcd_M == 1);
}

TEST_CASE("represents primes implies irreducible and represents integers") {
    std::mt19937_64 rng(0x1234);
    int tested = 0;
    while (tested < 60) {
        const Polynomial f = cyclofam::testing::random_poly(rng, 5, 8, 3);
        if (f.is_constant()) continue;
        ++tested;
        const ReprReport rep = represents_primes(f);
        if (rep.represents_primes) {
            CHECK(rep.irreducible);
            CHECK(rep.represents_integers);
            CHECK(irreducible_over_q(f));
        }
    }
}

TEST_CASE("perfect power root") {
    auto [h1, e1] = perfect_power_root(Polynomial::parse("1,2,1"));
    CHECK(h1 == Polynomial::parse("1,1"));
    CHECK(e1 == 2);

    auto [h2, e2] = perfect_power_root(Polynomial::parse("1,0,0,0,1"));
    CHECK(h2 == Polynomial::parse("1,0,0,0,1"));
    CHECK(e2 == 1);

    // (1/4)(x^2+1)^2 = ((1/2)x^2 + 1/2)^2
    const Polynomial quarter = Polynomial::parse("1,0,1").pow(2) * Rational(1, 4);
    auto [h3, e3] = perfect_power_root(quarter);
    CHECK(h3 == Polynomial::parse("1/2,0,1/2"));
    CHECK(e3 == 2);

    auto [h4, e4] = perfect_power_root(Polynomial::monomial(1, 6));
    CHECK(h4 == Polynomial::x());
    CHECK(e4 == 6);

    auto [h5, e5] = perfect_power_root(Polynomial::parse("0,0,4"));  // 4x^2
    CHECK(h5 == Polynomial::parse("0,2"));
    CHECK(e5 == 2);

    // 2x^2 is not a power: 2 is not a rational square
    auto [h6, e6] = perfect_power_root(Polynomial::parse("0,0,2"));
    CHECK(h6 == Polynomial::parse("0,0,2"));
    CHECK(e6 == 1);

    // negative content with odd exponent
    auto [h7, e7] = perfect_power_root(Polynomial::parse("1,1").pow(3) * Rational(-8));
    CHECK(e7 == 3);
    CHECK(h7 == Polynomial::parse("1,1") * Rational(-2));

    CHECK_THROWS_AS(perfect_power_root(Polynomial{}), std::invalid_argument);
}

TEST_CASE("perfect power round trip on random bases") {
    std::mt19937_64 rng(0xABCD);
    int tested = 0;
    while (tested < 50) {
        const Polynomial h = cyclofam::testing::random_poly(rng, 3, 5, 2);
        if (h.is_zero() || h.is_constant()) continue;
        ++tested;
        std::uniform_int_distribution<unsigned> exp(2, 4);
        const unsigned e = exp(rng);
        auto [base, found] = perfect_power_root(h.pow(e));
        CHECK(found % e == 0);  // h itself may be a power
        CHECK(base.pow(found) == h.pow(e));
    }
}

TEST_CASE("validation in table1 mode") {
    const ValidationReport pass9 = validate_complete_family(construct_candidate({9, 3, 1}));
    CHECK(pass9.pass);
    CHECK(pass9.q_report.represents_primes);
    CHECK(pass9.y_represents_integers);

    CHECK_FALSE(validate_complete_family(construct_candidate({3, 3, 1})).pass);
    CHECK_FALSE(validate_complete_family(construct_candidate({3, 3, 2})).pass);
    CHECK_FALSE(validate_complete_family(construct_candidate({4, 1, 1})).pass);
    CHECK_FALSE(validate_complete_family(construct_candidate({4, 1, 3})).pass);

    // k = 18 has no family for any g
    for (const std::uint64_t g : {1, 5, 7, 11, 13, 17})
        CHECK_FALSE(validate_complete_family(construct_candidate({18, 3, g})).pass);

    const FamilyCandidate k12 = construct_candidate({12, 3, 1});
    CHECK(validate_complete_family(k12).pass);
    CHECK(k12.rho == Rational(3, 2));
}

TEST_CASE("strict mode allows prime powers of a prime-representing base") {
    // k = 3, g = 1: q = (x+1)^2 fails table1 but is a square of x + 1
    const FamilyCandidate k3 = construct_candidate({3, 3, 1});
    const ValidationReport strict3 = validate_complete_family(k3, ValidationMode::strict);
    CHECK(strict3.pass);
    CHECK(strict3.power_exponent == 2);
    REQUIRE(strict3.power_base.has_value());
    CHECK(*strict3.power_base == Polynomial::parse("1,1"));

    // k = 4, g = 1: q = (1/2)(x+1)^2 is not a rational square (content 1/2)
    const ValidationReport strict4 =
        validate_complete_family(construct_candidate({4, 1, 1}), ValidationMode::strict);
    CHECK_FALSE(strict4.pass);
    CHECK(strict4.power_exponent == 1);

    // passing table1 families also pass strict (q irreducible, e = 1)
    const ValidationReport strict9 =
        validate_complete_family(construct_candidate({9, 3, 1}), ValidationMode::strict);
    CHECK(strict9.pass);
    CHECK(strict9.power_exponent == 1);
}

TEST_CASE("rho fixtures") {
    CHECK(rho_of(Polynomial::parse(kBnQ), Polynomial::parse(kBnR)) == Rational(1));
    CHECK(construct_candidate({9, 3, 1}).rho == Rational(4, 3));
    CHECK(construct_candidate({40, 5, 11}).rho == Rational(7, 4));
    CHECK_THROWS_AS(rho_of(Polynomial{}, Polynomial::parse(kBnR)), std::invalid_argument);
    CHECK_THROWS_AS(rho_of(Polynomial::parse(kBnQ), Polynomial::constant(1)),
                    std::invalid_argument);
}

TEST_CASE("the BN triple satisfies the family identities") {
    const Polynomial t = Polynomial::parse(kBnT);
    const Polynomial r = Polynomial::parse(kBnR);
    const Polynomial q = Polynomial::parse(kBnQ);
    const Polynomial y = Polynomial::parse("1,4,6");  // from 4q = t^2 + 3 y^2
    CHECK(q * Rational(4) == t * t + Rational(3) * (y * y));
    CHECK((q + Polynomial::constant(1) - t).divrem(r).second.is_zero());
    CHECK(cyclotomic_poly(12).compose(t - Polynomial::constant(1)).divrem(r).second.is_zero());
    CHECK(represents_primes(q).represents_primes);
    CHECK(represents_primes(r).represents_primes);
}
