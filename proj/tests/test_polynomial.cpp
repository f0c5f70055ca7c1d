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

#include <random>

#include "cyclofam/errors.hpp"
#include "cyclofam/polynomial.hpp"
#include "test_util.hpp"

using namespace cyclofam;
using cyclofam::testing::random_poly;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, 4).den() == 2);
    CHECK(Rational(0, 5).num() == 0);
    CHECK(Rational(0, 5).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(-6, 3).str() == "-2");
}

TEST_CASE("normalization strips trailing zeros") {
    const Polynomial p(std::vector<Rational>{Rational(1), Rational(2), Rational(0), Rational(0)});
    REQUIRE(p.degree().has_value());
    CHECK(*p.degree() == 1);
    CHECK(p.str() == "1,2");

    const Polynomial c(std::vector<Rational>{Rational(2, 4)});
    CHECK(c.str() == "1/2");

    const Polynomial z(std::vector<Rational>{});
    CHECK(z.is_zero());
    CHECK_FALSE(z.degree().has_value());
}

TEST_CASE("difference of squares and annihilator") {
    const Polynomial xp1 = Polynomial::parse("1,1");
    const Polynomial xm1 = Polynomial::parse("-1,1");
    CHECK(xp1 * xm1 == Polynomial::parse("-1,0,1"));
    CHECK((Polynomial{} * xp1).is_zero());
    CHECK((xp1 * Polynomial{}).is_zero());
}

TEST_CASE("composite product: scaled square times cyclotomic factor") {
    // (1/3)(x-1)^2 (x^6+x^3+1) + x, expanded via the ring operations
    const Polynomial xm1 = Polynomial::parse("-1,1");
    const Polynomial c9 = Polynomial::parse("1,0,0,1,0,0,1");
    const Polynomial q = (xm1 * xm1 * c9) * Rational(1, 3) + Polynomial::x();
    CHECK(q.str() == "1/3,1/3,1/3,1/3,-2/3,1/3,1/3,-2/3,1/3");
    CHECK(q.degree().value() == 8);
    CHECK(q.eval(Integer(1)) == Rational(1));
}

TEST_CASE("divrem basics") {
    const Polynomial a = Polynomial::parse("-1,0,1");  // x^2 - 1
    const Polynomial b = Polynomial::parse("-1,1");    // x - 1
    const auto [q, r] = a.divrem(b);
    CHECK(q == Polynomial::parse("1,1"));
    CHECK(r.is_zero());

    // x^6 divided by x^4 - x^2 + 1 leaves remainder -1
    const Polynomial x6 = Polynomial::monomial(1, 6);
    const Polynomial phi12 = Polynomial::parse("1,0,-1,0,1");
    const auto [q2, r2] = x6.divrem(phi12);
    CHECK(r2 == Polynomial::constant(-1));
    CHECK(q2 == Polynomial::parse("1,0,1"));

    // rational quotient coefficients: x^3 / 2x
    const auto [q3, r3] = Polynomial::monomial(1, 3).divrem(Polynomial::monomial(2, 1));
    CHECK(q3 == Polynomial::monomial(Rational(1, 2), 2));
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(a.divrem(Polynomial{}), std::invalid_argument);
}

TEST_CASE("divrem round trip on random operands") {
    std::mt19937_64 rng(20260809);
    for (int iter = 0; iter < 300; ++iter) {
        const Polynomial a = random_poly(rng, 9);
        Polynomial b = random_poly(rng, 5);
        if (b.is_zero()) b = Polynomial::x();
        const auto [q, r] = a.divrem(b);
        CHECK(q * b + r == a);
        if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
    }
}

TEST_CASE("ring axioms on random operands") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 200; ++iter) {
        const Polynomial a = random_poly(rng, 6);
        const Polynomial b = random_poly(rng, 6);
        const Polynomial c = random_poly(rng, 6);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 200; ++iter) {
        const Polynomial a = random_poly(rng, 6);
        const Polynomial b = random_poly(rng, 6);
        std::uniform_int_distribution<long> pts(-8, 8);
        const Integer n(pts(rng));
        CHECK((a * b).eval(n) == a.eval(n) * b.eval(n));
        CHECK((a + b).eval(n) == a.eval(n) + b.eval(n));
    }
}

TEST_CASE("evaluation examples") {
    // (1/2)(x+1)^2
    const Polynomial f = Polynomial::parse("1/2,1,1/2");
    CHECK(f.eval(Integer(1)) == Rational(2));
    CHECK(f.eval(Integer(0)) == Rational(1, 2));
    CHECK(Polynomial{}.eval(Integer(12345)) == Rational(0));
}

TEST_CASE("denominator lcm") {
    CHECK(Polynomial::parse("1/2,0,1/3").denominator_lcm() == 6);
    CHECK(Polynomial::parse("1,6,24,36,36").denominator_lcm() == 1);
    CHECK(Polynomial{}.denominator_lcm() == 1);
}

TEST_CASE("denominator lcm is minimal") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 200; ++iter) {
        const Polynomial f = random_poly(rng, 7, 30, 24);
        const Integer N = f.denominator_lcm();
        CHECK((f * Rational(N)).has_integer_coeffs());
        for (const auto& [p, e] : factorize(N)) {
            if (N == 1) break;
            CHECK_FALSE((f * Rational(N / p)).has_integer_coeffs());
        }
    }
}

TEST_CASE("parse accepts canonical forms") {
    CHECK(Polynomial::parse("1,1") == Polynomial::parse("1,1"));
    CHECK(Polynomial::parse("1/3,0,2").coeff(2) == Rational(2));
    CHECK(Polynomial::parse("0").is_zero());
    CHECK(Polynomial::parse("").is_zero());
    CHECK(Polynomial::parse(" -5/3 , 1 ").coeff(0) == Rational(-5, 3));
    CHECK(Polynomial::parse("1,0").degree().value() == 0);  // trailing zero stripped
}

TEST_CASE("parse rejects malformed entries with positions") {
    CHECK_THROWS_AS(Polynomial::parse("2/4"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("1,,2"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("1,2,"), ParseError);
    CHECK_THROWS_AS(Polynomial::parse("1.5"), ParseError);

    try {
        Polynomial::parse("1,2/4");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("render round trip") {
    std::mt19937_64 rng(909090);
    for (int iter = 0; iter < 100; ++iter) {
        const Polynomial f = random_poly(rng, 8);
        CHECK(Polynomial::parse(f.str()) == f);
    }
}

TEST_CASE("pretty printing") {
    CHECK(Polynomial::parse("0,-1,0,1").pretty() == "x^3 - x");
    CHECK(Polynomial::parse("-1").pretty() == "-1");
    CHECK(Polynomial{}.pretty() == "0");
    CHECK(Polynomial::parse("1/2,1,1/2").pretty() == "1/2*x^2 + x + 1/2");
}

TEST_CASE("composition and power") {
    const Polynomial f = Polynomial::parse("1,0,1");   // x^2 + 1
    const Polynomial g = Polynomial::parse("-1,1");    // x - 1
    CHECK(f.compose(g) == Polynomial::parse("2,-2,1"));
    CHECK(g.pow(2) == Polynomial::parse("1,-2,1"));
    CHECK(g.pow(0) == Polynomial::constant(1));
}
