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

#ifndef CYCLOFAM_POLYNOMIAL_HPP
#define CYCLOFAM_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclofam/rational.hpp"

namespace cyclofam {

/// Dense univariate polynomial over Q, coefficients stored in ascending
/// degree order with a nonzero trailing entry (the zero polynomial stores
/// nothing at all).
///
/// The degree of the zero polynomial is represented as std::nullopt rather
/// than any integer, so degree comparisons against it never pass silently.
class Polynomial {
public:
    /// The zero polynomial.
    Polynomial() = default;

    /// Normalizing constructor: strips trailing zeros. Coefficients are
    /// already reduced because Rational reduces on construction.
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational c);
    /// c * x^deg
    static Polynomial monomial(Rational c, std::size_t deg);
    static Polynomial x() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    /// Number of stored coefficients: degree + 1, or 0 for the zero polynomial.
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of x^i (zero beyond the stored range).
    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }
    const Rational& leading() const { return coeffs_.back(); }  // requires nonzero
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_constant() const { return coeffs_.size() <= 1; }
    /// True when every coefficient is an integer.
    bool has_integer_coeffs() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Rational& c);
    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }
    friend Polynomial operator/(const Polynomial& a, const Rational& c);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    /// Exact Euclidean division: *this = q*b + r with deg r < deg b or r = 0.
    /// Throws std::invalid_argument when b is the zero polynomial.
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& b) const;

    Rational eval(const Integer& n) const;
    Rational eval(const Rational& v) const;

    Polynomial derivative() const;
    Polynomial pow(unsigned e) const;
    /// this(g(x)), by Horner's rule.
    Polynomial compose(const Polynomial& g) const;

    /// Least N >= 1 such that N * this has integer coefficients
    /// (1 for the zero polynomial).
    Integer denominator_lcm() const;

    /// Canonical textual form: comma-separated reduced rationals in
    /// ascending degree ("1/3,0,2" is 1/3 + 2x^2); the zero polynomial is "0".
    std::string str() const;
    /// Human-readable form, descending powers ("x^3 - x").
    std::string pretty(const std::string& var = "x") const;

    /// Parses the canonical textual form. Rejects unreduced or malformed
    /// entries with a ParseError carrying the character position.
    static Polynomial parse(const std::string& text);

private:
    std::vector<Rational> coeffs_;
};

}  // namespace cyclofam

#endif
