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

#include "cyclofam/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cyclofam/errors.hpp"

namespace cyclofam {

namespace {

void strip_trailing_zeros(std::vector<Rational>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::constant(Rational c) {
    return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::monomial(Rational c, std::size_t deg) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(deg + 1);
    v[deg] = std::move(c);
    return Polynomial(std::move(v));
}

bool Polynomial::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_integer(); });
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    strip_trailing_zeros(coeffs_);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    strip_trailing_zeros(coeffs_);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
    if (c.is_zero()) return {};
    Polynomial r(a);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Polynomial operator/(const Polynomial& a, const Rational& c) {
    if (c.is_zero()) throw std::invalid_argument("Polynomial: division by zero scalar");
    Polynomial r(a);
    for (auto& x : r.coeffs_) x /= c;
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& b) const {
    if (b.is_zero())
        throw std::invalid_argument("Polynomial::divrem: division by zero polynomial");
    if (coeffs_.size() < b.coeffs_.size()) return {Polynomial{}, *this};

    const std::size_t db = b.coeffs_.size() - 1;
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot(coeffs_.size() - db);
    const Rational lead_inv = Rational(1) / b.coeffs_.back();

    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        const Rational q = rem[i] * lead_inv;
        quot[i - db] = q;
        rem[i] = Rational(0);
        for (std::size_t j = 0; j < db; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            rem[i - db + j] -= q * b.coeffs_[j];
        }
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Rational Polynomial::eval(const Integer& n) const { return eval(Rational(n)); }

Rational Polynomial::eval(const Rational& v) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * Rational(Integer(static_cast<unsigned long>(i)));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = Polynomial::constant(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::compose(const Polynomial& g) const {
    Polynomial acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * g + Polynomial::constant(coeffs_[i]);
    return acc;
}

Integer Polynomial::denominator_lcm() const {
    Integer n = 1;
    for (const auto& c : coeffs_) n = cyclofam::lcm(n, c.den());
    return n;
}

std::string Polynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].str();
    }
    return out;
}

std::string Polynomial::pretty(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const bool first = out.empty();
        const bool negative = c.sign() < 0;
        if (!first) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        const Rational a = negative ? -c : c;
        if (i == 0) {
            out += a.str();
        } else {
            if (a != Rational(1)) out += a.str() + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

bool all_space(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

Rational parse_entry(const std::string& text, std::size_t begin, std::size_t end) {
    std::size_t i = begin, j = end;
    while (i < j && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
    if (i == j) throw ParseError("empty coefficient entry", begin);

    std::size_t pos = i;
    if (text[pos] == '-') ++pos;
    std::size_t num_begin = pos;
    while (pos < j && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_begin) throw ParseError("expected an integer numerator", pos);
    const Integer num(text.substr(i, pos - i));

    if (pos == j) return Rational(num);

    if (text[pos] != '/') throw ParseError("unexpected character in coefficient", pos);
    const std::size_t den_begin = ++pos;
    while (pos < j && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin || pos != j)
        throw ParseError("expected a positive integer denominator", pos);
    if (text[den_begin] == '0')
        throw ParseError("denominator must be positive without leading zero", den_begin);
    const Integer den(text.substr(den_begin, pos - den_begin));
    if (cyclofam::gcd(cyclofam::abs(num), den) != 1)
        throw ParseError("coefficient is not in lowest terms", i);
    return Rational(num, den);
}

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
    if (text.empty() || all_space(text)) return {};
    std::vector<Rational> coeffs;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = text.find(',', begin);
        const std::size_t end = (comma == std::string::npos) ? text.size() : comma;
        coeffs.push_back(parse_entry(text, begin, end));
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace cyclofam
