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

#ifndef CYCLOFAM_CYCLOTOMIC_HPP
#define CYCLOFAM_CYCLOTOMIC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>

#include "cyclofam/polynomial.hpp"

namespace cyclofam {

/// Decomposition k = 2^m * p^n with p an odd prime. n = 0 encodes a pure
/// power of two (p is then meaningless and set to 0); m = 0 an odd prime
/// power. k = 1 has no shape at all.
struct PrimePowerShape {
    unsigned m = 0;
    std::uint64_t p = 0;
    unsigned n = 0;
};

/// Shape of k when k = 2^m * p^n (k >= 2), std::nullopt otherwise.
std::optional<PrimePowerShape> two_power_times_prime_power(std::uint64_t k);

/// n-th cyclotomic polynomial. Closed forms are used for n = 2^m, p^e,
/// 2p^e and 2^m p^e; everything else goes through the divisor-product
/// construction.
Polynomial cyclotomic_poly(std::uint64_t n);

/// Divisor-product construction of Phi_n, with no closed-form shortcuts.
/// Slower; kept as an independent cross-check of cyclotomic_poly.
Polynomial cyclotomic_poly_generic(std::uint64_t n);

/// The quotient ring L = Q[x]/(Phi_k(x)). Immutable and freely shareable
/// across threads.
class CycloModulus {
public:
    static std::shared_ptr<const CycloModulus> create(std::uint64_t k);

    std::uint64_t k() const { return k_; }
    std::uint64_t phi() const { return phi_; }
    const Polynomial& modulus() const { return modulus_; }
    const std::optional<PrimePowerShape>& shape() const { return shape_; }

    /// Unique residue of a with degree < phi(k). When the shape of k is
    /// known this runs monomial by monomial through the closed-form
    /// residues of x^i (O(p) coefficient writes per monomial); otherwise it
    /// falls back to long division.
    Polynomial reduce(const Polynomial& a) const;

    /// Residue of x^i (i arbitrary; reduced mod k first since x^k = 1).
    Polynomial power_of_x(std::uint64_t i) const;

private:
    CycloModulus(std::uint64_t k, std::uint64_t phi, Polynomial modulus,
                 std::optional<PrimePowerShape> shape)
        : k_(k), phi_(phi), modulus_(std::move(modulus)), shape_(shape) {}

    void accumulate_power(std::vector<Rational>& acc, std::uint64_t i,
                          const Rational& c) const;

    std::uint64_t k_;
    std::uint64_t phi_;
    Polynomial modulus_;
    std::optional<PrimePowerShape> shape_;
};

using CycloModulusPtr = std::shared_ptr<const CycloModulus>;

/// A residue in Q[x]/(Phi_k). Elements carry their modulus so that
/// mixed-modulus arithmetic is a detectable error.
class CycloElement {
public:
    CycloElement(CycloModulusPtr mod, Polynomial value);

    const Polynomial& residue() const { return residue_; }
    const CycloModulusPtr& modulus() const { return mod_; }
    bool is_zero() const { return residue_.is_zero(); }

    CycloElement operator-() const;
    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    friend bool operator==(const CycloElement& a, const CycloElement& b);
    friend bool operator!=(const CycloElement& a, const CycloElement& b) {
        return !(a == b);
    }

private:
    CycloModulusPtr mod_;
    Polynomial residue_;  // invariant: deg < phi(k) or zero
};

CycloElement ring_mul(const CycloElement& a, const CycloElement& b);

/// Residue of x^i; i >= 0 is reduced modulo k before dispatch.
CycloElement power_of_x_mod(const CycloModulusPtr& mod, const Integer& i);

/// Legendre symbol (a/p) in {-1, 0, 1}; p must be an odd prime.
int legendre_symbol(const Integer& a, const Integer& p);

/// Conductor of Q(sqrt(-D)) for square-free D >= 1: D when D = 3 (mod 4),
/// 4D otherwise. This is the least n with sqrt(-D) in Q(zeta_n).
std::uint64_t conductor(std::uint64_t D);

/// All square-free D >= 1 whose conductor divides k, in increasing order.
/// These are exactly the CM discriminants for which sqrt(-D) lives in
/// Q(zeta_k); for k = 2^m p^n the list is a subset of {1, 2, p, 2p}.
std::vector<std::uint64_t> admissible_discriminants(std::uint64_t k);

/// An element s of Q[x]/(Phi_k) with s^2 = -D, assembled from Gauss sums
/// (one per odd prime divisor of D), the zeta_8 combination for a factor 2,
/// and a zeta_4 unit fix when the raw product squares to +D. Throws
/// FamilyNonexistentError unless conductor(D) divides k.
CycloElement sqrt_minus_d(const CycloModulusPtr& mod, std::uint64_t D);

}  // namespace cyclofam

#endif
