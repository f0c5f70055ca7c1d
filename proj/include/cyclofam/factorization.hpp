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

#ifndef CYCLOFAM_FACTORIZATION_HPP
#define CYCLOFAM_FACTORIZATION_HPP

#include <utility>
#include <vector>

#include "cyclofam/polynomial.hpp"

namespace cyclofam {

/// f = content * prod_i factors[i].first ^ factors[i].second, where each
/// factor is a primitive integer polynomial with positive leading
/// coefficient, irreducible over Q, in a canonical deterministic order.
struct FactoredPoly {
    Rational content;
    std::vector<std::pair<Polynomial, int>> factors;
};

/// Exact factorization over Q. The pipeline: rational content, squarefree
/// decomposition over Z, then per squarefree part either a modular
/// irreducibility proof or a Zassenhaus split (factor modulo a good prime,
/// Hensel-lift past the Mignotte bound, recombine factor subsets).
/// Deterministic; throws std::invalid_argument on the zero polynomial.
FactoredPoly factor_over_q(const Polynomial& f);

/// Exact irreducibility over Q of the primitive part of f. Throws
/// std::invalid_argument on constant input.
bool irreducible_over_q(const Polynomial& f);

/// f = content * prod parts[i].first ^ parts[i].second with each part
/// squarefree, primitive, pairwise coprime (Yun's algorithm over Z).
struct SquarefreeDecomposition {
    Rational content;
    std::vector<std::pair<Polynomial, int>> parts;
};
SquarefreeDecomposition squarefree_decomposition(const Polynomial& f);

}  // namespace cyclofam

#endif
