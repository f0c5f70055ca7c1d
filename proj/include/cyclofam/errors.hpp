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

#ifndef CYCLOFAM_ERRORS_HPP
#define CYCLOFAM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclofam {

/// Base class for all library-level failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Q(sqrt(-D)) does not embed into Q(zeta_k): the requested family cannot exist.
class FamilyNonexistentError : public Error {
public:
    using Error::Error;
};

/// k is not of the form 2^m * p^n, which the search and the bound table require.
class UnsupportedShapeError : public Error {
public:
    using Error::Error;
};

/// (k, D) falls outside the case table of rho-value bounds.
class OutsideBoundTableError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input; `position` is a 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace cyclofam

#endif
