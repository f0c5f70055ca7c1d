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

#ifndef CYCLOFAM_RENDER_HPP
#define CYCLOFAM_RENDER_HPP

#include <string>
#include <vector>

#include "cyclofam/bounds.hpp"
#include "cyclofam/family.hpp"
#include "cyclofam/search.hpp"

namespace cyclofam {

enum class OutputFormat { markdown, csv, json };

/// Search records in the chosen format. All three renderings carry the same
/// quadruples; rows without a family read "none" (csv/json) or the phrase
/// "No such cyclotomic families." (markdown).
std::string render_search(const std::vector<SearchRecord>& records, OutputFormat format);

std::string render_search_markdown(const std::vector<SearchRecord>& records);
std::string render_search_csv(const std::vector<SearchRecord>& records);
std::string render_search_json(const std::vector<SearchRecord>& records);

/// Full candidate record as JSON: coefficient strings for t, r, q, y, s,
/// the exact rho and the validation checks.
std::string render_family_json(const FamilyCandidate& c, const ValidationReport& rep);

std::string render_family_text(const FamilyCandidate& c, const ValidationReport& rep);

/// One line per (k, D) audit: bound (exact and 3-decimal), kind, verdict,
/// argmin g.
std::string render_bounds_line(const BoundsLine& line);

std::string render_repr_report(const Polynomial& f, const ReprReport& rep);

}  // namespace cyclofam

#endif
