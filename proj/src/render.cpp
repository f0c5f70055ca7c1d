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

#include "cyclofam/render.hpp"

#include <json.hpp>

namespace cyclofam {

namespace {

const char* kNoFamilyPhrase = "No such cyclotomic families.";

nlohmann::json record_json(const SearchRecord& rec) {
    nlohmann::json j;
    j["k"] = rec.k;
    if (rec.outcome) {
        const SearchOutcome& o = *rec.outcome;
        j["family"] = {{"rho", o.rho.str()},
                       {"rho_display", o.rho_display},
                       {"D", o.D},
                       {"g", o.g},
                       {"deg_t", o.deg_t}};
    } else {
        j["family"] = nullptr;
    }
    return j;
}

}  // namespace

std::string render_search_markdown(const std::vector<SearchRecord>& records) {
    std::string out = "| k | (rho_k, D, g, deg t(x)) |\n|---:|:---|\n";
    for (const SearchRecord& rec : records) {
        out += "| " + std::to_string(rec.k) + " | ";
        if (rec.outcome) {
            const SearchOutcome& o = *rec.outcome;
            out += "(" + o.rho_display + "," + std::to_string(o.D) + "," +
                   std::to_string(o.g) + "," + std::to_string(o.deg_t) + ")";
        } else {
            out += kNoFamilyPhrase;
        }
        out += " |\n";
    }
    return out;
}

std::string render_search_csv(const std::vector<SearchRecord>& records) {
    std::string out = "k,rho,D,g,deg_t\n";
    for (const SearchRecord& rec : records) {
        out += std::to_string(rec.k) + ",";
        if (rec.outcome) {
            const SearchOutcome& o = *rec.outcome;
            out += o.rho_display + "," + std::to_string(o.D) + "," + std::to_string(o.g) +
                   "," + std::to_string(o.deg_t);
        } else {
            out += "none";
        }
        out += "\n";
    }
    return out;
}

std::string render_search_json(const std::vector<SearchRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SearchRecord& rec : records) arr.push_back(record_json(rec));
    return arr.dump(2) + "\n";
}

std::string render_search(const std::vector<SearchRecord>& records, OutputFormat format) {
    switch (format) {
        case OutputFormat::markdown: return render_search_markdown(records);
        case OutputFormat::csv: return render_search_csv(records);
        case OutputFormat::json: return render_search_json(records);
    }
    return {};
}

namespace {

nlohmann::json repr_json(const ReprReport& rep) {
    nlohmann::json j;
    j["non_constant"] = rep.non_constant;
    j["positive_leading"] = rep.positive_leading;
    j["represents_integers"] = rep.represents_integers;
    j["N"] = rep.N.get_str();
    j["irreducible"] = rep.irreducible;
    j["value_gcd_M"] = rep.value_gcd_M ? nlohmann::json(rep.value_gcd_M->get_str())
                                       : nlohmann::json(nullptr);
    j["blocking_prime"] = rep.blocking_prime ? nlohmann::json(rep.blocking_prime->get_str())
                                             : nlohmann::json(nullptr);
    j["represents_primes"] = rep.represents_primes;
    return j;
}

}  // namespace

std::string render_family_json(const FamilyCandidate& c, const ValidationReport& rep) {
    nlohmann::json j;
    j["k"] = c.params.k;
    j["D"] = c.params.D;
    j["g"] = c.params.g;
    j["t"] = c.t.str();
    j["r"] = c.r.str();
    j["q"] = c.q.str();
    j["y"] = c.y.str();
    j["s"] = c.s.str();
    j["rho"] = {{"num", c.rho.num().get_str()}, {"den", c.rho.den().get_str()}};
    j["rho_display"] = rho_display_3dp(c.rho);
    nlohmann::json checks;
    checks["q_represents_primes"] = rep.q_report.represents_primes;
    checks["y_represents_integers"] = rep.y_represents_integers;
    checks["mode"] = rep.mode == ValidationMode::table1 ? "table1" : "strict";
    if (rep.mode == ValidationMode::strict) {
        checks["power_exponent"] = rep.power_exponent;
        if (rep.power_base) checks["power_base"] = rep.power_base->str();
        if (rep.base_report) checks["base_represents_primes"] = rep.base_report->represents_primes;
        if (rep.r_report) checks["r_represents_primes"] = rep.r_report->represents_primes;
        checks["divisibility_ok"] = rep.divisibility_ok;
    }
    checks["pass"] = rep.pass;
    j["checks"] = checks;
    j["q_report"] = repr_json(rep.q_report);
    return j.dump(2) + "\n";
}

std::string render_family_text(const FamilyCandidate& c, const ValidationReport& rep) {
    std::string out;
    out += "k = " + std::to_string(c.params.k) + ", D = " + std::to_string(c.params.D) +
           ", g = " + std::to_string(c.params.g) + "\n";
    out += "t(x) = " + c.t.pretty() + "\n";
    out += "r(x) = " + c.r.pretty() + "\n";
    out += "y(x) = " + c.y.pretty() + "\n";
    out += "q(x) = " + c.q.pretty() + "\n";
    out += "s(x) = " + c.s.pretty() + "   (s^2 = -" + std::to_string(c.params.D) + ")\n";
    out += "rho  = " + c.rho.str() + " (" + rho_display_3dp(c.rho) + ")\n";
    const ReprReport& q = rep.q_report;
    out += "q represents primes: " + std::string(q.represents_primes ? "yes" : "no");
    out += " (N = " + q.N.get_str();
    if (q.value_gcd_M) out += ", M = " + q.value_gcd_M->get_str();
    if (q.blocking_prime) out += ", blocking prime = " + q.blocking_prime->get_str();
    if (!q.irreducible) out += ", irreducible = no";
    out += ")\n";
    out += "y represents integers: " + std::string(rep.y_represents_integers ? "yes" : "no") +
           " (N = " + rep.y_N.get_str() + ")\n";
    if (rep.mode == ValidationMode::strict) {
        out += "q = h^" + std::to_string(rep.power_exponent);
        if (rep.power_base) out += " with h = " + rep.power_base->pretty();
        out += "\n";
        if (rep.base_report)
            out += "h represents primes: " +
                   std::string(rep.base_report->represents_primes ? "yes" : "no") + "\n";
        if (rep.r_report)
            out += "r represents primes: " +
                   std::string(rep.r_report->represents_primes ? "yes" : "no") + "\n";
    }
    out += std::string("verdict: ") + (rep.pass ? "PASS" : "FAIL") + "\n";
    return out;
}

std::string render_bounds_line(const BoundsLine& line) {
    std::string out = "k=" + std::to_string(line.k) + " D=" + std::to_string(line.D);
    if (!line.report) return out + " outside the bound case table (no audit)";
    const AuditReport& rep = *line.report;
    out += " bound=" + rep.bound.value.str() + " (" + to_string(rep.bound.kind) + ")";
    out += " audit=" + std::string(rep.pass ? "PASS" : "FAIL");
    out += " argmin_g=" + std::to_string(rep.argmin_g);
    out += " min_rho=" + rep.min_rho.str();
    out += " bound_dec=" + rho_display_3dp(rep.bound.value);
    for (const std::string& v : rep.violations) out += "\n  violation: " + v;
    return out;
}

std::string render_repr_report(const Polynomial& f, const ReprReport& rep) {
    std::string out;
    out += "polynomial: " + f.str() + "   (" + f.pretty() + ")\n";
    out += "non_constant: " + std::string(rep.non_constant ? "true" : "false") + "\n";
    out += "positive_leading: " + std::string(rep.positive_leading ? "true" : "false") + "\n";
    out += "represents_integers: " + std::string(rep.represents_integers ? "true" : "false") +
           " (N = " + rep.N.get_str() + ")\n";
    out += "irreducible: " + std::string(rep.irreducible ? "true" : "false") + "\n";
    out += "value_gcd_M: " + (rep.value_gcd_M ? rep.value_gcd_M->get_str() : "n/a") + "\n";
    out += "blocking_prime: " + (rep.blocking_prime ? rep.blocking_prime->get_str() : "none") + "\n";
    out += "represents_primes: " + std::string(rep.represents_primes ? "true" : "false") + "\n";
    return out;
}

}  // namespace cyclofam
