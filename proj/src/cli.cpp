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

#include "cyclofam/cli.hpp"

#include <fstream>
#include <map>

#include <CLI11.hpp>

#include "cyclofam/bounds.hpp"
#include "cyclofam/errors.hpp"
#include "cyclofam/render.hpp"
#include "cyclofam/search.hpp"

namespace cyclofam {

namespace {

bool write_output(const std::string& text, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
    if (out_path.empty()) {
        out << text;
        return true;
    }
    std::ofstream file(out_path);
    if (!file) {
        err << "cannot open output file: " << out_path << "\n";
        return false;
    }
    file << text;
    return true;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclotomic families of pairing-friendly elliptic-curve parameters"};
    app.name("cyclofam");
    app.require_subcommand(1);

    const std::map<std::string, OutputFormat> format_names{
        {"markdown", OutputFormat::markdown},
        {"csv", OutputFormat::csv},
        {"json", OutputFormat::json}};
    const std::map<std::string, ValidationMode> mode_names{
        {"table1", ValidationMode::table1}, {"strict", ValidationMode::strict}};

    // search
    auto* search_cmd = app.add_subcommand(
        "search", "Search all embedding degrees k <= k-max for the best family per k");
    std::uint64_t k_max = 0;
    OutputFormat format = OutputFormat::markdown;
    ValidationMode mode = ValidationMode::table1;
    std::string out_path;
    int threads = 0;
    search_cmd->add_option("--k-max", k_max, "largest embedding degree")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1000}));
    search_cmd->add_option("--format", format, "markdown, csv or json")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    search_cmd->add_option("--mode", mode, "validation mode: table1 or strict")
        ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));
    search_cmd->add_option("--out", out_path, "write the report to a file");
    search_cmd->add_option("--threads", threads, "worker threads (0 = auto, 1 = serial)");

    // family
    auto* family_cmd =
        app.add_subcommand("family", "Construct and validate a single family (k, D, g)");
    std::uint64_t fam_k = 0, fam_d = 0, fam_g = 0;
    OutputFormat fam_format = OutputFormat::markdown;  // markdown doubles as text here
    ValidationMode fam_mode = ValidationMode::table1;
    family_cmd->add_option("--k", fam_k, "embedding degree")->required()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000}));
    family_cmd->add_option("--d", fam_d, "CM discriminant (square-free)")->required();
    family_cmd->add_option("--g", fam_g, "exponent selecting zeta_k^g")->required();
    family_cmd->add_option("--format", fam_format, "text (default) or json")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, OutputFormat>{{"text", OutputFormat::markdown},
                                                {"json", OutputFormat::json}},
            CLI::ignore_case));
    family_cmd->add_option("--mode", fam_mode, "validation mode: table1 or strict")
        ->transform(CLI::CheckedTransformer(mode_names, CLI::ignore_case));

    // bounds
    auto* bounds_cmd = app.add_subcommand(
        "bounds", "Audit every (k, D) against the rho-value bound table");
    std::uint64_t bounds_k_max = 0;
    int bounds_threads = 0;
    bounds_cmd->add_option("--k-max", bounds_k_max, "largest embedding degree")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1000}));
    bounds_cmd->add_option("--threads", bounds_threads, "worker threads (0 = auto, 1 = serial)");

    // reduce
    auto* reduce_cmd =
        app.add_subcommand("reduce", "Print the residue of x^i in Q[x]/(Phi_k)");
    std::uint64_t red_k = 0;
    std::string red_exp;
    reduce_cmd->add_option("--k", red_k, "cyclotomic index")->required()
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000}));
    reduce_cmd->add_option("--exp", red_exp, "exponent i >= 0")->required();

    // check-poly
    auto* check_cmd = app.add_subcommand(
        "check-poly", "Representation report for a polynomial in coefficient form");
    std::string poly_text;
    check_cmd
        ->add_option("poly", poly_text,
                     "comma-separated reduced rationals, ascending degree (e.g. \"1,6,24,36,36\")")
        ->required();

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv;
    argv.push_back("cyclofam");
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(search_cmd)) {
            SearchOptions options;
            options.mode = mode;
            options.threads = threads;
            const auto records = search_range(k_max, options);
            return write_output(render_search(records, format), out_path, out, err) ? 0 : 1;
        }

        if (app.got_subcommand(family_cmd)) {
            const FamilyCandidate c = construct_candidate({fam_k, fam_d, fam_g});
            const ValidationReport rep = validate_complete_family(c, fam_mode);
            out << (fam_format == OutputFormat::json ? render_family_json(c, rep)
                                                     : render_family_text(c, rep));
            return 0;
        }

        if (app.got_subcommand(bounds_cmd)) {
            bool all_pass = true;
            for (const BoundsLine& line : audit_range(bounds_k_max, bounds_threads)) {
                out << render_bounds_line(line) << "\n";
                if (line.report && !line.report->pass) all_pass = false;
            }
            return all_pass ? 0 : 1;
        }

        if (app.got_subcommand(reduce_cmd)) {
            const Integer exponent(red_exp);
            if (exponent < 0) throw std::invalid_argument("exponent must be >= 0");
            const CycloModulusPtr mod = CycloModulus::create(red_k);
            out << power_of_x_mod(mod, exponent).residue().pretty() << "\n";
            return 0;
        }

        if (app.got_subcommand(check_cmd)) {
            const Polynomial f = Polynomial::parse(poly_text);
            out << render_repr_report(f, represents_primes(f));
            return 0;
        }
    } catch (const FamilyNonexistentError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedShapeError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace cyclofam
