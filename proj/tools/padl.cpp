// Command-line front end.  Parses the run configuration, dispatches to the
// suite runner, and prints the report in the requested format.  Stdout carries
// exactly the report bytes so repeated runs can be compared verbatim; timings
// and diagnostics go to stderr.
//
// Exit codes: 0 every check passed, 1 at least one check failed,
// 2 the configuration was rejected before any computation ran.

#include "padl/report.hpp"
#include "padl/suites.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <stdexcept>
#include <string>

namespace {

// --field accepts "Q" for the rationals or "D=<n>" for Q(sqrt(n)).
bool parse_field(const std::string& text, padl::RunConfig& cfg, std::string& err) {
    if (text == "Q") {
        cfg.rational_field = true;
        return true;
    }
    if (text.rfind("D=", 0) == 0) {
        try {
            std::size_t used = 0;
            long n = std::stol(text.substr(2), &used);
            if (used != text.size() - 2)
                throw std::invalid_argument("trailing characters");
            cfg.rational_field = false;
            cfg.disc = n;
            return true;
        } catch (const std::exception&) {
            err = "--field D=<n> needs an integer, got '" + text + "'";
            return false;
        }
    }
    err = "--field must be Q or D=<n>, got '" + text + "'";
    return false;
}

} // namespace

int main(int argc, char** argv) {
    padl::RunConfig cfg;
    std::string command;
    std::string field_text = "Q";

    CLI::App app{"exact Hecke L-values, Eisenstein coefficients, and p-adic measures"};
    app.set_config("--config", "",
                   "plain key=value file (keys match the long option names); "
                   "command-line flags override it");
    app.add_option("command", command,
                   "zeta | lvalues | kummer | eisenstein-check | lambda | "
                   "dr-measure | iwasawa | verify-all")
        ->required()
        ->check(CLI::IsMember({"zeta", "lvalues", "kummer", "eisenstein-check",
                               "lambda", "dr-measure", "iwasawa", "verify-all"}));
    app.add_option("--field", field_text,
                   "base field: Q, or D=<n> for the real quadratic field Q(sqrt(n))")
        ->capture_default_str();
    app.add_option("--p", cfg.p, "odd prime")->capture_default_str();
    app.add_option("--m", cfg.level, "level exponent: work modulo p^m")->capture_default_str();
    app.add_option("--k", cfg.weights, "weights, comma separated")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--c", cfg.smoothing,
                   "generator of the principal smoothing ideal, coprime to p")
        ->capture_default_str();
    app.add_option("--prec", cfg.precision, "p-adic working precision")->capture_default_str();
    app.add_option("--trunc", cfg.truncation, "power-series truncation order")
        ->capture_default_str();
    app.add_option("--bound", cfg.bound, "cutoff for numeric series and lattice sums")
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "also write the report to this file");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string err;
    if (!parse_field(field_text, cfg, err)) {
        std::cerr << "configuration error: " << err << "\n";
        return 2;
    }

    padl::Report report;
    auto start = std::chrono::steady_clock::now();
    try {
        report = padl::run_command(cfg, command);
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    std::string body;
    if (cfg.format == "json")
        body = padl::to_json(report);
    else if (cfg.format == "csv")
        body = padl::to_csv(report);
    else
        body = padl::to_table(report);

    std::cout << body;
    if (!cfg.out_path.empty()) {
        try {
            padl::write_file(cfg.out_path, body);
        } catch (const std::runtime_error& e) {
            std::cerr << "configuration error: " << e.what() << "\n";
            return 2;
        }
    }

    std::cerr << command << ": " << report.records.size() << " records, "
              << report.fail_count() << " failing, " << elapsed << " ms\n";
    return report.all_pass() ? 0 : 1;
}
