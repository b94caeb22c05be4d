#pragma once

#include "padl/measures.hpp"
#include "padl/report.hpp"

namespace padl {

// One batch-run configuration.  Every command reads the subset of fields it
// needs; validate() enforces the hypotheses the mathematics requires before
// any computation starts.
struct RunConfig {
    bool rational_field = true;
    long disc = 5;                           // D in Q(sqrt D) when degree 2
    unsigned long p = 5;
    unsigned level = 1;                      // m
    std::vector<unsigned> weights = {2, 3, 4, 5};
    long smoothing = 2;                      // c = <smoothing>
    unsigned precision = 6;                  // p-adic precision N
    unsigned truncation = 8;                 // series truncation M
    long bound = 100000;                     // numeric-oracle truncation B
    std::string out_path;
    std::string format = "table";
};

// throws std::invalid_argument naming the violated hypothesis
void validate(const RunConfig& cfg);

QuadField config_field(const RunConfig& cfg);
std::string field_label(const RunConfig& cfg);

// the verification suites behind the CLI commands; each returns one record
// per check, in a fixed order, so identical configs give identical reports
Report run_zeta(const RunConfig& cfg);
Report run_lvalues(const RunConfig& cfg);
Report run_kummer(const RunConfig& cfg);
Report run_eisenstein_check(const RunConfig& cfg);
Report run_lambda(const RunConfig& cfg);
Report run_dr_measure(const RunConfig& cfg);
Report run_iwasawa(const RunConfig& cfg);

// dispatch by command name; "verify-all" concatenates every suite above in
// the order listed.  Unknown names throw std::invalid_argument.
Report run_command(const RunConfig& cfg, const std::string& command);

}  // namespace padl
