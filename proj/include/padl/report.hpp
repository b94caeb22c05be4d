#pragma once

#include <string>
#include <vector>

namespace padl {

enum class Verdict { pass, fail, not_applicable };

std::string verdict_name(Verdict v);
Verdict verdict_from(const std::string& s);

// One verification check.  Every value field is a string: exact quantities
// are fraction strings or cyclotomic coefficient vectors, numeric-oracle
// quantities carry a "numeric:" prefix (see numeric_tagged).  The ms column
// is kept empty in files so identical runs emit identical bytes; wall-clock
// timings go to the console instead.
struct Record {
    std::string command;
    std::string field;
    std::string p;
    std::string m;
    std::string k;
    std::string chi_id;
    std::string lhs;
    std::string rhs;
    Verdict verdict = Verdict::pass;
    std::string ms;
    std::string note;  // json and table output only; the csv schema is fixed

    bool operator==(const Record&) const = default;
};

struct Report {
    std::vector<Record> records;

    bool operator==(const Report&) const = default;
    bool all_pass() const;   // no fail verdicts (not-applicable does not fail)
    size_t fail_count() const;
};

// 12 significant digits with an explicit tag marking the value as coming
// from a floating-point oracle rather than exact arithmetic
std::string numeric_tagged(double x);

std::string to_json(const Report& r);
Report from_json(const std::string& text);
std::string to_csv(const Report& r);
std::string to_table(const Report& r);

void write_file(const std::string& path, const std::string& content);

}  // namespace padl
