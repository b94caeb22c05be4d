#include "padl/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace padl {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::not_applicable: return "not-applicable";
    }
    throw std::logic_error("unreachable verdict");
}

Verdict verdict_from(const std::string& s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "not-applicable") return Verdict::not_applicable;
    throw std::invalid_argument("unknown verdict: " + s);
}

bool Report::all_pass() const { return fail_count() == 0; }

size_t Report::fail_count() const {
    size_t n = 0;
    for (const auto& r : records)
        if (r.verdict == Verdict::fail) ++n;
    return n;
}

std::string numeric_tagged(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string("numeric:") + buf;
}

std::string to_json(const Report& r) {
    nlohmann::ordered_json doc;
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& rec : r.records) {
        nlohmann::ordered_json row;
        row["command"] = rec.command;
        row["field"] = rec.field;
        row["p"] = rec.p;
        row["m"] = rec.m;
        row["k"] = rec.k;
        row["chi-id"] = rec.chi_id;
        row["lhs"] = rec.lhs;
        row["rhs"] = rec.rhs;
        row["verdict"] = verdict_name(rec.verdict);
        row["ms"] = rec.ms;
        row["note"] = rec.note;
        doc["records"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

Report from_json(const std::string& text) {
    auto doc = nlohmann::json::parse(text);
    Report r;
    for (const auto& row : doc.at("records")) {
        Record rec;
        rec.command = row.at("command").get<std::string>();
        rec.field = row.at("field").get<std::string>();
        rec.p = row.at("p").get<std::string>();
        rec.m = row.at("m").get<std::string>();
        rec.k = row.at("k").get<std::string>();
        rec.chi_id = row.at("chi-id").get<std::string>();
        rec.lhs = row.at("lhs").get<std::string>();
        rec.rhs = row.at("rhs").get<std::string>();
        rec.verdict = verdict_from(row.at("verdict").get<std::string>());
        rec.ms = row.at("ms").get<std::string>();
        rec.note = row.value("note", std::string());
        r.records.push_back(std::move(rec));
    }
    return r;
}

namespace {

// cyclotomic coefficient vectors contain commas, so quote where needed
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> row_cells(const Record& rec, bool with_note) {
    std::vector<std::string> cells = {rec.command, rec.field, rec.p,
                                      rec.m,       rec.k,     rec.chi_id,
                                      rec.lhs,     rec.rhs,   verdict_name(rec.verdict),
                                      rec.ms};
    if (with_note) cells.push_back(rec.note);
    return cells;
}

}  // namespace

std::string to_csv(const Report& r) {
    std::string out = "command,field,p,m,k,chi-id,lhs,rhs,verdict,ms\n";
    for (const auto& rec : r.records) {
        auto cells = row_cells(rec, false);
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += csv_escape(cells[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_table(const Report& r) {
    const std::vector<std::string> header = {"command", "field", "p",       "m",  "k",   "chi-id",
                                             "lhs",     "rhs",   "verdict", "ms", "note"};
    std::vector<size_t> width(header.size());
    for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& rec : r.records) {
        auto cells = row_cells(rec, true);
        for (size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    }
    auto pad_row = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) line += "  ";
            line += cells[i];
            if (i + 1 < cells.size()) line.append(width[i] - cells[i].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        return line + "\n";
    };
    std::string out = pad_row(header);
    std::string rule;
    for (size_t i = 0; i < width.size(); ++i) {
        if (i) rule += "  ";
        rule.append(width[i], '-');
    }
    out += rule + "\n";
    for (const auto& rec : r.records) out += pad_row(row_cells(rec, true));
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + ": " + std::strerror(errno));
    out << content;
    out.close();
    if (!out) throw std::runtime_error("write failed for " + path + ": " + std::strerror(errno));
}

}  // namespace padl
