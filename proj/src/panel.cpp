#include "legalmkt/panel.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace legalmkt {

namespace {

const std::vector<std::string> kColumns = {
    "county_id",    "district_id",  "state_id",  "year",
    "n_br",         "n_fs",         "emp_legal", "emp_nonlegal",
    "population",   "wage_avg",     "emp_skilled", "emp_unskilled",
    "wage_skilled", "wage_unskilled"};

std::string header_line() {
    std::string h;
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
        if (i) h += ',';
        h += kColumns[i];
    }
    return h;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("panel parse error at line " + std::to_string(line_no) + ": " + what);
}

double parse_double(const std::string& tok, std::size_t line_no, const char* col) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        parse_fail(line_no, std::string("bad numeric value '") + tok + "' in column " + col);
    }
    return v;
}

long parse_long(const std::string& tok, std::size_t line_no, const char* col) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        parse_fail(line_no, std::string("bad integer value '") + tok + "' in column " + col);
    }
    return v;
}

// Shortest decimal text that reads back to the same double.
std::string format_double(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) break;
    }
    return buf;
}

} // namespace

const std::vector<std::string>& CountyYearPanel::column_names() { return kColumns; }

void CountyYearPanel::add_row(const CountyYearRow& row) { rows_.push_back(row); }

void CountyYearPanel::finalize() {
    std::sort(rows_.begin(), rows_.end(), [](const CountyYearRow& a, const CountyYearRow& b) {
        if (a.county_id != b.county_id) return a.county_id < b.county_id;
        return a.year < b.year;
    });
    validate();
}

void CountyYearPanel::validate() const {
    std::set<std::pair<int, int>> seen;
    std::map<int, std::pair<int, int>> geography;
    for (const auto& r : rows_) {
        if (r.n_fs > r.n_br) {
            throw std::runtime_error("panel invariant violated: n_fs > n_br for county " +
                                     std::to_string(r.county_id) + " year " + std::to_string(r.year));
        }
        if (r.n_br < 0 || r.n_fs < 0) {
            throw std::runtime_error("panel invariant violated: negative counts for county " +
                                     std::to_string(r.county_id));
        }
        if (!seen.insert({r.county_id, r.year}).second) {
            throw std::runtime_error("panel invariant violated: duplicate (county, year) = (" +
                                     std::to_string(r.county_id) + ", " + std::to_string(r.year) + ")");
        }
        auto geo = std::make_pair(r.district_id, r.state_id);
        auto [it, inserted] = geography.insert({r.county_id, geo});
        if (!inserted && it->second != geo) {
            throw std::runtime_error("panel invariant violated: county " + std::to_string(r.county_id) +
                                     " maps to multiple districts or states");
        }
    }
}

std::vector<int> CountyYearPanel::county_ids() const {
    std::set<int> ids;
    for (const auto& r : rows_) ids.insert(r.county_id);
    return {ids.begin(), ids.end()};
}

std::vector<int> CountyYearPanel::years() const {
    std::set<int> ys;
    for (const auto& r : rows_) ys.insert(r.year);
    return {ys.begin(), ys.end()};
}

std::vector<double> CountyYearPanel::column(const std::string& name) const {
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
        if (name == "county_id") out.push_back(r.county_id);
        else if (name == "district_id") out.push_back(r.district_id);
        else if (name == "state_id") out.push_back(r.state_id);
        else if (name == "year") out.push_back(r.year);
        else if (name == "n_br") out.push_back(static_cast<double>(r.n_br));
        else if (name == "n_fs") out.push_back(static_cast<double>(r.n_fs));
        else if (name == "emp_legal") out.push_back(r.emp_legal);
        else if (name == "emp_nonlegal") out.push_back(r.emp_nonlegal);
        else if (name == "population") out.push_back(r.population);
        else if (name == "wage_avg") out.push_back(r.wage_avg);
        else if (name == "emp_skilled") out.push_back(r.emp_skilled);
        else if (name == "emp_unskilled") out.push_back(r.emp_unskilled);
        else if (name == "wage_skilled") out.push_back(r.wage_skilled);
        else if (name == "wage_unskilled") out.push_back(r.wage_unskilled);
        else throw std::invalid_argument("unknown panel column '" + name + "'");
    }
    return out;
}

void write_panel(const CountyYearPanel& panel, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << header_line() << '\n';
    for (const auto& r : panel.rows()) {
        out << r.county_id << ',' << r.district_id << ',' << r.state_id << ',' << r.year << ','
            << r.n_br << ',' << r.n_fs << ','
            << format_double(r.emp_legal) << ',' << format_double(r.emp_nonlegal) << ','
            << format_double(r.population) << ',' << format_double(r.wage_avg) << ','
            << format_double(r.emp_skilled) << ',' << format_double(r.emp_unskilled) << ','
            << format_double(r.wage_skilled) << ',' << format_double(r.wage_unskilled) << '\n';
    }
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

CountyYearPanel read_panel(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open panel file '" + path + "'");
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty panel file '" + path + "'");
    if (line != header_line()) {
        throw std::runtime_error("unexpected panel header in '" + path + "'");
    }
    CountyYearPanel panel;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> tok;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) tok.push_back(field);
        if (tok.size() != kColumns.size()) {
            parse_fail(line_no, "expected " + std::to_string(kColumns.size()) + " fields, got " +
                                    std::to_string(tok.size()));
        }
        CountyYearRow r;
        r.county_id = static_cast<int>(parse_long(tok[0], line_no, "county_id"));
        r.district_id = static_cast<int>(parse_long(tok[1], line_no, "district_id"));
        r.state_id = static_cast<int>(parse_long(tok[2], line_no, "state_id"));
        r.year = static_cast<int>(parse_long(tok[3], line_no, "year"));
        r.n_br = parse_long(tok[4], line_no, "n_br");
        r.n_fs = parse_long(tok[5], line_no, "n_fs");
        r.emp_legal = parse_double(tok[6], line_no, "emp_legal");
        r.emp_nonlegal = parse_double(tok[7], line_no, "emp_nonlegal");
        r.population = parse_double(tok[8], line_no, "population");
        r.wage_avg = parse_double(tok[9], line_no, "wage_avg");
        r.emp_skilled = parse_double(tok[10], line_no, "emp_skilled");
        r.emp_unskilled = parse_double(tok[11], line_no, "emp_unskilled");
        r.wage_skilled = parse_double(tok[12], line_no, "wage_skilled");
        r.wage_unskilled = parse_double(tok[13], line_no, "wage_unskilled");
        if (r.n_fs > r.n_br) {
            parse_fail(line_no, "n_fs (" + tok[5] + ") exceeds n_br (" + tok[4] + ")");
        }
        panel.add_row(r);
    }
    panel.finalize();
    return panel;
}

} // namespace legalmkt
