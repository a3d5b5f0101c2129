#pragma once

#include <string>
#include <vector>

namespace legalmkt {

struct CountyYearRow {
    int county_id = 0;
    int district_id = 0;
    int state_id = 0;
    int year = 0;
    long n_br = 0;
    long n_fs = 0;
    double emp_legal = 0.0;
    double emp_nonlegal = 0.0;
    double population = 0.0;
    double wage_avg = 0.0;
    double emp_skilled = 0.0;
    double emp_unskilled = 0.0;
    double wage_skilled = 0.0;
    double wage_unskilled = 0.0;
};

// Rectangular county-by-year panel. Rows are kept sorted by
// (county_id, year); that pair is unique, n_fs <= n_br on every row,
// and a county maps to exactly one district and state.
class CountyYearPanel {
public:
    void add_row(const CountyYearRow& row);
    void finalize(); // sorts and validates

    const std::vector<CountyYearRow>& rows() const { return rows_; }
    std::vector<CountyYearRow>& rows() { return rows_; }
    std::size_t size() const { return rows_.size(); }

    std::vector<int> county_ids() const;
    std::vector<int> years() const;

    // Numeric view of a named column (ids and counts widen to double).
    std::vector<double> column(const std::string& name) const;

    static const std::vector<std::string>& column_names();

private:
    void validate() const;
    std::vector<CountyYearRow> rows_;
};

// Comma-separated panel file with a fixed header; lossless round trip.
void write_panel(const CountyYearPanel& panel, const std::string& path);
CountyYearPanel read_panel(const std::string& path);

} // namespace legalmkt
