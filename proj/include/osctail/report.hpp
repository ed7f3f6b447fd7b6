#ifndef OSCTAIL_REPORT_HPP
#define OSCTAIL_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace osctail::report {

enum class Format { Csv, Text };

/// A titled grid of numbers; comment lines precede the header in CSV output.
struct Sheet {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// CSV: '#' comment lines, header, one row per line, %.5e numbers, LF endings.
/// Text: the same content in right-aligned columns.
void write(std::ostream& out, const Sheet& sheet, Format format);

/// One row of an error table. Relative columns divide by the full integral.
struct TableRow {
    double x_or_alpha = 0.0;
    double eps_abs = 0.0;   ///< exact tail minus the one-point value
    double trunc_abs = 0.0; ///< exact tail
    double eps_rel = 0.0;
    double trunc_rel = 0.0;
    double exact_value = 0.0;
};

/// Table 1: e^(-alpha x), alpha in {0.001, 0.01, 0.1, 1, 10}, truncated at 20 pi.
/// Tables 2 and 3: 1/sqrt(x) and cos(0.2 x)/x at the listed multiples of pi.
/// Tails come from the closed form (table 1) or the brute-force oracle.
std::vector<TableRow> table_rows(int id);

Sheet table(int id);

/// Curve data behind figures 1 to 6.
Sheet figure(int id);

} // namespace osctail::report

#endif // OSCTAIL_REPORT_HPP
