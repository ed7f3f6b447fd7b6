#include "osctail/report.hpp"

#include "osctail/errors.hpp"
#include "osctail/reference.hpp"
#include "osctail/tail.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace osctail::report {

namespace {

constexpr double pi = std::numbers::pi;

std::string number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    return buf;
}

// Oracle tolerances sized so each table stays well inside its time budget.
double oracle_tolerance(reference::ExampleId id)
{
    return id == reference::ExampleId::CosOverX ? 1e-9 : 1e-13;
}

double exact_tail(const reference::ExampleSpec& ex, double b)
{
    if (ex.id == reference::ExampleId::Exp)
        return reference::example1_tail(ex.alpha, b);
    return reference::oracle_tail(ex.integrand, OscillatoryKernel::sine(1), b,
                                  oracle_tolerance(ex.id));
}

double one_point(const reference::ExampleSpec& ex, int n)
{
    const auto sine = OscillatoryKernel::sine(1);
    return correct_zeroth(ex.integrand, sine,
                          TruncationPoint::aligned(sine, n, TruncationRule::KernelZeros))
        .value;
}

TableRow make_row(const reference::ExampleSpec& ex, double label, int n)
{
    TableRow r;
    r.x_or_alpha = label;
    r.exact_value = ex.exact_value;
    r.trunc_abs = exact_tail(ex, n * pi);
    r.eps_abs = r.trunc_abs - one_point(ex, n);
    r.eps_rel = std::abs(r.eps_abs) / ex.exact_value;
    r.trunc_rel = std::abs(r.trunc_abs) / ex.exact_value;
    return r;
}

std::vector<int> range(int first, int last)
{
    std::vector<int> out;
    for (int n = first; n <= last; ++n)
        out.push_back(n);
    return out;
}

Sheet alpha_figure(int id, int n)
{
    Sheet s;
    s.comments = {"figure " + std::to_string(id)
                      + ": exact tail of e^(-alpha x) sin(x) over [N pi, inf) vs one-point value",
                  "N = " + std::to_string(n)};
    s.columns = {"alpha", "exact_tail", "one_point"};
    // 41 points, log-spaced over [1e-3, 10].
    for (int i = 0; i <= 40; ++i) {
        const double alpha = std::pow(10.0, -3.0 + 0.1 * i);
        const auto ex = reference::make_example(reference::ExampleId::Exp, alpha);
        s.rows.push_back({alpha, exact_tail(ex, n * pi), one_point(ex, n)});
    }
    return s;
}

Sheet tail_figure(int id, const reference::ExampleSpec& ex, const std::string& f, int first)
{
    Sheet s;
    s.comments = {"figure " + std::to_string(id) + ": exact tail of " + f
                      + " sin(x) over [N pi, inf) vs one-point value",
                  "N = " + std::to_string(first) + ".." + "100"};
    s.columns = {"n", "l_t", "exact_tail", "one_point"};
    for (int n : range(first, 100))
        s.rows.push_back({double(n), n * pi, exact_tail(ex, n * pi), one_point(ex, n)});
    return s;
}

Sheet sum_figure(int id, const reference::ExampleSpec& ex, const std::string& f, int first)
{
    Sheet s;
    s.comments = {"figure " + std::to_string(id) + ": truncated integral of " + f
                      + " sin(x) over [0, N pi] with and without the one-point value",
                  "N = " + std::to_string(first) + ".." + "100"};
    s.columns = {"n", "l_t", "truncated", "corrected", "exact"};
    QuadratureConfig q;
    for (int n : range(first, 100)) {
        const double head = reference::truncated_integral(ex, n * pi, q);
        s.rows.push_back({double(n), n * pi, head, head + one_point(ex, n), ex.exact_value});
    }
    return s;
}

} // namespace

void write(std::ostream& out, const Sheet& sheet, Format format)
{
    if (format == Format::Csv) {
        for (const auto& c : sheet.comments)
            out << "# " << c << '\n';
        for (std::size_t i = 0; i < sheet.columns.size(); ++i)
            out << (i ? "," : "") << sheet.columns[i];
        out << '\n';
        for (const auto& row : sheet.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << number(row[i]);
            out << '\n';
        }
        return;
    }

    constexpr int width = 14;
    for (const auto& c : sheet.comments)
        out << c << '\n';
    for (const auto& name : sheet.columns) {
        const std::size_t pad = name.size() < width ? width - name.size() : 1;
        out << std::string(pad, ' ') << name;
    }
    out << '\n';
    for (const auto& row : sheet.rows) {
        for (double v : row) {
            const std::string s = number(v);
            out << std::string(width - s.size(), ' ') << s;
        }
        out << '\n';
    }
}

std::vector<TableRow> table_rows(int id)
{
    using reference::ExampleId;
    using reference::make_example;
    std::vector<TableRow> rows;
    switch (id) {
    case 1:
        for (double alpha : {0.001, 0.01, 0.1, 1.0, 10.0})
            rows.push_back(make_row(make_example(ExampleId::Exp, alpha), alpha, 20));
        break;
    case 2: {
        const auto ex = make_example(ExampleId::InvSqrt);
        for (int n : {4, 10, 20, 50, 100})
            rows.push_back(make_row(ex, n * pi, n));
        break;
    }
    case 3: {
        const auto ex = make_example(ExampleId::CosOverX, 0.2);
        for (int n : {20, 40, 60, 80, 100})
            rows.push_back(make_row(ex, n * pi, n));
        break;
    }
    default:
        throw DomainError("table id must be 1, 2 or 3");
    }
    return rows;
}

Sheet table(int id)
{
    static const char* const titles[] = {
        "",
        "table 1: e^(-alpha x) sin(x), truncated at 20 pi",
        "table 2: sin(x)/sqrt(x), truncated at x",
        "table 3: cos(0.2 x) sin(x)/x, truncated at x",
    };
    const std::vector<TableRow> rows = table_rows(id);
    Sheet s;
    s.comments = {titles[id],
                  "eps: exact tail minus one-point value; trunc: exact tail; rel: divided by the full integral"};
    s.columns = {"x_or_alpha", "eps_rel", "trunc_rel", "eps_abs", "trunc_abs"};
    for (const auto& r : rows)
        s.rows.push_back({r.x_or_alpha, r.eps_rel, r.trunc_rel, std::abs(r.eps_abs),
                          std::abs(r.trunc_abs)});
    return s;
}

Sheet figure(int id)
{
    using reference::ExampleId;
    using reference::make_example;
    switch (id) {
    case 1:
        return alpha_figure(1, 10);
    case 2:
        return alpha_figure(2, 4);
    case 3:
        return tail_figure(3, make_example(ExampleId::InvSqrt), "1/sqrt(x)", 4);
    case 4:
        return sum_figure(4, make_example(ExampleId::InvSqrt), "1/sqrt(x)", 4);
    case 5:
        return tail_figure(5, make_example(ExampleId::CosOverX, 0.2), "cos(0.2 x)/x", 6);
    case 6:
        return sum_figure(6, make_example(ExampleId::CosOverX, 0.2), "cos(0.2 x)/x", 6);
    default:
        throw DomainError("figure id must lie in 1..6");
    }
}

} // namespace osctail::report
