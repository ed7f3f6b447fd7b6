#include "osctail/acceptance.hpp"

#include "osctail/errors.hpp"
#include "osctail/reference.hpp"
#include "osctail/report.hpp"
#include "osctail/tail.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

namespace osctail::acceptance {

namespace {

constexpr double pi = std::numbers::pi;
// Two printed significant figures, read as 5% relative slack.
constexpr double table_slack = 0.05;

std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

Check check(std::string label, bool ok, std::string detail = {})
{
    return {std::move(label), ok, std::move(detail)};
}

// A table cell matches when it is within the slack of the printed value, or
// when both values sit below the resolution of a double-precision subtraction
// I_E - I~ (one ulp of I_E, relative), which is how the printed table was made.
Check cell(const std::string& label, double computed, double printed, double resolution)
{
    const std::string detail =
        "computed " + fmt("%.4e", computed) + ", printed " + fmt("%.4g", printed);
    if (computed < resolution && printed < resolution)
        return check(label, true, detail + " (both below " + fmt("%.1e", resolution) + ")");
    if (printed == 0.0)
        return check(label, false, detail);
    return check(label, std::abs(computed - printed) <= table_slack * std::abs(printed), detail);
}

struct PrintedRow {
    double eps;
    double trunc;
};

std::vector<Check> table_checks(int id, const std::vector<PrintedRow>& printed)
{
    const std::vector<report::TableRow> rows = report::table_rows(id);
    std::vector<Check> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const report::TableRow& r = rows[i];
        const double resolution =
            (std::nextafter(r.exact_value, 2 * r.exact_value) - r.exact_value) / r.exact_value;
        const std::string at = id == 1 ? "alpha=" + fmt("%g", r.x_or_alpha)
                                       : "x=" + fmt("%g", r.x_or_alpha / pi) + "pi";
        out.push_back(cell(at + " eps_rel", r.eps_rel, printed[i].eps, resolution));
        out.push_back(cell(at + " trunc_rel", r.trunc_rel, printed[i].trunc, resolution));
    }
    return out;
}

double one_point(const Integrand& f, int n)
{
    const auto sine = OscillatoryKernel::sine(1);
    return correct_zeroth(f, sine, TruncationPoint::aligned(sine, n, TruncationRule::KernelZeros))
        .value;
}

std::vector<Check> criterion_1()
{
    return table_checks(1, {{9.4e-7, 0.9391}, {5.3e-5, 0.5334}, {1.8e-5, 0.0018},
                            {2.6e-28, 2.6e-28}, {0.0, 0.0}});
}

std::vector<Check> criterion_2()
{
    return table_checks(2, {{1.0e-3, 0.2241}, {1.1e-4, 0.1422}, {1.9e-5, 0.1006},
                            {1.9e-6, 0.0637}, {3.4e-7, 0.0318}});
}

std::vector<Check> criterion_3()
{
    return table_checks(3, {{4.2e-4, 0.0105}, {2.1e-4, 0.0053}, {1.4e-4, 0.0035},
                            {1.1e-4, 0.0026}, {8.4e-5, 0.0021}});
}

std::vector<Check> criterion_4()
{
    auto near = [](const std::string& label, double computed, double quoted) {
        return check(label, std::abs(computed - quoted) <= 0.01 * std::abs(quoted),
                     "computed " + fmt("%.6e", computed) + ", quoted " + fmt("%.6e", quoted));
    };
    return {
        near("inv-sqrt error series at 2pi, 3 terms", reference::example2_error_series(2 * pi, 3),
             -0.00695),
        near("inv-sqrt error series at 20pi, 3 terms",
             reference::example2_error_series(20 * pi, 3), -2.392e-5),
        near("cos(0.2x)/x two-term error at 100pi",
             reference::example3_error_two_terms(100 * pi, 0.2), 0.0001273 + 5.07749e-6),
    };
}

std::vector<Check> criterion_5()
{
    using namespace reference;
    const ExampleSpec ex = make_example(ExampleId::InvSqrt);
    const QuadratureConfig q;
    std::vector<Check> out;

    const double head2 = truncated_integral(ex, 2 * pi, q);
    const double trunc2 = (ex.exact_value - head2) / ex.exact_value;
    out.push_back(check("truncated at 2pi errs by more than 30%", trunc2 > 0.30,
                        "relative error " + fmt("%.4f", trunc2)));

    // Printed as "0.5%": one significant figure, so anything that rounds to 0.5% passes.
    const double corr2 = std::abs(ex.exact_value - head2 - one_point(ex.integrand, 2)) / ex.exact_value;
    const double shown = std::round(corr2 * 1000.0) / 10.0;
    out.push_back(check("corrected at 2pi within 0.5%", shown <= 0.5,
                        "relative error " + fmt("%.4f", corr2 * 100) + "%, rounds to "
                            + fmt("%.1f", shown) + "%"));

    const double head100 = truncated_integral(ex, 100 * pi, q);
    const double corr100 =
        std::abs(ex.exact_value - head100 - one_point(ex.integrand, 100)) / ex.exact_value;
    out.push_back(check("corrected at 100pi within 5e-7", corr100 < 5e-7,
                        "relative error " + fmt("%.3e", corr100)));
    return out;
}

std::vector<Check> criterion_6()
{
    using namespace reference;
    std::vector<Check> out;
    const QuadratureConfig q;
    const auto sine = OscillatoryKernel::sine(1);

    for (double omega : {0.5, 2.0, 5.0}) {
        bool ok = true;
        double worst = 0.0;
        for (double alpha : {0.01, 0.1, 1.0}) {
            const double direct = integrate_semi_infinite(exp_integrand(alpha),
                                                          OscillatoryKernel::sine(omega), 0,
                                                          10 * pi, q)
                                      .total;
            const double scaled =
                integrate_semi_infinite(exp_integrand(alpha / omega), sine, 0, 10 * pi * omega, q)
                    .total
                / omega;
            const double rel = std::abs(direct - scaled) / std::abs(direct);
            worst = std::max(worst, rel);
            ok = ok && rel <= 10 * q.rel_tol;
        }
        out.push_back(check("frequency scaling, omega=" + fmt("%g", omega), ok,
                            "worst relative gap " + fmt("%.2e", worst)));
    }

    {
        bool ok = true;
        for (const Integrand& f :
             {exp_integrand(0.1), inv_sqrt_integrand(), cos_over_x_integrand(0.2)})
            for (int n : {1, 2, 5, 20, 100}) {
                const TruncationPoint t =
                    TruncationPoint::aligned(sine, n, TruncationRule::KernelZeros);
                ok = ok && correct_series(f, sine, t, {}).value == correct_zeroth(f, sine, t).value;
            }
        out.push_back(check("order 0 series equals one-point value bit for bit", ok));
    }

    for (int id : {1, 2, 3}) {
        for (const report::TableRow& r : report::table_rows(id)) {
            const std::string at = id == 1 ? "alpha=" + fmt("%g", r.x_or_alpha)
                                           : "x=" + fmt("%g", r.x_or_alpha / pi) + "pi";
            out.push_back(check("table " + std::to_string(id) + " " + at + " correction helps",
                                std::abs(r.eps_abs) < std::abs(r.trunc_abs),
                                "|eps| " + fmt("%.3e", std::abs(r.eps_abs)) + " vs |tail| "
                                    + fmt("%.3e", std::abs(r.trunc_abs))));
        }
    }

    {
        bool ok = true;
        for (const Integrand& f : {exp_integrand(0.01), exp_integrand(0.1), inv_sqrt_integrand()})
            for (int n : {4, 10, 20}) {
                const OracleResult r = oracle_tail_detailed(f, sine, n * pi, 1e-13);
                for (std::size_t m = 0; m + 1 < r.partial_sums.size(); ++m) {
                    const double lo = std::min(r.partial_sums[m], r.partial_sums[m + 1]);
                    const double hi = std::max(r.partial_sums[m], r.partial_sums[m + 1]);
                    ok = ok && lo <= r.value && r.value <= hi;
                }
            }
        out.push_back(check("oracle partial sums bracket the oracle value", ok));
    }

    {
        const Integrand f = inv_sqrt_integrand();
        const TruncationPoint t = TruncationPoint::aligned(sine, 20, TruncationRule::KernelZeros);
        const double exact = oracle_tail(f, sine, t.b(), 1e-14);
        CorrectionSpec k1;
        k1.order_k = 1;
        const double e0 = std::abs(exact - correct_series(f, sine, t, {}).value);
        const double e1 = std::abs(exact - correct_series(f, sine, t, k1).value);
        out.push_back(check("k=1 beats k=0 by 10x at N=20", e1 * 10 <= e0,
                            "errors " + fmt("%.3e", e0) + " and " + fmt("%.3e", e1)));
    }

    {
        const Integrand f = inv_sqrt_integrand();
        bool ok = true;
        for (int n : {4, 10, 20, 50, 100}) {
            const auto z = select_truncation(sine, TruncationRule::KernelZeros, n * pi, 0);
            const auto x = select_truncation(sine, TruncationRule::KernelExtrema, n * pi, 0);
            ok = ok && std::abs(correct_extrema(f, sine, x, {}).terms[0])
                           < std::abs(correct_zeroth(f, sine, z).terms[0]);
        }
        out.push_back(check("extrema leading term below zeros leading term", ok));
    }
    return out;
}

std::vector<Check> criterion_7()
{
    std::vector<Check> out;
    const auto sine = OscillatoryKernel::sine(1);
    for (double alpha : {0.01, 0.1, 1.0})
        for (int n : {4, 10, 20}) {
            const double exact = reference::example1_tail(alpha, n * pi);
            const double got =
                reference::oracle_tail(reference::exp_integrand(alpha), sine, n * pi, 1e-12);
            const double rel = std::abs(got - exact) / std::abs(exact);
            out.push_back(check("alpha=" + fmt("%g", alpha) + " b=" + std::to_string(n) + "pi",
                                rel <= 1e-10, "relative gap " + fmt("%.2e", rel)));
        }
    return out;
}

struct Definition {
    const char* title;
    double budget;
    std::vector<Check> (*run)();
};

const Definition definitions[] = {
    {"table 1 reproduction", 5.0, criterion_1},
    {"table 2 reproduction", 30.0, criterion_2},
    {"table 3 reproduction", 30.0, criterion_3},
    {"error-series scalars", 0.0, criterion_4},
    {"headline accuracy claims", 0.0, criterion_5},
    {"property suite", 0.0, criterion_6},
    {"oracle against closed form", 0.0, criterion_7},
};

} // namespace

bool CriterionResult::passed() const
{
    if (budget_seconds > 0.0 && seconds > budget_seconds)
        return false;
    for (const Check& c : checks)
        if (!c.passed)
            return false;
    return true;
}

CriterionResult run_criterion(int id)
{
    if (id < 1 || id > criterion_count)
        throw DomainError("criterion id must lie in 1..7");
    const Definition& d = definitions[id - 1];
    CriterionResult r;
    r.id = id;
    r.title = d.title;
    r.budget_seconds = d.budget;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.checks = d.run();
    } catch (const std::exception& e) {
        r.checks.push_back(check("evaluation", false, e.what()));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void print(std::ostream& out, const CriterionResult& result, bool verbose)
{
    std::size_t failed = 0;
    for (const Check& c : result.checks)
        failed += c.passed ? 0 : 1;
    out << (result.passed() ? "PASS" : "FAIL") << "  criterion " << result.id << ": "
        << result.title << " (" << result.checks.size() - failed << "/" << result.checks.size()
        << " checks, " << fmt("%.2f", result.seconds) << " s";
    if (result.budget_seconds > 0.0)
        out << " of " << fmt("%g", result.budget_seconds) << " s";
    out << ")\n";
    for (const Check& c : result.checks)
        if (verbose || !c.passed)
            out << "      " << (c.passed ? "ok  " : "FAIL") << "  " << c.label
                << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
}

bool run_all(std::ostream& out, bool verbose)
{
    bool all = true;
    for (int id = 1; id <= criterion_count; ++id) {
        const CriterionResult r = run_criterion(id);
        print(out, r, verbose);
        all = all && r.passed();
    }
    return all;
}

} // namespace osctail::acceptance
