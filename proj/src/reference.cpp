#include "osctail/reference.hpp"

#include "osctail/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace osctail::reference {

namespace {

std::vector<RealFunction> build_derivatives(int count,
                                            const std::function<double(int, double)>& nth)
{
    std::vector<RealFunction> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int m = 1; m <= count; ++m)
        out.emplace_back([nth, m](double x) { return nth(m, x); });
    return out;
}

// cos(y + j pi/2) without evaluating the shifted argument.
double cos_quarter_shift(double c, double s, int j)
{
    switch (j % 4) {
    case 0: return c;
    case 1: return -s;
    case 2: return -c;
    default: return s;
    }
}

} // namespace

Integrand exp_integrand(double alpha)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError("exp integrand: alpha must be > 0");
    auto nth = [alpha](int m, double x) { return std::pow(-alpha, m) * std::exp(-alpha * x); };
    std::ostringstream name;
    name << "exp:" << alpha;
    return Integrand(name.str(), [alpha](double x) { return std::exp(-alpha * x); })
        .with_derivatives(build_derivatives(registered_derivative_order, nth));
}

Integrand inv_sqrt_integrand()
{
    // f^(m)(x) = (-1)^m [1*3*...*(2m-1)] / 2^m * x^(-(2m+1)/2)
    auto nth = [](int m, double x) {
        double coefficient = 1.0;
        for (int j = 1; j <= m; ++j)
            coefficient *= -(2.0 * j - 1.0) / 2.0;
        return coefficient * std::pow(x, -(2.0 * m + 1.0) / 2.0);
    };
    return Integrand("invsqrt", [](double x) { return 1.0 / std::sqrt(x); })
        .with_derivatives(build_derivatives(registered_derivative_order, nth))
        .with_decay_exponent(-0.5);
}

Integrand cos_over_x_integrand(double alpha)
{
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw DomainError("cos/x integrand: alpha must be finite and >= 0");
    // Leibniz: f^(m) = sum_j C(m,j) alpha^j cos(alpha x + j pi/2) (-1)^(m-j) (m-j)! / x^(m-j+1)
    auto nth = [alpha](int m, double x) {
        const double c = std::cos(alpha * x);
        const double s = std::sin(alpha * x);
        double sum = 0.0;
        double binom = 1.0;
        for (int j = 0; j <= m; ++j) {
            const int r = m - j;
            double inv_power = std::tgamma(r + 1.0) / std::pow(x, r + 1);
            if (r % 2 == 1)
                inv_power = -inv_power;
            sum += binom * std::pow(alpha, j) * cos_quarter_shift(c, s, j) * inv_power;
            binom = binom * (m - j) / (j + 1);
        }
        return sum;
    };
    std::ostringstream name;
    name << "cosoverx:" << alpha;
    return Integrand(name.str(), [alpha](double x) { return std::cos(alpha * x) / x; })
        .with_derivatives(build_derivatives(registered_derivative_order, nth))
        .with_oscillation_hint(alpha);
}

ExampleSpec make_example(ExampleId id, double alpha)
{
    switch (id) {
    case ExampleId::Exp:
        if (!(alpha > 0.0))
            throw DomainError("Exp example requires alpha > 0");
        return {id, alpha, 1.0 / (1.0 + alpha * alpha), exp_integrand(alpha)};
    case ExampleId::InvSqrt:
        return {id, 0.0, std::sqrt(std::numbers::pi / 2.0), inv_sqrt_integrand()};
    case ExampleId::CosOverX:
        if (!(alpha > 0.0 && alpha < 1.0))
            throw DomainError("CosOverX example requires 0 < alpha < 1");
        return {id, alpha, std::numbers::pi / 2.0, cos_over_x_integrand(alpha)};
    }
    throw DomainError("unknown example");
}

double example1_truncated(double alpha, double b)
{
    if (!(alpha > 0.0) || !(b >= 0.0))
        throw DomainError("example1_truncated: requires alpha > 0 and b >= 0");
    return -std::expm1(-alpha * b) / (1.0 + alpha * alpha);
}

double example1_tail(double alpha, double b)
{
    if (!(alpha > 0.0) || !(b >= 0.0))
        throw DomainError("example1_tail: requires alpha > 0 and b >= 0");
    return std::exp(-alpha * b) / (1.0 + alpha * alpha);
}

double example2_error_series(double x, int n_terms)
{
    if (!(x > 0.0))
        throw DomainError("example2_error_series: x must be > 0");
    if (n_terms < 1)
        throw DomainError("example2_error_series: need at least one term");
    if (n_terms > 20)
        throw RangeError("example2_error_series: product overflows beyond 20 terms");

    CompensatedSum sum;
    double product = 1.0;
    for (int k = 1; k <= n_terms; ++k) {
        // extend 1*3*...*(4k-5) by (4k-3)(4k-1)
        product *= (4.0 * k - 3.0) * (4.0 * k - 1.0);
        const double term = product / (std::pow(2.0, 2 * k) * std::pow(x, (4.0 * k + 1.0) / 2.0));
        sum.add(k % 2 == 0 ? term : -term);
    }
    return sum.value();
}

double example3_error_two_terms(double x, double alpha)
{
    if (!(x > 0.0))
        throw DomainError("example3_error_two_terms: x must be > 0");
    const double a2 = alpha * alpha;
    const double x3 = x * x * x;
    const double x5 = x3 * x * x;
    return -(-a2 / x + 2.0 / x3) + (a2 * a2 / x - 12.0 * a2 / x3 + 24.0 / x5);
}

IntegralResult head_integral(const ExampleSpec& example, const OscillatoryKernel& kernel,
                             double c, const QuadratureConfig& cfg)
{
    if (!(c > 0.0))
        throw DomainError("head_integral: upper limit must be > 0");

    if (example.id == ExampleId::Exp)
        return integrate_finite(example.integrand, kernel, 0.0, c, cfg);

    std::vector<double> points = cycle_breakpoints(0.0, c, kernel);
    RealFunction weighted;
    if (example.id == ExampleId::InvSqrt) {
        // x = t^2: w(x) / sqrt(x) dx = 2 w(t^2) dt
        for (double& p : points)
            p = std::sqrt(p);
        weighted = [&kernel](double t) { return 2.0 * kernel(t * t); };
    } else {
        if (kernel.kind() == KernelKind::Cosine)
            throw DomainError("cos(alpha x)/x against a cosine kernel diverges at the origin");
        const double alpha = example.alpha;
        const double omega = kernel.omega();
        weighted = [alpha, omega](double x) {
            const double sinc = x == 0.0 ? omega : std::sin(omega * x) / x;
            return std::cos(alpha * x) * sinc;
        };
    }
    const PanelSum s = integrate_panels(weighted, points, cfg);
    IntegralResult r;
    r.finite_part = s.value;
    r.total = s.value;
    r.error_estimate = s.error_estimate;
    r.evaluations = s.evaluations;
    r.b_used = c;
    return r;
}

double truncated_integral(const ExampleSpec& example, double b, const QuadratureConfig& cfg)
{
    if (!(b > 0.0))
        throw DomainError("truncated_integral: b must be > 0");
    const OscillatoryKernel kernel = OscillatoryKernel::sine(1.0);
    if (example.id == ExampleId::Exp)
        return integrate_finite(example.integrand, kernel, 0.0, b, cfg).finite_part;

    const double head_end = std::min(b, std::numbers::pi);
    double value = head_integral(example, kernel, head_end, cfg).finite_part;
    if (b > head_end)
        value += integrate_finite(example.integrand, kernel, head_end, b, cfg).finite_part;
    return value;
}

IntegralResult integrate_example(const ExampleSpec& example, const OscillatoryKernel& kernel,
                                 double min_length, const QuadratureConfig& qcfg,
                                 const CorrectionSpec& cspec)
{
    if (example.id == ExampleId::Exp)
        return integrate_semi_infinite(example.integrand, kernel, 0.0, min_length, qcfg, cspec);

    const double first_zero =
        (kernel.kind() == KernelKind::Sine ? 1.0 : 0.5) * std::numbers::pi / kernel.omega();
    const IntegralResult head = head_integral(example, kernel, first_zero, qcfg);
    IntegralResult rest =
        integrate_semi_infinite(example.integrand, kernel, first_zero, min_length, qcfg, cspec);

    rest.finite_part = head.finite_part + rest.finite_part;
    rest.total = rest.finite_part + rest.tail_correction;
    if (rest.error_estimate)
        *rest.error_estimate += head.error_estimate.value_or(0.0);
    rest.evaluations += head.evaluations;
    return rest;
}

OracleResult oracle_tail_detailed(const Integrand& f, const OscillatoryKernel& kernel, double b,
                                  double target_rel_tol)
{
    if (!(target_rel_tol > 0.0 && target_rel_tol < 1.0))
        throw DomainError("oracle_tail: target_rel_tol must lie in (0, 1)");
    if (!(b > 0.0) || !std::isfinite(b))
        throw DomainError("oracle_tail: b must be finite and > 0");

    // b must be a kernel zero: b omega / pi is an integer (sine) or half-integer (cosine).
    const double shift = kernel.kind() == KernelKind::Cosine ? 0.5 : 0.0;
    const double cycles = b * kernel.omega() / std::numbers::pi - shift;
    const double start = std::round(cycles);
    if (std::abs(cycles - start) > 1e-9 * std::max(1.0, start))
        throw DomainError("oracle_tail: b is not a zero of the kernel");
    auto zero = [&](std::int64_t k) {
        return (start + shift + static_cast<double>(k)) * std::numbers::pi / kernel.omega();
    };

    QuadratureConfig tight;
    tight.rel_tol = 1e-13;
    const RealFunction weighted = [&f, &kernel](double x) { return f(x) * kernel(x); };

    // Depth of the averaging triangle; each level is one Euler-transform step.
    constexpr std::size_t max_depth = 16;

    OracleResult r;
    r.partial_sums.push_back(0.0);
    CompensatedSum running;
    std::vector<double> scratch;
    double previous = 0.0;
    int agreements = 0;

    for (std::int64_t k = 0; k < oracle_max_cycles; ++k) {
        const double lo = k == 0 ? b : zero(k);
        const double edges[] = {lo, zero(k + 1)};
        const PanelSum cycle = integrate_panels(weighted, edges, tight);
        running.add(cycle.value);
        r.evaluations += cycle.evaluations;
        r.partial_sums.push_back(running.value());
        r.cycles = k + 1;

        const std::size_t m = r.partial_sums.size() - 1;
        const std::size_t depth = std::min(m, max_depth);
        scratch.assign(r.partial_sums.end() - static_cast<std::ptrdiff_t>(depth + 1),
                       r.partial_sums.end());
        for (std::size_t level = 0; level < depth; ++level)
            for (std::size_t i = 0; i + 1 < scratch.size() - level; ++i)
                scratch[i] = 0.5 * (scratch[i] + scratch[i + 1]);
        const double accelerated = scratch.front();

        if (m >= 2 && std::abs(accelerated - previous) <= target_rel_tol * std::abs(accelerated))
            ++agreements;
        else
            agreements = 0;
        previous = accelerated;

        if (agreements >= 2) {
            r.value = accelerated;
            r.bracket_lower = std::min(r.partial_sums[m - 1], r.partial_sums[m]);
            r.bracket_upper = std::max(r.partial_sums[m - 1], r.partial_sums[m]);
            if (r.value != 0.0 && std::abs(r.value) < std::numeric_limits<double>::min()) {
                r.value = 0.0;
                r.underflow = true;
            }
            return r;
        }
    }
    const std::size_t m = r.partial_sums.size() - 1;
    throw ConvergenceError("oracle_tail: no convergence within the cycle limit", previous,
                           std::min(r.partial_sums[m - 1], r.partial_sums[m]),
                           std::max(r.partial_sums[m - 1], r.partial_sums[m]));
}

double oracle_tail(const Integrand& f, const OscillatoryKernel& kernel, double b,
                   double target_rel_tol)
{
    return oracle_tail_detailed(f, kernel, b, target_rel_tol).value;
}

} // namespace osctail::reference
