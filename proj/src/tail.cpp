#include "osctail/tail.hpp"

#include "osctail/derivatives.hpp"
#include "osctail/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace osctail {

void CorrectionSpec::validate() const
{
    if (order_k < 0 || order_k > max_correction_order)
        throw DomainError("CorrectionSpec: order_k must lie in [0, 8]");
}

namespace {

// Evaluates f^(m) at a point, analytically or by finite differences.
class DerivativeProbe {
public:
    DerivativeProbe(const Integrand& f, const OscillatoryKernel& kernel, DerivativeSource source)
        : f_(f), source_(source), step_(std::numbers::pi / (16.0 * kernel.omega()))
    {
    }

    double at(int m, double x)
    {
        if (const RealFunction* d = f_.derivative(m)) {
            const double v = (*d)(x);
            ++evaluations_;
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "derivative of order " << m << " of '" << f_.name()
                    << "' is not finite at x = " << x;
                throw EvaluationError(msg.str(), x);
            }
            return v;
        }
        if (source_ == DerivativeSource::AnalyticRequired) {
            std::ostringstream msg;
            msg << "analytic derivative of order " << m << " of '" << f_.name()
                << "' is required but not registered";
            throw ConfigurationError(msg.str());
        }
        const DerivativeEstimate d = central_difference(f_.eval(), x, m, step_);
        evaluations_ += d.evaluations;
        return d.value;
    }

    std::int64_t evaluations() const noexcept { return evaluations_; }

private:
    const Integrand& f_;
    DerivativeSource source_;
    double step_;
    std::int64_t evaluations_ = 0;
};

void check_fallback_cap(const Integrand& f, const CorrectionSpec& spec, int highest_order)
{
    if (spec.derivative_source == DerivativeSource::FiniteDifferenceFallback
        && spec.order_k > max_finite_difference_order && f.analytic_order() < highest_order)
        throw ConfigurationError(
            "finite-difference derivatives support correction orders up to 2 only");
}

TruncationPoint checked(const TruncationPoint& t, const OscillatoryKernel& kernel,
                        TruncationRule expected)
{
    if (t.rule() != expected)
        throw DomainError(expected == TruncationRule::KernelZeros
                              ? "truncation point must sit at a kernel zero"
                              : "truncation point must sit at a kernel extremum");
    // Re-validates alignment against this kernel's kind and omega.
    return {t.b(), t.n_index(), t.rule(), kernel};
}

void add_oscillation_warning(const Integrand& f, const OscillatoryKernel& kernel,
                             CorrectionResult& r)
{
    if (const auto& hint = f.oscillation_hint(); hint && *hint >= 0.5 * kernel.omega()) {
        std::ostringstream msg;
        msg << "integrand '" << f.name() << "' oscillates at frequency " << *hint
            << ", at least half the kernel frequency " << kernel.omega()
            << "; the end-point correction may be inaccurate";
        r.warnings.push_back(msg.str());
    }
}

// Shared body of the zero and extremum series. Derivative orders are
// first_order, first_order + 2, ...; term i is scaled by sign (-1)^i / omega^(order + 1).
CorrectionResult derivative_series(const Integrand& f, const OscillatoryKernel& kernel,
                                   const TruncationPoint& t, const CorrectionSpec& spec,
                                   int first_order, int leading_sign)
{
    spec.validate();
    const int highest = first_order + 2 * spec.order_k + (spec.emit_error_estimate ? 2 : 0);
    check_fallback_cap(f, spec, highest);

    DerivativeProbe probe(f, kernel, spec.derivative_source);
    const double omega = kernel.omega();

    CorrectionResult r;
    r.order_k = spec.order_k;
    CompensatedSum sum;
    int sign = leading_sign;
    for (int i = 0; i <= spec.order_k; ++i) {
        const int m = first_order + 2 * i;
        const double term = sign * probe.at(m, t.b()) / std::pow(omega, m + 1);
        r.terms.push_back(term);
        sum.add(term);
        sign = -sign;
    }
    r.value = sum.value();

    if (spec.emit_error_estimate) {
        const int m = first_order + 2 * (spec.order_k + 1);
        r.error_estimate = std::abs(probe.at(m, t.b())) / std::pow(omega, m + 1);
    }
    r.evaluations = probe.evaluations();
    add_oscillation_warning(f, kernel, r);
    return r;
}

} // namespace

TruncationPoint select_truncation(const OscillatoryKernel& kernel, TruncationRule rule,
                                  double min_length, double a)
{
    if (!(min_length > 0.0) || !std::isfinite(min_length))
        throw DomainError("select_truncation: min_length must be finite and > 0");
    if (!(a >= 0.0) || !std::isfinite(a))
        throw DomainError("select_truncation: a must be finite and >= 0");

    const double lower = std::max(a, min_length);
    const double shift = half_shifted(kernel.kind(), rule) ? 0.5 : 0.0;
    auto abscissa = [&](std::int64_t n) {
        return TruncationPoint::aligned(kernel, n, rule).b();
    };

    auto n = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::ceil(lower * kernel.omega() / std::numbers::pi + shift)));
    while (n > 1 && abscissa(n - 1) >= lower)
        --n;
    while (abscissa(n) < lower)
        ++n;
    return TruncationPoint::aligned(kernel, n, rule);
}

CorrectionResult correct_zeroth(const Integrand& f, const OscillatoryKernel& kernel,
                                const TruncationPoint& t)
{
    const TruncationPoint tp = checked(t, kernel, TruncationRule::KernelZeros);
    const double fb = f(tp.b());
    if (!std::isfinite(fb)) {
        std::ostringstream msg;
        msg << "integrand '" << f.name() << "' is not finite at the truncation point x = "
            << tp.b();
        throw EvaluationError(msg.str(), tp.b());
    }
    CorrectionResult r;
    r.order_k = 0;
    r.value = tp.parity_sign() * fb / kernel.omega();
    r.terms = {r.value};
    r.evaluations = 1;
    add_oscillation_warning(f, kernel, r);
    return r;
}

CorrectionResult correct_series(const Integrand& f, const OscillatoryKernel& kernel,
                                const TruncationPoint& t, const CorrectionSpec& spec)
{
    const TruncationPoint tp = checked(t, kernel, TruncationRule::KernelZeros);
    return derivative_series(f, kernel, tp, spec, 0, tp.parity_sign());
}

CorrectionResult correct_extrema(const Integrand& f, const OscillatoryKernel& kernel,
                                 const TruncationPoint& t, const CorrectionSpec& spec)
{
    const TruncationPoint tp = checked(t, kernel, TruncationRule::KernelExtrema);
    const int sign = kernel.kind() == KernelKind::Sine ? tp.parity_sign() : -tp.parity_sign();
    return derivative_series(f, kernel, tp, spec, 1, sign);
}

double error_estimate(const Integrand& f, const OscillatoryKernel& kernel,
                      const TruncationPoint& t, int k, DerivativeSource source)
{
    if (k < 1)
        throw DomainError("error_estimate: k must be >= 1");
    const TruncationPoint tp = checked(t, kernel, TruncationRule::KernelZeros);
    if (source == DerivativeSource::FiniteDifferenceFallback && k - 1 > max_finite_difference_order
        && f.analytic_order() < 2 * (k - 1))
        throw ConfigurationError(
            "finite-difference derivatives support correction orders up to 2 only");

    DerivativeProbe probe(f, kernel, source);
    CompensatedSum sum;
    int sign = -tp.parity_sign();
    for (int i = 1; i <= k - 1; ++i) {
        sum.add(sign * probe.at(2 * i, tp.b()) / std::pow(kernel.omega(), 2 * i + 1));
        sign = -sign;
    }
    return sum.value();
}

IntegralResult integrate_semi_infinite(const Integrand& f, const OscillatoryKernel& kernel,
                                       double a, double min_length, const QuadratureConfig& qcfg,
                                       const CorrectionSpec& cspec, TruncationRule rule)
{
    qcfg.validate();
    cspec.validate();
    const TruncationPoint t = select_truncation(kernel, rule, min_length, a);

    IntegralResult r;
    if (t.b() > a)
        r = integrate_finite(f, kernel, a, t.b(), qcfg);
    r.b_used = t.b();

    const CorrectionResult c = rule == TruncationRule::KernelZeros
                                   ? correct_series(f, kernel, t, cspec)
                                   : correct_extrema(f, kernel, t, cspec);
    r.tail_correction = c.value;
    r.total = r.finite_part + r.tail_correction;
    if (c.error_estimate)
        r.error_estimate = r.error_estimate.value_or(0.0) + *c.error_estimate;
    else
        r.error_estimate.reset();
    r.evaluations += c.evaluations;
    r.warnings = c.warnings;
    return r;
}

CorrectionResult integrate_left_tail(const Integrand& f, const OscillatoryKernel& kernel,
                                     const TruncationPoint& b_left, const CorrectionSpec& spec)
{
    // g(y) = f(-y), g^(m)(y) = (-1)^m f^(m)(-y).
    std::vector<RealFunction> reflected;
    for (int m = 1; f.has_derivative(m); ++m) {
        const RealFunction d = *f.derivative(m);
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        reflected.emplace_back([d, sign](double y) { return sign * d(-y); });
    }
    const RealFunction base = f.eval();
    Integrand g = Integrand(f.name() + " (reflected)", [base](double y) { return base(-y); })
                      .with_derivatives(std::move(reflected));
    if (f.oscillation_hint())
        g = g.with_oscillation_hint(*f.oscillation_hint());

    CorrectionResult r = b_left.rule() == TruncationRule::KernelZeros
                             ? correct_series(g, kernel, b_left, spec)
                             : correct_extrema(g, kernel, b_left, spec);
    if (kernel.kind() == KernelKind::Sine) {
        r.value = -r.value;
        for (double& term : r.terms)
            term = -term;
    }
    return r;
}

} // namespace osctail
