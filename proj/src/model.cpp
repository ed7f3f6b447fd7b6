#include "osctail/model.hpp"

#include "osctail/errors.hpp"

#include <cmath>
#include <numbers>

namespace osctail {

Integrand::Integrand(std::string name, RealFunction eval)
    : name_(std::move(name)), eval_(std::move(eval))
{
    if (!eval_)
        throw DomainError("Integrand: evaluation callable is empty");
}

Integrand Integrand::with_derivatives(std::vector<RealFunction> higher) const
{
    Integrand copy = *this;
    copy.higher_ = std::move(higher);
    return copy;
}

Integrand Integrand::with_decay_exponent(double gamma) const
{
    if (!(gamma < 0.0))
        throw DomainError("Integrand: decay exponent must be negative");
    Integrand copy = *this;
    copy.decay_ = gamma;
    return copy;
}

Integrand Integrand::with_oscillation_hint(double frequency) const
{
    if (!(frequency >= 0.0) || !std::isfinite(frequency))
        throw DomainError("Integrand: oscillation frequency must be finite and non-negative");
    Integrand copy = *this;
    copy.oscillation_ = frequency;
    return copy;
}

const RealFunction* Integrand::derivative(int m) const noexcept
{
    if (m == 0)
        return &eval_;
    if (m < 0 || static_cast<std::size_t>(m) > higher_.size())
        return nullptr;
    const RealFunction& d = higher_[static_cast<std::size_t>(m - 1)];
    return d ? &d : nullptr;
}

int Integrand::analytic_order() const noexcept
{
    int m = 0;
    while (has_derivative(m + 1))
        ++m;
    return m;
}

OscillatoryKernel::OscillatoryKernel(KernelKind kind, double omega) : kind_(kind), omega_(omega)
{
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw DomainError("OscillatoryKernel: omega must be finite and > 0");
}

double OscillatoryKernel::operator()(double x) const
{
    return kind_ == KernelKind::Sine ? std::sin(omega_ * x) : std::cos(omega_ * x);
}

double OscillatoryKernel::half_period() const noexcept
{
    return std::numbers::pi / omega_;
}

namespace {

double aligned_phase(std::int64_t n, bool shifted)
{
    // (N - 1/2) is exact in double for any index we accept.
    const double cycles = shifted ? static_cast<double>(n) - 0.5 : static_cast<double>(n);
    return cycles * std::numbers::pi;
}

} // namespace

TruncationPoint::TruncationPoint(double b, std::int64_t n_index, TruncationRule rule,
                                 const OscillatoryKernel& kernel)
    : b_(b), n_(n_index), rule_(rule), kind_(kernel.kind())
{
    if (n_index < 1)
        throw DomainError("TruncationPoint: cycle index must be >= 1");
    if (!std::isfinite(b) || !(b > 0.0))
        throw DomainError("TruncationPoint: abscissa must be finite and positive");
    const double phase = aligned_phase(n_index, half_shifted(kind_, rule));
    const double ulp = std::nextafter(phase, HUGE_VAL) - phase;
    if (std::abs(b * kernel.omega() - phase) > 4.0 * ulp)
        throw DomainError("TruncationPoint: abscissa is not aligned with the kernel");
}

TruncationPoint TruncationPoint::aligned(const OscillatoryKernel& kernel, std::int64_t n_index,
                                         TruncationRule rule)
{
    if (n_index < 1)
        throw DomainError("TruncationPoint: cycle index must be >= 1");
    const double phase = aligned_phase(n_index, half_shifted(kernel.kind(), rule));
    return {phase / kernel.omega(), n_index, rule, kernel};
}

std::int64_t TruncationPoint::reconstruct_index(double b, TruncationRule rule,
                                                const OscillatoryKernel& kernel)
{
    const double cycles = b * kernel.omega() / std::numbers::pi;
    return std::llround(half_shifted(kernel.kind(), rule) ? cycles + 0.5 : cycles);
}

void CompensatedSum::add(double v) noexcept
{
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
        carry_ += (sum_ - t) + v;
    else
        carry_ += (v - t) + sum_;
    sum_ = t;
}

} // namespace osctail
