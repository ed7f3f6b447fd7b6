#ifndef OSCTAIL_MODEL_HPP
#define OSCTAIL_MODEL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace osctail {

using RealFunction = std::function<double(double)>;

/// The smooth factor f of an oscillatory integrand f(x) * w(x).
///
/// Immutable once built; the `with_*` members return modified copies.
/// The wrapped callables may be invoked concurrently and must tolerate it.
///
/// Derivative closures are indexed by order: `derivative(m)` is f^(m),
/// with `derivative(0)` being f itself.
class Integrand {
public:
    Integrand(std::string name, RealFunction eval);

    /// Registers f', f'', ... in order (element i is the derivative of order i + 1).
    /// Empty entries mark orders that have no closed form.
    Integrand with_derivatives(std::vector<RealFunction> higher) const;

    /// Asymptotic class hint f^(m)(x) = O(x^(gamma - m)); gamma must be negative.
    Integrand with_decay_exponent(double gamma) const;

    /// Angular frequency of any oscillation carried by f itself.
    Integrand with_oscillation_hint(double frequency) const;

    double operator()(double x) const { return eval_(x); }

    const std::string& name() const noexcept { return name_; }
    const RealFunction& eval() const noexcept { return eval_; }

    /// f^(m) if available analytically, nullptr otherwise.
    const RealFunction* derivative(int m) const noexcept;
    bool has_derivative(int m) const noexcept { return derivative(m) != nullptr; }

    /// Highest order M such that every f^(1..M) is registered.
    int analytic_order() const noexcept;

    const std::optional<double>& decay_exponent() const noexcept { return decay_; }
    const std::optional<double>& oscillation_hint() const noexcept { return oscillation_; }

private:
    std::string name_;
    RealFunction eval_;
    std::vector<RealFunction> higher_;
    std::optional<double> decay_;
    std::optional<double> oscillation_;
};

enum class KernelKind { Sine, Cosine };

/// w(x) = sin(omega x) or cos(omega x), omega > 0.
class OscillatoryKernel {
public:
    OscillatoryKernel(KernelKind kind, double omega);

    static OscillatoryKernel sine(double omega = 1.0) { return {KernelKind::Sine, omega}; }
    static OscillatoryKernel cosine(double omega = 1.0) { return {KernelKind::Cosine, omega}; }

    KernelKind kind() const noexcept { return kind_; }
    double omega() const noexcept { return omega_; }

    double operator()(double x) const;

    /// Distance between consecutive zeros, pi / omega.
    double half_period() const noexcept;

private:
    KernelKind kind_;
    double omega_;
};

enum class TruncationRule { KernelZeros, KernelExtrema };

/// True when aligned points sit at (N - 1/2) pi / omega rather than N pi / omega.
/// That is the case for cosine zeros and for sine extrema.
constexpr bool half_shifted(KernelKind kind, TruncationRule rule) noexcept
{
    return (kind == KernelKind::Cosine) == (rule == TruncationRule::KernelZeros);
}

/// Truncation abscissa aligned to the kernel.
///
/// Sine zeros and cosine extrema: b * omega = N pi.
/// Cosine zeros and sine extrema: b * omega = (N - 1/2) pi.
/// Alignment is checked to within 4 ulp on construction.
class TruncationPoint {
public:
    TruncationPoint(double b, std::int64_t n_index, TruncationRule rule,
                    const OscillatoryKernel& kernel);

    static TruncationPoint aligned(const OscillatoryKernel& kernel, std::int64_t n_index,
                                   TruncationRule rule);

    /// Cycle index recovered from an abscissa.
    static std::int64_t reconstruct_index(double b, TruncationRule rule,
                                          const OscillatoryKernel& kernel);

    double b() const noexcept { return b_; }
    std::int64_t n_index() const noexcept { return n_; }
    TruncationRule rule() const noexcept { return rule_; }
    KernelKind kind() const noexcept { return kind_; }

    /// (-1)^N from the integer parity of N.
    int parity_sign() const noexcept { return (n_ % 2 == 0) ? 1 : -1; }

private:
    double b_;
    std::int64_t n_;
    TruncationRule rule_;
    KernelKind kind_;
};

/// Signed tail estimate together with the terms that make it up.
struct CorrectionResult {
    double value = 0.0;
    int order_k = 0;
    /// terms[i] is the contribution of the derivative of order 2i (2i + 1 for extrema).
    std::vector<double> terms;
    std::optional<double> error_estimate;
    std::int64_t evaluations = 0;
    std::vector<std::string> warnings;
};

struct IntegralResult {
    double finite_part = 0.0;
    double tail_correction = 0.0;
    double total = 0.0;
    std::optional<double> error_estimate;
    std::int64_t evaluations = 0;
    double b_used = 0.0;
    std::vector<std::string> warnings;
};

/// Neumaier-compensated running sum. Terms are added in call order.
class CompensatedSum {
public:
    void add(double v) noexcept;
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

} // namespace osctail

#endif // OSCTAIL_MODEL_HPP
