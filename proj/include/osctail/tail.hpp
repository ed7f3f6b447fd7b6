#ifndef OSCTAIL_TAIL_HPP
#define OSCTAIL_TAIL_HPP

#include "osctail/model.hpp"
#include "osctail/quadrature.hpp"

namespace osctail {

enum class DerivativeSource {
    /// Every derivative the correction needs must be registered on the integrand.
    AnalyticRequired,
    /// Missing derivatives are estimated by central differences (order_k <= 2).
    FiniteDifferenceFallback,
};

inline constexpr int max_correction_order = 8;
inline constexpr int max_finite_difference_order = 2;

struct CorrectionSpec {
    /// 0 is the one-point formula; each further order adds one derivative term.
    int order_k = 0;
    DerivativeSource derivative_source = DerivativeSource::AnalyticRequired;
    bool emit_error_estimate = false;

    void validate() const;
};

/// Smallest kernel-aligned b >= max(a, min_length).
///
/// KernelZeros:   sine -> N pi / omega,        cosine -> (N - 1/2) pi / omega.
/// KernelExtrema: sine -> (N - 1/2) pi / omega, cosine -> N pi / omega.
TruncationPoint select_truncation(const OscillatoryKernel& kernel, TruncationRule rule,
                                  double min_length, double a);

/// One-point tail estimate at a kernel zero: (-1)^N f(b) / omega.
CorrectionResult correct_zeroth(const Integrand& f, const OscillatoryKernel& kernel,
                                const TruncationPoint& t);

/// Integration-by-parts series at a kernel zero,
/// sum_{i=0..k} (-1)^(N+i) f^(2i)(b) / omega^(2i+1).
/// With emit_error_estimate the magnitude of the first omitted term is reported.
CorrectionResult correct_series(const Integrand& f, const OscillatoryKernel& kernel,
                                const TruncationPoint& t, const CorrectionSpec& spec);

/// Series for truncation at a kernel extremum; led by the first derivative.
/// Sine: sum_{i=0..k} (-1)^(N+i) f^(2i+1)(x_T) / omega^(2i+2) with x_T = (N - 1/2) pi / omega.
/// Cosine (x_T = N pi / omega) carries the opposite sign.
CorrectionResult correct_extrema(const Integrand& f, const OscillatoryKernel& kernel,
                                 const TruncationPoint& t, const CorrectionSpec& spec);

/// Signed residual of the one-point formula predicted by the next k - 1 series
/// terms: sum_{i=1..k-1} (-1)^(N+i) f^(2i)(b) / omega^(2i+1). Zero for k = 1.
double error_estimate(const Integrand& f, const OscillatoryKernel& kernel,
                      const TruncationPoint& t, int k,
                      DerivativeSource source = DerivativeSource::AnalyticRequired);

/// Integral over [a, inf): adaptive quadrature up to the aligned b plus the
/// end-point correction for [b, inf).
IntegralResult integrate_semi_infinite(const Integrand& f, const OscillatoryKernel& kernel,
                                       double a, double min_length,
                                       const QuadratureConfig& qcfg = {},
                                       const CorrectionSpec& cspec = {},
                                       TruncationRule rule = TruncationRule::KernelZeros);

/// Correction for the left tail over (-inf, -b], where b = b_left.b().
/// Evaluated on the reflection g(y) = f(-y); the sine result changes sign.
CorrectionResult integrate_left_tail(const Integrand& f, const OscillatoryKernel& kernel,
                                     const TruncationPoint& b_left, const CorrectionSpec& spec);

} // namespace osctail

#endif // OSCTAIL_TAIL_HPP
