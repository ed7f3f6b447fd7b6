#ifndef OSCTAIL_REFERENCE_HPP
#define OSCTAIL_REFERENCE_HPP

#include "osctail/model.hpp"
#include "osctail/quadrature.hpp"
#include "osctail/tail.hpp"

#include <cstdint>
#include <vector>

namespace osctail::reference {

/// Built-in integrands with closed-form integrals against sin(x) on [0, inf).
enum class ExampleId {
    Exp,      ///< e^(-alpha x), alpha > 0
    InvSqrt,  ///< 1 / sqrt(x)
    CosOverX, ///< cos(alpha x) / x, 0 < alpha < 1
};

/// Highest derivative order registered on the built-in integrands.
inline constexpr int registered_derivative_order = 18;

struct ExampleSpec {
    ExampleId id;
    double alpha = 0.0;
    /// Integral of f(x) sin(x) over [0, inf).
    double exact_value = 0.0;
    Integrand integrand;
};

Integrand exp_integrand(double alpha);
Integrand inv_sqrt_integrand();
Integrand cos_over_x_integrand(double alpha);

/// Validates alpha for the example and attaches the closed-form value.
ExampleSpec make_example(ExampleId id, double alpha = 0.0);

/// (1 - e^(-alpha b)) / (1 + alpha^2): integral of e^(-alpha x) sin(x) over [0, b].
double example1_truncated(double alpha, double b);

/// e^(-alpha b) / (1 + alpha^2): integral of e^(-alpha x) sin(x) over [b, inf).
double example1_tail(double alpha, double b);

/// Partial sum of sum_k (-1)^k [1*3*...*(4k-1)] / (2^(2k) x^((4k+1)/2)), k = 1..n_terms.
/// Throws RangeError above 20 terms.
double example2_error_series(double x, int n_terms);

/// The two leading derivative groups of the error of the one-point formula
/// for cos(alpha x)/x, valid where sin(alpha x) = 0 and cos(alpha x) = 1:
/// -(-alpha^2/x + 2/x^3) + (alpha^4/x - 12 alpha^2/x^3 + 24/x^5).
double example3_error_two_terms(double x, double alpha);

/// Integral over [0, c] of f(x) w(x) for a built-in integrand, handling the
/// origin: 1/sqrt(x) through x = t^2, cos(alpha x)/x through its finite limit
/// against a sine kernel. Against a cosine kernel cos(alpha x)/x diverges.
IntegralResult head_integral(const ExampleSpec& example, const OscillatoryKernel& kernel,
                             double c, const QuadratureConfig& cfg);

/// Integral over [0, b] of f(x) sin(x), handling the origin as head_integral.
double truncated_integral(const ExampleSpec& example, double b, const QuadratureConfig& cfg);

/// Integral of f(x) w(x) over [0, inf) for a built-in integrand: the origin
/// panel up to the first kernel zero, then integrate_semi_infinite from there.
IntegralResult integrate_example(const ExampleSpec& example, const OscillatoryKernel& kernel,
                                 double min_length, const QuadratureConfig& qcfg,
                                 const CorrectionSpec& cspec);

struct OracleResult {
    double value = 0.0;
    /// Last two unaccelerated partial sums.
    double bracket_lower = 0.0;
    double bracket_upper = 0.0;
    std::int64_t cycles = 0;
    std::int64_t evaluations = 0;
    /// Set when the value fell below the smallest normal double and was reported as 0.
    bool underflow = false;
    /// S_0 = 0, S_1 = I_0, S_2 = I_0 + I_1, ...
    std::vector<double> partial_sums;
};

inline constexpr std::int64_t oracle_max_cycles = 1'000'000;

/// Brute-force tail over [b, inf): one quadrature per kernel half-cycle, the
/// partial sums smoothed by repeated pairwise averaging. Stops when two
/// successive accelerated values agree to target_rel_tol.
OracleResult oracle_tail_detailed(const Integrand& f, const OscillatoryKernel& kernel, double b,
                                  double target_rel_tol);

double oracle_tail(const Integrand& f, const OscillatoryKernel& kernel, double b,
                   double target_rel_tol);

} // namespace osctail::reference

#endif // OSCTAIL_REFERENCE_HPP
