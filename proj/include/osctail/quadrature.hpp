#ifndef OSCTAIL_QUADRATURE_HPP
#define OSCTAIL_QUADRATURE_HPP

#include "osctail/model.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace osctail {

struct QuadratureConfig {
    /// Target relative tolerance, per panel against the panel's integral of |f w|.
    double rel_tol = 1e-10;
    /// Bisection budget inside one kernel half-cycle; must be a power of two.
    int max_subdivisions_per_cycle = 64;
    /// Points of the Gauss-Kronrod rule used on every panel (odd, >= 3).
    int nodes_per_panel = 15;

    /// Throws DomainError when a field is out of range.
    void validate() const;
};

/// [a, interior kernel zeros..., b]. Gaps never exceed pi / omega.
std::vector<double> cycle_breakpoints(double a, double b, const OscillatoryKernel& kernel);

struct PanelSum {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

/// Integrates an already-weighted function g over consecutive panels
/// [breakpoints[i], breakpoints[i + 1]], bisecting each panel adaptively.
/// Panels are reduced left to right with compensated summation.
PanelSum integrate_panels(const RealFunction& g, std::span<const double> breakpoints,
                          const QuadratureConfig& cfg);

/// Integral of f(x) w(x) over [a, b] with panels ending at kernel zeros.
/// The result has tail_correction = 0 and b_used = b.
IntegralResult integrate_finite(const Integrand& f, const OscillatoryKernel& kernel, double a,
                                double b, const QuadratureConfig& cfg = {});

} // namespace osctail

#endif // OSCTAIL_QUADRATURE_HPP
