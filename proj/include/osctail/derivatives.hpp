#ifndef OSCTAIL_DERIVATIVES_HPP
#define OSCTAIL_DERIVATIVES_HPP

#include "osctail/model.hpp"

#include <cstdint>
#include <vector>

namespace osctail {

/// Finite-difference weights for the derivative of `order` on the integer
/// stencil -half_width..half_width (Fornberg's recursion, unit spacing).
std::vector<double> central_weights(int order, int half_width);

/// Stencil half width that gives fourth-order accuracy for a central
/// difference of the given derivative order.
int central_half_width(int order);

struct DerivativeEstimate {
    double value = 0.0;
    /// |D(h) - D(h/2)| plus a rounding allowance.
    double error_bound = 0.0;
    std::int64_t evaluations = 0;
};

/// Fourth-order central difference of f^(order)(x) at step h, improved by
/// one Richardson halving: (16 D(h/2) - D(h)) / 15.
DerivativeEstimate central_difference(const RealFunction& f, double x, int order, double h);

} // namespace osctail

#endif // OSCTAIL_DERIVATIVES_HPP
