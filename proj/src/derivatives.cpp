#include "osctail/derivatives.hpp"

#include "osctail/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace osctail {

std::vector<double> central_weights(int order, int half_width)
{
    if (order < 0 || half_width < 1 || 2 * half_width < order)
        throw DomainError("central_weights: stencil too narrow for the derivative order");

    const int n = 2 * half_width + 1;
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        grid[static_cast<std::size_t>(i)] = static_cast<double>(i - half_width);

    // c[j][k]: weight of grid point j for the k-th derivative at 0.
    std::vector<std::vector<double>> c(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(order + 1), 0.0));
    auto x = [&](int i) { return grid[static_cast<std::size_t>(i)]; };
    auto w = [&](int j, int k) -> double& {
        return c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    };

    double c1 = 1.0;
    double c4 = x(0);
    w(0, 0) = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, order);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x(i);
        for (int j = 0; j < i; ++j) {
            const double c3 = x(i) - x(j);
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    w(i, k) = c1 * (k * w(i - 1, k - 1) - c5 * w(i - 1, k)) / c2;
                w(i, 0) = -c1 * c5 * w(i - 1, 0) / c2;
            }
            for (int k = mn; k >= 1; --k)
                w(j, k) = (c4 * w(j, k) - k * w(j, k - 1)) / c3;
            w(j, 0) = c4 * w(j, 0) / c3;
        }
        c1 = c2;
    }

    std::vector<double> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        out[static_cast<std::size_t>(j)] = w(j, order);
    return out;
}

int central_half_width(int order)
{
    if (order < 1)
        throw DomainError("central_half_width: order must be >= 1");
    return (order + 1) / 2 + 1;
}

DerivativeEstimate central_difference(const RealFunction& f, double x, int order, double h)
{
    if (order == 0) {
        const double v = f(x);
        if (!std::isfinite(v))
            throw EvaluationError("derivative probe: integrand is not finite", x);
        return {v, 0.0, 1};
    }
    if (!(h > 0.0) || !std::isfinite(h))
        throw DomainError("central_difference: step must be finite and positive");
    const double fine = 0.5 * h;
    if (x + fine == x || x - fine == x || fine < std::numeric_limits<double>::min())
        throw NumericError("central_difference: step underflows against the abscissa");

    const int p = central_half_width(order);
    const std::vector<double> weights = central_weights(order, p);

    // Values on the fine grid x + j h/2, j = -2p..2p; the coarse grid is every other point.
    std::vector<double> values(static_cast<std::size_t>(4 * p + 1));
    double magnitude = 0.0;
    for (int j = -2 * p; j <= 2 * p; ++j) {
        const double xj = x + j * fine;
        const double v = f(xj);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "derivative probe: integrand is not finite at x = " << xj;
            throw EvaluationError(msg.str(), xj);
        }
        values[static_cast<std::size_t>(j + 2 * p)] = v;
        magnitude = std::max(magnitude, std::abs(v));
    }

    double coarse = 0.0;
    double refined = 0.0;
    double weight_norm = 0.0;
    for (int j = -p; j <= p; ++j) {
        const double wj = weights[static_cast<std::size_t>(j + p)];
        coarse += wj * values[static_cast<std::size_t>(2 * j + 2 * p)];
        refined += wj * values[static_cast<std::size_t>(j + 2 * p)];
        weight_norm += std::abs(wj);
    }
    coarse /= std::pow(h, order);
    refined /= std::pow(fine, order);

    DerivativeEstimate out;
    out.value = (16.0 * refined - coarse) / 15.0;
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * weight_norm * magnitude
                            / std::pow(fine, order);
    out.error_bound = std::abs(refined - coarse) + rounding;
    out.evaluations = static_cast<std::int64_t>(values.size());
    return out;
}

} // namespace osctail
