#include <doctest.h>

#include "osctail/errors.hpp"
#include "osctail/quadrature.hpp"
#include "osctail/reference.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace osctail;
constexpr double pi = std::numbers::pi;

namespace {

void check_points(const std::vector<double>& got, const std::vector<double>& want)
{
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-15));
}

// Antiderivative of p(x) e^(i w x): e^(i w x) sum_j (-1)^j p^(j)(x) / (i w)^(j+1).
// Real part integrates p cos, imaginary part p sin.
std::complex<double> poly_exp_antiderivative(std::vector<double> coeffs, double omega, double x)
{
    const std::complex<double> iw(0.0, omega);
    std::complex<double> sum = 0.0;
    std::complex<double> denom = iw;
    double sign = 1.0;
    while (!coeffs.empty()) {
        double p = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;)
            p = p * x + coeffs[k];
        sum += sign * p / denom;
        std::vector<double> deriv;
        for (std::size_t k = 1; k < coeffs.size(); ++k)
            deriv.push_back(coeffs[k] * static_cast<double>(k));
        coeffs = std::move(deriv);
        denom *= iw;
        sign = -sign;
    }
    return std::exp(iw * x) * sum;
}

} // namespace

TEST_CASE("cycle breakpoints end at kernel zeros")
{
    check_points(cycle_breakpoints(0, 2 * pi, OscillatoryKernel::sine(1)), {0, pi, 2 * pi});
    check_points(cycle_breakpoints(0, 3.5 * pi, OscillatoryKernel::cosine(1)),
                 {0, 0.5 * pi, 1.5 * pi, 2.5 * pi, 3.5 * pi});
    // sin(2x) vanishes at k pi / 2, so pi/2, pi and 3pi/2 all fall inside (1, 2pi).
    check_points(cycle_breakpoints(1, 2 * pi, OscillatoryKernel::sine(2)),
                 {1, 0.5 * pi, pi, 1.5 * pi, 2 * pi});

    const auto pts = cycle_breakpoints(0.3, 40.0, OscillatoryKernel::cosine(3.7));
    for (std::size_t i = 1; i < pts.size(); ++i) {
        CHECK(pts[i] > pts[i - 1]);
        CHECK(pts[i] - pts[i - 1] <= pi / 3.7 * (1 + 1e-12));
    }
    CHECK_THROWS_AS(cycle_breakpoints(2, 2, OscillatoryKernel::sine(1)), DomainError);
    CHECK_THROWS_AS(cycle_breakpoints(3, 2, OscillatoryKernel::sine(1)), DomainError);
}

TEST_CASE("integrate_finite on simple integrands")
{
    const Integrand one("one", [](double) { return 1.0; });
    const auto sine = OscillatoryKernel::sine(1);

    const IntegralResult half = integrate_finite(one, sine, 0, pi);
    CHECK(half.finite_part == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(half.tail_correction == 0.0);
    CHECK(half.total == half.finite_part);
    CHECK(half.evaluations > 0);
    CHECK(half.b_used == pi);

    CHECK(std::abs(integrate_finite(one, sine, 0, 2 * pi).finite_part) < 1e-12);

    const Integrand decay = reference::exp_integrand(0.01);
    const double expected = (1 - std::exp(-0.2 * pi)) / (1 + 1e-4);
    CHECK(integrate_finite(decay, sine, 0, 20 * pi).finite_part
          == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("polynomial times kernel matches closed-form antiderivatives")
{
    const std::vector<std::vector<double>> polys = {
        {1.0}, {0.5, -2.0}, {1.0, 0.0, 3.0}, {-1.0, 0.25, 0.0, 0.125, 0.01, -0.002}};
    for (const auto& coeffs : polys) {
        for (double omega : {1.0, 2.5}) {
            const Integrand p("poly", [coeffs](double x) {
                double v = 0.0;
                for (std::size_t k = coeffs.size(); k-- > 0;)
                    v = v * x + coeffs[k];
                return v;
            });
            const double a = 0.0;
            const double b = 4 * pi / omega;
            const auto exact = poly_exp_antiderivative(coeffs, omega, b)
                               - poly_exp_antiderivative(coeffs, omega, a);
            const double sin_part =
                integrate_finite(p, OscillatoryKernel::sine(omega), a, b).finite_part;
            const double cos_part =
                integrate_finite(p, OscillatoryKernel::cosine(omega), a, b).finite_part;
            CAPTURE(coeffs.size());
            CAPTURE(omega);
            CHECK(sin_part == doctest::Approx(exact.imag()).epsilon(1e-12));
            CHECK(cos_part == doctest::Approx(exact.real()).epsilon(1e-12));
        }
    }
}

TEST_CASE("additivity at kernel zeros")
{
    using namespace reference;
    const Integrand examples[] = {exp_integrand(0.1), inv_sqrt_integrand(),
                                  cos_over_x_integrand(0.2)};
    const auto sine = OscillatoryKernel::sine(1);
    QuadratureConfig cfg;
    for (const Integrand& f : examples) {
        const double a = 0.5;
        const double c = 30 * pi;
        for (double b : {pi, 7 * pi, 29 * pi}) {
            const double whole = integrate_finite(f, sine, a, c, cfg).finite_part;
            const double split = integrate_finite(f, sine, a, b, cfg).finite_part
                                 + integrate_finite(f, sine, b, c, cfg).finite_part;
            CAPTURE(f.name());
            CHECK(std::abs(whole - split) <= 10 * cfg.rel_tol * std::abs(whole));
        }
    }
}

TEST_CASE("evaluation count is deterministic")
{
    const Integrand f = reference::inv_sqrt_integrand();
    const auto sine = OscillatoryKernel::sine(1);
    const IntegralResult r1 = integrate_finite(f, sine, 1.0, 50 * pi);
    const IntegralResult r2 = integrate_finite(f, sine, 1.0, 50 * pi);
    CHECK(r1.evaluations == r2.evaluations);
    CHECK(r1.finite_part == r2.finite_part);
}

TEST_CASE("quadrature errors")
{
    const auto sine = OscillatoryKernel::sine(1);
    const Integrand bad("bad", [](double x) { return x > 2.0 ? std::nan("") : 1.0; });
    try {
        integrate_finite(bad, sine, 0, pi);
        FAIL("expected an evaluation error");
    } catch (const EvaluationError& e) {
        CHECK(e.x() > 2.0);
    }

    // A kink that a 3-point rule with no subdivision budget cannot resolve.
    const Integrand kink("kink", [](double x) { return std::abs(x - 1.0); });
    QuadratureConfig coarse;
    coarse.nodes_per_panel = 3;
    coarse.max_subdivisions_per_cycle = 1;
    try {
        integrate_finite(kink, sine, 0, pi, coarse);
        FAIL("expected a convergence error");
    } catch (const ConvergenceError& e) {
        CHECK(std::isfinite(e.best_estimate()));
        CHECK(e.bracket_lower() <= e.best_estimate());
    }

    QuadratureConfig invalid;
    invalid.max_subdivisions_per_cycle = 48;
    CHECK_THROWS_AS(invalid.validate(), DomainError);
    invalid = {};
    invalid.nodes_per_panel = 2;
    CHECK_THROWS_AS(invalid.validate(), DomainError);
    invalid = {};
    invalid.rel_tol = 1.0;
    CHECK_THROWS_AS(invalid.validate(), DomainError);
}
