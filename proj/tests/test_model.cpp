#include <doctest.h>

#include "osctail/derivatives.hpp"
#include "osctail/errors.hpp"
#include "osctail/model.hpp"
#include "osctail/reference.hpp"

#include <cmath>
#include <numbers>

using namespace osctail;
constexpr double pi = std::numbers::pi;

TEST_CASE("truncation points round-trip their cycle index")
{
    for (double omega : {0.1, 1.0, 2.0, 17.3}) {
        for (KernelKind kind : {KernelKind::Sine, KernelKind::Cosine}) {
            const OscillatoryKernel kernel(kind, omega);
            for (TruncationRule rule : {TruncationRule::KernelZeros, TruncationRule::KernelExtrema}) {
                bool all_match = true;
                for (std::int64_t n = 1; n <= 1'000'000; ++n) {
                    const TruncationPoint t = TruncationPoint::aligned(kernel, n, rule);
                    all_match = all_match && t.n_index() == n
                                && TruncationPoint::reconstruct_index(t.b(), rule, kernel) == n;
                }
                CHECK(all_match);
            }
        }
    }
}

TEST_CASE("truncation point alignment per kernel and rule")
{
    const auto sine = OscillatoryKernel::sine(1.0);
    const auto cosine = OscillatoryKernel::cosine(1.0);
    CHECK(TruncationPoint::aligned(sine, 10, TruncationRule::KernelZeros).b() == 10 * pi);
    CHECK(TruncationPoint::aligned(cosine, 5, TruncationRule::KernelZeros).b() == 4.5 * pi);
    CHECK(TruncationPoint::aligned(sine, 4, TruncationRule::KernelExtrema).b() == 3.5 * pi);
    CHECK(TruncationPoint::aligned(cosine, 4, TruncationRule::KernelExtrema).b() == 4 * pi);

    CHECK_THROWS_AS(TruncationPoint(10.0, 3, TruncationRule::KernelZeros, sine), DomainError);
    CHECK_THROWS_AS(TruncationPoint(3 * pi, 0, TruncationRule::KernelZeros, sine), DomainError);
    // A few ulp off is still accepted; far off is not.
    const double b = 3 * pi;
    CHECK_NOTHROW(TruncationPoint(std::nextafter(b, 10.0), 3, TruncationRule::KernelZeros, sine));
    CHECK_THROWS_AS(TruncationPoint(b * (1 + 1e-12), 3, TruncationRule::KernelZeros, sine),
                    DomainError);
}

TEST_CASE("parity comes from the integer index")
{
    const auto sine = OscillatoryKernel::sine(1.0);
    CHECK(TruncationPoint::aligned(sine, 999'999, TruncationRule::KernelZeros).parity_sign() == -1);
    CHECK(TruncationPoint::aligned(sine, 1'000'000, TruncationRule::KernelZeros).parity_sign() == 1);
}

TEST_CASE("kernel and integrand invariants")
{
    CHECK_THROWS_AS(OscillatoryKernel::sine(0.0), DomainError);
    CHECK_THROWS_AS(OscillatoryKernel::cosine(-1.0), DomainError);
    CHECK(OscillatoryKernel::cosine(2.0)(0.25 * pi) == doctest::Approx(0.0).scale(1.0));

    const Integrand f("one", [](double) { return 1.0; });
    CHECK_THROWS_AS(f.with_decay_exponent(0.0), DomainError);
    CHECK(f.with_decay_exponent(-1.5).decay_exponent().value() == -1.5);
    CHECK(f.has_derivative(0));
    CHECK_FALSE(f.has_derivative(1));

    const Integrand g = f.with_derivatives({[](double) { return 0.0; }, nullptr});
    CHECK(g.analytic_order() == 1);
    CHECK(g.has_derivative(1));
    CHECK_FALSE(g.has_derivative(2));
    CHECK_THROWS_AS(Integrand("empty", nullptr), DomainError);
}

TEST_CASE("compensated sum recovers small addends")
{
    CompensatedSum s;
    s.add(1.0);
    for (int i = 0; i < 1000; ++i)
        s.add(1e-17);
    s.add(-1.0);
    CHECK(s.value() == doctest::Approx(1e-14).epsilon(1e-10));
}

TEST_CASE("registered derivatives agree with finite differences")
{
    using namespace reference;
    const Integrand examples[] = {exp_integrand(0.01), exp_integrand(1.0), inv_sqrt_integrand(),
                                  cos_over_x_integrand(0.2)};
    for (const Integrand& f : examples) {
        CAPTURE(f.name());
        for (double x : {4 * pi, 10 * pi, 20 * pi}) {
            for (int m = 1; m <= 6; ++m) {
                const DerivativeEstimate fd = central_difference(f.eval(), x, m, pi / 16.0);
                const double analytic = (*f.derivative(m))(x);
                CAPTURE(m);
                CAPTURE(x);
                CHECK(std::abs(fd.value - analytic) <= fd.error_bound);
            }
        }
    }
}
