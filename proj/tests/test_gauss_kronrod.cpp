#include <doctest.h>

#include "osctail/gauss_kronrod.hpp"

#include <cmath>

using namespace osctail;

TEST_CASE("15-point rule matches the QUADPACK qk15 table")
{
    // Non-negative half of qk15 (xgk, wgk, wg), largest node first.
    const double xgk[] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                          0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                          0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                          0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
    const double wgk[] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                          0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                          0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                          0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    const double wg[] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                         0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

    const KronrodRule& rule = kronrod_rule(15);
    REQUIRE(rule.size() == 15);
    CHECK(rule.gauss_points == 7);
    for (int i = 0; i < 8; ++i) {
        const auto idx = static_cast<std::size_t>(14 - i);
        CHECK(rule.nodes[idx] == doctest::Approx(xgk[i]).epsilon(1e-14));
        CHECK(rule.kronrod_weights[idx] == doctest::Approx(wgk[i]).epsilon(1e-13));
        const double gw = rule.gauss_weights[idx];
        if (i % 2 == 1)
            CHECK(gw == doctest::Approx(wg[i / 2]).epsilon(1e-13));
        else
            CHECK(gw == 0.0);
    }
}

TEST_CASE("Kronrod and Gauss parts integrate monomials to their design degree")
{
    for (int total : {3, 7, 15, 21, 31, 61}) {
        const KronrodRule& rule = kronrod_rule(total);
        const int m = rule.gauss_points;
        // Kronrod extension is exact through degree 3m + 1, Gauss through 2m - 1.
        for (int degree = 0; degree <= 3 * m + 1; ++degree) {
            double k = 0.0;
            double g = 0.0;
            for (int i = 0; i < rule.size(); ++i) {
                const auto idx = static_cast<std::size_t>(i);
                const double p = std::pow(rule.nodes[idx], degree);
                k += rule.kronrod_weights[idx] * p;
                g += rule.gauss_weights[idx] * p;
            }
            const double exact = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
            CHECK(k == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
            if (degree <= 2 * m - 1)
                CHECK(g == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
        }
    }
}

TEST_CASE("rule sizes are validated")
{
    CHECK_THROWS(kronrod_rule(4));
    CHECK_THROWS(kronrod_rule(1));
    CHECK(&kronrod_rule(21) == &kronrod_rule(21));
}
