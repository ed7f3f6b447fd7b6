import math

import pytest

import osctail
from osctail import reference


def test_one_point_and_series():
    sine = osctail.OscillatoryKernel.sine()
    f = reference.inv_sqrt_integrand()
    t = osctail.TruncationPoint.aligned(sine, 2)
    assert osctail.correct_zeroth(f, sine, t).value == pytest.approx(1 / math.sqrt(2 * math.pi))
    r = osctail.correct_series(f, sine, t, osctail.CorrectionSpec(order_k=1))
    assert r.value == pytest.approx(0.391363285891, rel=1e-11)
    assert len(r.terms) == 2


def test_python_callable_integrand():
    f = osctail.Integrand("decay", lambda x: math.exp(-x), [lambda x: -math.exp(-x)])
    r = osctail.integrate_semi_infinite(f, osctail.OscillatoryKernel.sine(), 0.0, 20 * math.pi)
    assert r.total == pytest.approx(0.5, rel=1e-9)
    assert r.error_estimate is None
    assert r.evaluations > 0


def test_truncation_selection():
    t = osctail.select_truncation(
        osctail.OscillatoryKernel.cosine(), osctail.TruncationRule.KernelZeros, 4 * math.pi
    )
    assert t.n == 5
    assert t.b == pytest.approx(4.5 * math.pi)


def test_reference_and_oracle():
    assert reference.example2_error_series(2 * math.pi, 3) == pytest.approx(-0.00695, rel=0.01)
    value = reference.oracle_tail(reference.exp_integrand(0.1), osctail.OscillatoryKernel.sine(), 10 * math.pi)
    assert value == pytest.approx(reference.example1_tail(0.1, 10 * math.pi), rel=1e-10)


def test_errors_map_to_python_exceptions():
    sine = osctail.OscillatoryKernel.sine()
    with pytest.raises(osctail.DomainError):
        osctail.cycle_breakpoints(2.0, 1.0, sine)
    bare = osctail.Integrand("bare", lambda x: 1 / math.sqrt(x))
    t = osctail.TruncationPoint.aligned(sine, 10)
    with pytest.raises(osctail.ConfigurationError):
        osctail.correct_series(bare, sine, t, osctail.CorrectionSpec(order_k=1))
    assert issubclass(osctail.ConvergenceError, osctail.Error)

    kink = osctail.Integrand("kink", lambda x: abs(x - 1.0))
    cfg = osctail.QuadratureConfig()
    cfg.nodes_per_panel = 3
    cfg.max_subdivisions_per_cycle = 1
    with pytest.raises(osctail.ConvergenceError) as info:
        osctail.integrate_finite(kink, sine, 0.0, math.pi, cfg)
    assert math.isfinite(info.value.best_estimate)


def test_table_and_criterion():
    rows = [line for line in osctail.table(3).splitlines() if not line.startswith("#")]
    assert rows[0] == "x_or_alpha,eps_rel,trunc_rel,eps_abs,trunc_abs"
    assert len(rows) == 6
    passed, text = osctail.run_criterion(4)
    assert passed
    assert text.startswith("PASS")
