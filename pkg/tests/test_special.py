"""Kernel tests: gamma, zeta, Hurwitz zeta, the four completed functions,
their symmetries, and the additive linkage identities."""

import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetasums.errors import AccuracyError, DomainError, PoleError
from zetasums.special import (
    DEFAULT_OPTIONS,
    EvalOptions,
    FunctionId,
    critical_line_form,
    critical_line_values,
    evaluate,
    gamma,
    hurwitz_zeta,
    laurent_check,
    log_gamma,
    log_xi1,
    riemann_zeta,
)

EULER_GAMMA = 0.5772156649015328606


# ---------------------------------------------------------------------------
# gamma: Stirling-series oracle and exact values


def _stirling_gamma(s: complex) -> complex:
    """Independent Stirling-series oracle, shifted for accuracy."""
    shift = 0
    z = s
    while abs(z) < 20:
        z += 1
        shift += 1
    # B_{2n} / (2n (2n-1)) for n = 1..6
    bern = [
        1.0 / 12,
        -1.0 / 360,
        1.0 / 1260,
        -1.0 / 1680,
        1.0 / 1188,
        -691.0 / 360360,
    ]
    series = sum(b / z ** (2 * k + 1) for k, b in enumerate(bern))
    lg = (z - 0.5) * cmath.log(z) - z + 0.5 * math.log(2 * math.pi) + series
    out = cmath.exp(lg)
    for j in range(shift):
        out /= s + j
    return out


@pytest.mark.parametrize(
    "s",
    [2.5, 7.0, 0.5 + 3.0j, -1.5 + 2.0j, 4.0 - 6.0j, 0.25, -3.3 + 0.7j],
)
def test_gamma_vs_stirling(s):
    expected = _stirling_gamma(complex(s))
    assert abs(gamma(s) - expected) <= 1e-12 * abs(expected)


def test_gamma_exact_values():
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    for n in range(1, 10):
        assert gamma(n) == pytest.approx(math.factorial(n - 1), rel=1e-13)
    # reflection formula
    s = 0.3 + 0.4j
    lhs = gamma(s) * gamma(1 - s)
    rhs = math.pi / cmath.sin(math.pi * s)
    assert abs(lhs - rhs) <= 1e-13 * abs(rhs)


def test_gamma_pole():
    with pytest.raises(PoleError):
        gamma(0.0)
    with pytest.raises(PoleError):
        gamma(-3.0)


def test_log_gamma_recurrence():
    s = 1.7 + 9.2j
    assert abs(log_gamma(s + 1) - (log_gamma(s) + cmath.log(s))) < 1e-12


# ---------------------------------------------------------------------------
# zeta / Hurwitz: brute-force partial-sum oracle and exact values


def _brute_zeta(s: complex, n: int = 1_000_000) -> complex:
    k = np.arange(1, n + 1, dtype=float)
    total = np.sum(k ** (-s))
    # integral tail plus half-term correction
    return total + n ** (1 - s) / (s - 1) - 0.5 * n ** (-s)


@pytest.mark.parametrize("s", [3.0, 2.5 + 1.0j, 4.0 - 2.0j])
def test_zeta_vs_brute_force(s):
    expected = _brute_zeta(complex(s))
    assert abs(riemann_zeta(s) - expected) <= 1e-10 * abs(expected)


def test_zeta_exact_values():
    assert riemann_zeta(2.0) == pytest.approx(math.pi**2 / 6, rel=1e-13)
    assert riemann_zeta(4.0) == pytest.approx(math.pi**4 / 90, rel=1e-13)
    assert riemann_zeta(0.0) == pytest.approx(-0.5, rel=1e-13)
    assert riemann_zeta(-1.0) == pytest.approx(-1.0 / 12.0, rel=1e-12)


def test_zeta_pole():
    with pytest.raises(PoleError):
        riemann_zeta(1.0)


def test_hurwitz_vs_brute_force():
    s, a = 3.5, 0.75
    n = 1_000_000
    k = np.arange(n, dtype=float)
    expected = np.sum((k + a) ** (-s))
    expected += (n + a) ** (1 - s) / (s - 1) - 0.5 * (n + a) ** (-s)
    assert hurwitz_zeta(s, a) == pytest.approx(expected, rel=1e-10)


def test_hurwitz_reduces_to_zeta():
    s = 2.2 + 3.0j
    assert abs(hurwitz_zeta(s, 1.0) - riemann_zeta(s)) < 1e-12


def test_hurwitz_splitting_identity():
    # zeta(s) = 2^-s [zeta(s, 1/2) + zeta(s, 1)]
    s = 1.5 + 10.0j
    lhs = riemann_zeta(s)
    rhs = 2.0 ** (-s) * (hurwitz_zeta(s, 0.5) + hurwitz_zeta(s, 1.0))
    assert abs(lhs - rhs) < 1e-11


def test_explicit_cutoff_accuracy_error():
    opts = EvalOptions(euler_maclaurin_cutoff=5, target_abs_error=1e-12)
    with pytest.raises(AccuracyError):
        riemann_zeta(0.5 + 200.0j, opts)


# ---------------------------------------------------------------------------
# completed functions: values, poles, limits


def test_xi_special_values():
    # xi(0) = xi(1) = 1/2
    assert evaluate(FunctionId.XI, 0.0) == pytest.approx(0.5, rel=1e-12)
    assert evaluate(FunctionId.XI, 1.0) == pytest.approx(0.5, rel=1e-12)


def test_l4_value_at_one():
    # L_{-4}(1) = pi/4 (Leibniz series)
    assert evaluate(FunctionId.L4, 1.0) == pytest.approx(math.pi / 4, rel=1e-12)


def test_l4_value_at_two_catalan():
    # L_{-4}(2) is Catalan's constant
    assert evaluate(FunctionId.L4, 2.0) == pytest.approx(
        0.915965594177219015, rel=1e-12
    )


def test_xi1_pole():
    with pytest.raises(PoleError):
        evaluate(FunctionId.XI1, 1.0)


def test_t_plus_removable_point():
    # T_plus(1/2) = xi_1(1)-pole cancellation; finite limit
    val = evaluate(FunctionId.T_PLUS, 0.5)
    direct = evaluate(FunctionId.T_PLUS, 0.5 + 1e-4)
    assert val == pytest.approx(direct, rel=1e-6)


def test_laurent_check_t_plus():
    residue, _const = laurent_check(FunctionId.T_PLUS, 1.0)
    # xi_1(2s)/4 near s=1: residue (1/2)/4 = 1/8 from the argument scaling
    assert residue == pytest.approx(0.125, abs=1e-8)


# ---------------------------------------------------------------------------
# symmetries (criterion: functional equations hold to 1e-10)


@settings(max_examples=30, deadline=None)
@given(
    st.floats(-3.0, 4.0).filter(lambda x: abs(x - 0.5) > 0.05),
    st.floats(0.1, 40.0),
)
def test_xi_even_symmetry(sig, t):
    s = complex(sig, t)
    a = evaluate(FunctionId.XI, s)
    b = evaluate(FunctionId.XI, 1 - s)
    assert abs(a - b) <= 1e-10 * max(abs(a), abs(b), 1e-300)


@settings(max_examples=20, deadline=None)
@given(st.floats(-1.0, 2.0), st.floats(0.1, 20.0))
def test_t_tilde_symmetries(sig, t):
    s = complex(sig, t)
    p = evaluate(FunctionId.T_PLUS_TILDE, s)
    p2 = evaluate(FunctionId.T_PLUS_TILDE, 1 - s)
    assert abs(p - p2) <= 1e-10 * max(abs(p), 1e-300)
    # the (s - 1/2) factor and the odd T_minus flip sign together: even
    m = evaluate(FunctionId.T_MINUS_TILDE, s)
    m2 = evaluate(FunctionId.T_MINUS_TILDE, 1 - s)
    assert abs(m - m2) <= 1e-10 * max(abs(m), 1e-300)


@settings(max_examples=20, deadline=None)
@given(
    st.floats(-2.0, 3.0).filter(lambda x: abs(x - 1.0) > 0.05 and abs(x) > 0.05),
    st.floats(0.1, 20.0),
)
def test_l4_completed_even_symmetry(sig, t):
    s = complex(sig, t)
    a = evaluate(FunctionId.L4_COMPLETED, s)
    b = evaluate(FunctionId.L4_COMPLETED, 1 - s)
    assert abs(a - b) <= 1e-10 * max(abs(a), 1e-300)


@settings(max_examples=20, deadline=None)
@given(st.floats(1.5, 5.0), st.floats(-20.0, 20.0))
def test_conjugation_symmetry(sig, t):
    s = complex(sig, t)
    for f in (FunctionId.XI, FunctionId.L4_COMPLETED):
        a = evaluate(f, s)
        b = evaluate(f, s.conjugate())
        assert abs(a - b.conjugate()) <= 1e-12 * max(abs(a), 1e-300)


# ---------------------------------------------------------------------------
# additive linkage identities (criterion: 1e-10 relative at random points)


def test_link_half_sum_identities(rng):
    for _ in range(50):
        s = complex(rng.uniform(-1.0, 2.0), rng.uniform(0.3, 30.0))
        xi1_2s = cmath.exp(log_xi1(2 * s))
        xi1_2sm1 = cmath.exp(log_xi1(2 * s - 1))
        tp = evaluate(FunctionId.T_PLUS, s)
        tm = evaluate(FunctionId.T_MINUS, s)
        assert abs(xi1_2s - 2 * (tp + tm)) <= 1e-10 * abs(xi1_2s)
        assert abs(xi1_2sm1 - 2 * (tp - tm)) <= 1e-10 * abs(xi1_2sm1)


def test_link_tilde_identities(rng):
    for _ in range(50):
        s = complex(rng.uniform(-1.0, 2.0), rng.uniform(0.1, 20.0))
        xi_2s = evaluate(FunctionId.XI, 2 * s)
        xi_2sm1 = evaluate(FunctionId.XI, 2 * s - 1)
        tpt = evaluate(FunctionId.T_PLUS_TILDE, s)
        tmt = evaluate(FunctionId.T_MINUS_TILDE, s)
        lhs3 = (1 - s) * xi_2s
        rhs3 = 4 * (tmt + (s - 0.5) * tpt)
        assert abs(lhs3 - rhs3) <= 1e-10 * max(abs(lhs3), 1e-300)
        lhs4 = s * xi_2sm1
        rhs4 = 4 * (tmt - (s - 0.5) * tpt)
        assert abs(lhs4 - rhs4) <= 1e-10 * max(abs(lhs4), 1e-300)


# ---------------------------------------------------------------------------
# critical-line real forms


def test_critical_line_form_real_and_signed():
    # the scaled forms are real and change sign across the first xi zero
    lo = critical_line_form(FunctionId.XI, 14.0)
    hi = critical_line_form(FunctionId.XI, 14.2)
    assert np.sign(lo) != np.sign(hi)


def test_critical_line_values_vectorized_consistency():
    ts = np.array([5.0, 10.0, 15.0, 20.0])
    vals = critical_line_values(FunctionId.XI, ts)
    for t, v in zip(ts, vals):
        assert v == pytest.approx(critical_line_form(FunctionId.XI, float(t)), rel=1e-10)


def test_critical_line_no_underflow_at_large_t():
    ts = np.linspace(995.0, 1000.0, 32)
    for f in (FunctionId.T_PLUS, FunctionId.T_MINUS, FunctionId.XI):
        vals = critical_line_values(f, ts)
        assert np.all(np.isfinite(vals))
        assert np.all(vals != 0.0)
