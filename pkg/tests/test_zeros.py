"""Zero finder: scanning, refinement, counts, and real-axis zeros."""

import numpy as np
import pytest

from zetasums.errors import NoSignChangeError
from zetasums.special import FunctionId, critical_line_form
from zetasums.zeros import (
    CRITICAL_LINE,
    REAL_AXIS,
    count_check,
    real_axis_zeros_tminus,
    refine_zero,
    scan_zeros,
)

# first xi zero ordinates (classical, used as a bracket oracle only through
# an independent bisection below)
FIRST_XI_T = 14.134725141734693


def _bisect_oracle(f, lo, hi, tol=1e-12):
    flo = critical_line_form(f, lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fmid = critical_line_form(f, mid)
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
        if hi - lo < tol:
            break
    return 0.5 * (lo + hi)


def test_refine_matches_independent_bisection():
    rec = refine_zero(FunctionId.XI, (14.0, 14.3))
    oracle = _bisect_oracle(FunctionId.XI, 14.0, 14.3)
    assert rec.t_or_x == pytest.approx(oracle, abs=1e-9)
    assert rec.t_or_x == pytest.approx(FIRST_XI_T, abs=1e-9)


def test_refine_requires_sign_change():
    with pytest.raises(NoSignChangeError):
        refine_zero(FunctionId.XI, (15.0, 16.0))


def test_scan_small_range_xi():
    ds = scan_zeros(FunctionId.XI, 0.0, 60.0)
    # classical ordinates below 60
    expected = [
        14.134725,
        21.022040,
        25.010858,
        30.424876,
        32.935062,
        37.586178,
        40.918719,
        43.327073,
        48.005151,
        49.773832,
        52.970321,
        56.446248,
        59.347044,
    ]
    got = ds.ordinates()
    assert len(got) == len(expected)
    assert np.allclose(got, expected, atol=2e-6)


def test_scan_residuals_small(ds_tplus):
    assert all(abs(r.residual) < 1e-9 for r in ds_tplus.records)


def test_ordinates_sorted_and_indexed(ds_xi):
    ts = ds_xi.ordinates()
    assert np.all(np.diff(ts) > 0)
    cl = [r for r in ds_xi.records if r.location_kind == CRITICAL_LINE]
    assert [r.index for r in cl] == list(range(1, len(cl) + 1))


def test_interlacing_of_t_plus_t_minus(ds_tplus, ds_tminus):
    tp = ds_tplus.ordinates()
    tm = ds_tminus.ordinates()
    n = min(len(tp), len(tm))
    merged = np.empty(2 * n)
    merged[0::2] = tp[:n]  # T_plus starts lower
    merged[1::2] = tm[:n]
    # strict alternation: the interleaved sequence must be sorted
    assert np.all(np.diff(merged) > 0)


def test_count_check_passes(ds_xi, ds_tplus, ds_tminus, ds_l4):
    for ds in (ds_xi, ds_tplus, ds_tminus, ds_l4):
        obs, pred = count_check(ds)
        assert abs(obs - pred) <= 2 + 0.05 * pred


def test_t_plus_count_to_1000(ds_tplus):
    assert len(ds_tplus.ordinates()) == 1517


def test_real_axis_zeros():
    recs = real_axis_zeros_tminus()
    assert len(recs) == 2
    hi = max(r.t_or_x for r in recs)
    lo = min(r.t_or_x for r in recs)
    assert hi == pytest.approx(3.91231, abs=1e-5)
    assert lo == pytest.approx(-2.91231, abs=1e-5)
    assert hi + lo == pytest.approx(1.0, abs=1e-9)


def test_real_axis_records_present(ds_tminus):
    ra = [r for r in ds_tminus.records if r.location_kind == REAL_AXIS]
    assert len(ra) == 2
