"""Zero location on the critical line and the real axis.

Zeros are found as sign changes of the rescaled critical-line real form,
refined by bisection followed by secant steps, and returned as ordered
datasets with 1-based ordinals.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .errors import MissedZeroWarning, NoSignChangeError, DomainError
from .special import (
    DEFAULT_OPTIONS,
    EvalOptions,
    FunctionId,
    critical_line_form,
    critical_line_values,
    evaluate,
)

CRITICAL_LINE = "critical_line"
REAL_AXIS = "real_axis"

_CHUNK = 4096


@dataclass(frozen=True)
class ZeroRecord:
    function: FunctionId
    index: int
    location_kind: str
    t_or_x: float
    residual: float


@dataclass
class ZeroDataset:
    function: FunctionId
    records: List[ZeroRecord] = field(default_factory=list)
    t_max_scanned: float = 0.0
    generator_metadata: str = ""

    def ordinates(self) -> np.ndarray:
        """Critical-line ordinates t, in increasing order."""
        return np.array(
            [r.t_or_x for r in self.records if r.location_kind == CRITICAL_LINE]
        )

    def real_points(self) -> np.ndarray:
        return np.array(
            [r.t_or_x for r in self.records if r.location_kind == REAL_AXIS]
        )

    def __len__(self) -> int:
        return len(self.records)


def default_grid_step(t_hi: float) -> float:
    """0.02 up to t=1200, 0.01 above (mean zero gap shrinks like 1/log t)."""
    return 0.02 if t_hi <= 1200.0 else 0.01


def _opposite(fa: float, fb: float) -> bool:
    """True when fa and fb have strictly opposite signs.

    Sign comparison, not a product test: rescaled critical-line values can
    be ~1e-300 and their product would underflow to zero.
    """
    return (fa > 0.0) != (fb > 0.0) and fa != 0.0 and fb != 0.0


def _bisect_secant(func, a: float, b: float, fa: float, fb: float) -> float:
    """Root of func on [a, b] given fa*fb < 0: bisection to 1e-6, then
    secant steps kept inside the shrinking bracket, to width 1e-11."""
    while b - a > 1e-6:
        m = 0.5 * (a + b)
        fm = func(m)
        if fm == 0.0:
            return m
        if _opposite(fa, fm):
            b, fb = m, fm
        else:
            a, fa = m, fm
    for _ in range(60):
        if b - a <= 1e-11:
            break
        if fb != fa:
            x = b - fb * (b - a) / (fb - fa)
        else:
            x = 0.5 * (a + b)
        if not a < x < b:
            x = 0.5 * (a + b)
        fx = func(x)
        if fx == 0.0:
            return x
        if _opposite(fa, fx):
            b, fb = x, fx
        else:
            a, fa = x, fx
    return 0.5 * (a + b)


def refine_zero(
    f: FunctionId,
    t_bracket: Tuple[float, float],
    opts: EvalOptions = DEFAULT_OPTIONS,
    index: int = 0,
) -> ZeroRecord:
    """Refine a sign-change bracket of the critical-line form to width 1e-11.

    A bracket holding two zeros (no sign change at the ends) is split by one
    interior subdivision and the lower zero is returned.
    """
    a, b = float(t_bracket[0]), float(t_bracket[1])
    if not a < b:
        raise DomainError("bracket must satisfy a < b")
    func = lambda t: critical_line_form(f, t, opts)
    fa, fb = func(a), func(b)
    if fa == 0.0:
        return ZeroRecord(f, index, CRITICAL_LINE, a, 0.0)
    if fb == 0.0:
        return ZeroRecord(f, index, CRITICAL_LINE, b, 0.0)
    if not _opposite(fa, fb):
        # look for an interior sign change (possible zero pair)
        grid = np.linspace(a, b, 17)
        vals = [fa] + [func(x) for x in grid[1:-1]] + [fb]
        for i in range(len(grid) - 1):
            if _opposite(vals[i], vals[i + 1]):
                a, b, fa, fb = grid[i], grid[i + 1], vals[i], vals[i + 1]
                break
        else:
            raise NoSignChangeError(
                f"no sign change of {f} critical-line form on [{a}, {b}]"
            )
    root = _bisect_secant(func, a, b, fa, fb)
    return ZeroRecord(f, index, CRITICAL_LINE, root, abs(func(root)))


def scan_zeros(
    f: FunctionId,
    t_lo: float,
    t_hi: float,
    grid_step: Optional[float] = None,
    opts: EvalOptions = DEFAULT_OPTIONS,
    check_count: bool = True,
) -> ZeroDataset:
    """Scan [t_lo, t_hi] for zeros of the critical-line form of f.

    The grid is aligned to integer multiples of the step, so adjacent scans
    share their boundary points and concatenate without loss.
    """
    f = FunctionId(f)
    if grid_step is None:
        grid_step = default_grid_step(t_hi)
    if not grid_step > 0:
        raise DomainError("grid_step must be positive")
    i_lo = math.ceil(t_lo / grid_step - 1e-9)
    i_hi = math.floor(t_hi / grid_step + 1e-9)
    if f == FunctionId.T_MINUS:
        i_lo = max(i_lo, 1)  # pole of T_minus at t=0
    roots: List[float] = []
    prev_t = prev_v = None
    for start in range(i_lo, i_hi + 1, _CHUNK):
        stop = min(start + _CHUNK, i_hi + 1)
        t = np.arange(start, stop, dtype=float) * grid_step
        v = critical_line_values(f, t, opts)
        if prev_t is not None:
            t = np.concatenate(([prev_t], t))
            v = np.concatenate(([prev_v], v))
        sign_change = np.nonzero(np.sign(v[:-1]) * np.sign(v[1:]) < 0.0)[0]
        for i in sign_change:
            root = _bisect_secant(
                lambda x: critical_line_form(f, x, opts),
                float(t[i]),
                float(t[i + 1]),
                float(v[i]),
                float(v[i + 1]),
            )
            roots.append(root)
        roots.extend(float(x) for x in t[v == 0.0])
        prev_t, prev_v = float(t[-1]), float(v[-1])
    roots = sorted(set(roots))
    records = [
        ZeroRecord(
            f, i + 1, CRITICAL_LINE, r, abs(critical_line_form(f, r, opts))
        )
        for i, r in enumerate(roots)
    ]
    ds = ZeroDataset(
        function=f,
        records=records,
        t_max_scanned=float(i_hi) * grid_step,
        generator_metadata=f"scan t in [{t_lo}, {t_hi}] step {grid_step}",
    )
    if check_count and t_lo <= grid_step:
        count_check(ds)
    return ds


def _predicted_count(f: FunctionId, big_t: float) -> float:
    """Smooth zero-count estimate N(T) on (0, T]."""
    if big_t <= 0.0:
        return 0.0
    if f == FunctionId.XI:
        x = big_t / (2.0 * math.pi)
        return x * math.log(x) - x + 7.0 / 8.0 if x > 0 else 0.0
    if f in (FunctionId.T_PLUS, FunctionId.T_MINUS):
        x = big_t / math.pi
        return x * math.log(x) - x
    if f == FunctionId.L4_COMPLETED:
        # upper half-plane only; conjugate zeros are implied
        return (big_t / (2.0 * math.pi)) * (math.log(2.0 * big_t / math.pi) - 1.0)
    raise DomainError(f"no zero-count model for {f}")


def count_check(ds: ZeroDataset) -> Tuple[int, float]:
    """Compare the dataset's zero count on (0, t_max] with the density model.

    Emits MissedZeroWarning when the discrepancy exceeds 2 + 5% of the
    prediction; the smooth model itself fluctuates by O(log T).
    """
    observed = int(np.sum(ds.ordinates() <= ds.t_max_scanned))
    predicted = _predicted_count(ds.function, ds.t_max_scanned)
    if abs(observed - predicted) > 2.0 + 0.05 * predicted:
        warnings.warn(
            f"{ds.function}: found {observed} zeros up to t={ds.t_max_scanned}, "
            f"density model predicts {predicted:.1f}",
            MissedZeroWarning,
        )
    return observed, predicted


def real_axis_zeros_tminus(
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> Tuple[ZeroRecord, ZeroRecord]:
    """The two real-axis zeros of T_minus, near 3.91231 and -2.91231.

    Located on the pole-free modified form (same zeros away from the poles),
    which is real on the real axis.
    """

    def g(x: float) -> float:
        return evaluate(FunctionId.T_MINUS_TILDE, x, opts).real

    def solve(a: float, b: float) -> float:
        return _bisect_secant(g, a, b, g(a), g(b))

    x_pos = solve(3.5, 4.3)
    x_neg = solve(-3.3, -2.5)
    rec_pos = ZeroRecord(FunctionId.T_MINUS, 1, REAL_AXIS, x_pos, abs(g(x_pos)))
    rec_neg = ZeroRecord(FunctionId.T_MINUS, 2, REAL_AXIS, x_neg, abs(g(x_neg)))
    return rec_pos, rec_neg


def with_real_axis_records(
    ds: ZeroDataset, opts: EvalOptions = DEFAULT_OPTIONS
) -> ZeroDataset:
    """Copy of a T_minus-family dataset with the two real-axis zeros appended."""
    rec_pos, rec_neg = real_axis_zeros_tminus(opts)
    n = len(ds.records)
    extra = [
        ZeroRecord(ds.function, n + 1, REAL_AXIS, rec_pos.t_or_x, rec_pos.residual),
        ZeroRecord(ds.function, n + 2, REAL_AXIS, rec_neg.t_or_x, rec_neg.residual),
    ]
    return ZeroDataset(
        function=ds.function,
        records=list(ds.records) + extra,
        t_max_scanned=ds.t_max_scanned,
        generator_metadata=ds.generator_metadata + " + real-axis zeros",
    )
