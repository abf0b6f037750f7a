"""The ratio function V, its derivative zeros, and the modulus condition.

U(s) is the ratio xi_1(2s - 1) / xi_1(2s) and V = (1 + U) / (1 - U), so
that V has a zero at every critical-line zero of T_plus and a pole at every
zero of T_minus. Zeros of V' sit near the critical line, one per consecutive
zero/pole/zero (ZPZ) or pole/zero/pole (PZP) triplet; the scan checks the
sufficient condition |V(s_d)| > 1 at each of them. The module also traces
|V| = 1 level curves around individual T_plus zeros and locates the
collision parameter y* of the two-term family xi_1(2s) y^s + xi_1(2-2s)
y^(1-s).
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .errors import (
    ConvergenceError,
    DomainError,
    NonConvergenceWarning,
    OpenContourError,
    PoleError,
)
from .special import DEFAULT_OPTIONS, EvalOptions, FunctionId, log_xi1
from .datasets import cached_dataset

__all__ = [
    "TripletReport",
    "ContourPolyline",
    "u_func",
    "v_func",
    "asymptotic_check",
    "find_derivative_zeros",
    "condition_scan",
    "trace_unit_contour",
    "lagarias_suzuki_y_star",
]


@dataclass
class TripletReport:
    s_d: complex
    modulus: float
    triplet_kind: str  # "ZPZ" or "PZP"
    anchor_ordinals: Tuple[int, int, int]
    condition_met: bool
    centroid_t: float
    converged: bool


@dataclass
class ContourPolyline:
    level: float
    points: List[complex]
    closed: bool


def u_func(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """U(s) = xi_1(2s - 1) / xi_1(2s), computed in log form."""
    s = complex(s)
    return cmath.exp(log_xi1(2 * s - 1, opts) - log_xi1(2 * s, opts))


def v_func(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """V(s) = (1 + U(s)) / (1 - U(s))."""
    u = u_func(s, opts)
    if abs(u - 1.0) < 1e-300:
        raise PoleError(f"V(s) has a pole at s={s} (U = 1)")
    return (1.0 + u) / (1.0 - u)


def asymptotic_check(
    sigma: float, t: float, opts: EvalOptions = DEFAULT_OPTIONS
) -> Tuple[float, float]:
    """Deviations of |V| and arg V from their large-t leading estimates.

    In the regime 1 << sigma << t, U ~ sqrt(pi/s) gives the leading
    behaviour |V| ~ 1 + sqrt(2 pi / t) and arg V ~ -sqrt(2 pi / t);
    returns the absolute deviations from those two leading terms.
    """
    if not (5.0 <= sigma <= t / 20.0):
        raise DomainError(
            f"(sigma, t) = ({sigma}, {t}) outside the regime 5 <= sigma <= t/20"
        )
    v = v_func(complex(sigma, t), opts)
    mod_err = abs(abs(v) - (1.0 + math.sqrt(2.0 * math.pi / t)))
    arg_err = abs(cmath.phase(v) + math.sqrt(2.0 * math.pi / t))
    return mod_err, arg_err


def _v_prime(s: complex, opts: EvalOptions, h: float = 1e-5) -> complex:
    hs = h * max(1.0, abs(s))
    return (v_func(s + hs, opts) - v_func(s - hs, opts)) / (2.0 * hs)


def _newton_vprime(
    seed: complex, opts: EvalOptions, max_iter: int = 40
) -> Optional[complex]:
    """Damped Newton iteration on V', central-difference second derivative."""
    s = seed
    g = _v_prime(s, opts)
    for _ in range(max_iter):
        if abs(g) <= 1e-8:
            return s
        hs = 1e-5 * max(1.0, abs(s))
        gp = (_v_prime(s + hs, opts) - _v_prime(s - hs, opts)) / (2.0 * hs)
        if gp == 0:
            return None
        step = g / gp
        lam = 1.0
        for _ in range(8):
            s_new = s - lam * step
            g_new = _v_prime(s_new, opts)
            if abs(g_new) < abs(g):
                s, g = s_new, g_new
                break
            lam *= 0.5
        else:
            return None
    return s if abs(g) <= 1e-8 else None


def _merged_triplets(t_lo: float, t_hi: float):
    """Consecutive triplets of the merged T_plus / T_minus ordinate sequence.

    Labels are Z at T_plus zeros (zeros of V) and P at T_minus zeros (poles
    of V). Returns (ordinals, labels, ordinates) triplet tuples whose
    centroid lies in [t_lo, t_hi].
    """
    t_cap = max(t_hi * 1.05 + 10.0, 100.0)
    t_cap = min(t_cap, 1000.0)
    tp = cached_dataset(FunctionId.T_PLUS, 1000.0, None, False).ordinates()
    tm = cached_dataset(FunctionId.T_MINUS, 1000.0, None, True).ordinates()
    merged = sorted(
        [(t, "Z") for t in tp if t <= t_cap] + [(t, "P") for t in tm if t <= t_cap]
    )
    out = []
    for i in range(len(merged) - 2):
        trio = merged[i : i + 3]
        centroid = sum(t for t, _ in trio) / 3.0
        if t_lo <= centroid <= t_hi:
            kind = "".join(lab for _, lab in trio)
            out.append(((i + 1, i + 2, i + 3), kind, tuple(t for t, _ in trio)))
    return out


def find_derivative_zeros(
    t_lo: float, t_hi: float, opts: EvalOptions = DEFAULT_OPTIONS
) -> List[TripletReport]:
    """Zeros of V' near the critical line, one per merged-sequence triplet.

    Each consecutive triplet of the interlaced T_plus / T_minus ordinate
    sequence anchors one derivative zero, found by damped Newton seeded at
    the triplet centroid pushed 0.15 off the critical line; alternative
    seeds are tried before a NonConvergenceWarning is issued.
    """
    triplets = _merged_triplets(t_lo, t_hi)
    if not triplets:
        return []
    # Pool of distinct derivative zeros; a zero and its reflection
    # 1 - conj(s_d) are the same object, keyed by the off-line distance.
    pool: dict = {}
    any_converged_near = [False] * len(triplets)
    for idx, (ordinals, kind, ts) in enumerate(triplets):
        centroid_t = sum(ts) / 3.0
        span = ts[2] - ts[0]
        for off in (0.15, -0.15, 0.3, -0.3, 0.6, -0.6, 0.05, -0.05):
            s_d = _newton_vprime(complex(0.5 + off, centroid_t), opts)
            if (
                s_d is None
                or abs(s_d.imag - centroid_t) > 1.5 * span
                or abs(s_d.real - 0.5) > 1.0
                or not t_lo <= s_d.imag <= t_hi
            ):
                continue
            key = (round(abs(s_d.real - 0.5), 5), round(s_d.imag, 5))
            if key not in pool:
                pool[key] = s_d
            any_converged_near[idx] = True
            break
    centroids = [sum(ts) / 3.0 for _, _, ts in triplets]
    reports: List[TripletReport] = []
    for s_d in pool.values():
        idx = min(range(len(triplets)), key=lambda i: abs(centroids[i] - s_d.imag))
        ordinals, kind, ts = triplets[idx]
        modulus = abs(v_func(s_d, opts))
        reports.append(
            TripletReport(
                s_d=s_d,
                modulus=modulus,
                triplet_kind=kind,
                anchor_ordinals=ordinals,
                condition_met=modulus > 1.0,
                centroid_t=centroids[idx],
                converged=True,
            )
        )
    covered = np.array(sorted(s.imag for s in pool.values()))
    for idx, (ordinals, kind, ts) in enumerate(triplets):
        span = ts[2] - ts[0]
        near = covered.size and np.min(np.abs(covered - centroids[idx])) < 1.5 * span
        if not (any_converged_near[idx] or near):
            warnings.warn(
                f"derivative-zero search did not converge for the triplet "
                f"near t = {centroids[idx]:.4f}",
                NonConvergenceWarning,
            )
    reports.sort(key=lambda r: r.s_d.imag)
    return reports


def condition_scan(
    t_lo: float, t_hi: float, opts: EvalOptions = DEFAULT_OPTIONS
) -> Tuple[bool, List[TripletReport]]:
    """Aggregate the sufficient condition |V(s_d)| > 1 over a t range."""
    reports = find_derivative_zeros(t_lo, t_hi, opts)
    all_met = all(r.condition_met for r in reports if r.converged)
    return all_met, reports


def _bisect_level(
    f, r_lo: float, r_hi: float, tol: float = 1e-8, max_iter: int = 80
) -> float:
    """Bisection for f(r) = 0 given f(r_lo) < 0 < f(r_hi) or the reverse."""
    f_lo = f(r_lo)
    for _ in range(max_iter):
        mid = 0.5 * (r_lo + r_hi)
        f_mid = f(mid)
        if (f_mid < 0) == (f_lo < 0):
            r_lo, f_lo = mid, f_mid
        else:
            r_hi = mid
        if r_hi - r_lo < tol:
            break
    return 0.5 * (r_lo + r_hi)


def trace_unit_contour(
    t_center: float,
    n_points: int = 256,
    opts: EvalOptions = DEFAULT_OPTIONS,
) -> ContourPolyline:
    """Trace the closed |V| = 1 level curve around a T_plus zero.

    From the zero at s0 = 1/2 + i t_center the curve is traced radially:
    along each of n_points rays the level crossing log|V| = 0 is bracketed
    (|V| -> 0 at s0) and bisected to 1e-8 in the radius. The expansion
    budget for the outer bracket is the local zero gap; if some ray never
    reaches |V| >= 1 within it, the curve cannot close around s0 alone and
    OpenContourError is raised.
    """
    s0 = complex(0.5, t_center)
    tp = cached_dataset(FunctionId.T_PLUS, 1000.0, None, False).ordinates()
    gaps = np.diff(tp)
    idx = int(np.argmin(np.abs(tp - t_center)))
    if abs(tp[idx] - t_center) > 0.05:
        raise DomainError(f"t_center = {t_center} is not a T_plus zero ordinate")
    local_gap = float(
        min(gaps[max(idx - 1, 0)], gaps[min(idx, len(gaps) - 1)])
    )

    def logmod(r: float, theta: float) -> float:
        return math.log(abs(v_func(s0 + r * cmath.exp(1j * theta), opts)))

    points: List[complex] = []
    for k in range(n_points):
        theta = 2.0 * math.pi * k / n_points
        r_lo = 1e-6
        r_hi = 0.05
        budget = 1.2 * local_gap
        while logmod(r_hi, theta) < 0.0:
            r_hi *= 1.5
            if r_hi > budget:
                raise OpenContourError(
                    f"|V| = 1 not reached along theta = {theta:.3f} within "
                    f"radius {budget:.3f} of t = {t_center}"
                )
        r = _bisect_level(lambda rr: logmod(rr, theta), r_lo, r_hi)
        points.append(s0 + r * cmath.exp(1j * theta))
    return ContourPolyline(level=1.0, points=points, closed=True)


def _family_critical_line(t: float, y: float, opts: EvalOptions) -> float:
    """Scaled restriction of xi_1(2s) y^s + xi_1(2-2s) y^(1-s) to the line.

    At s = 1/2 + it the two terms are complex conjugates, so the family is
    2 sqrt(y) Re[exp(i t log y) xi_1(1 + 2it)]; the positive prefactor is
    dropped and the xi_1 magnitude rescaled to keep values representable.
    """
    lw = log_xi1(1.0 + 2j * t, opts)
    return math.cos(t * math.log(y) + lw.imag)


def family_line_zeros(
    y: float, t_hi: float, opts: EvalOptions = DEFAULT_OPTIONS, n_grid: int = 400
) -> List[float]:
    """Positive critical-line zero ordinates of the family up to t_hi.

    The grid is geometric so that a zero descending toward t = 0 (the
    collision point of the lowest conjugate pair) is still bracketed.
    """
    ts = np.geomspace(1e-6, t_hi, n_grid)
    vals = np.array([_family_critical_line(t, y, opts) for t in ts])
    hits = []
    for i in range(len(ts) - 1):
        if np.sign(vals[i]) * np.sign(vals[i + 1]) < 0:
            hits.append(
                _bisect_level(
                    lambda t: _family_critical_line(t, y, opts), ts[i], ts[i + 1]
                )
            )
    return hits


def lagarias_suzuki_y_star(
    resolution: float = 1e-4, opts: EvalOptions = DEFAULT_OPTIONS
) -> float:
    """Parameter y* where the lowest zero pair of the two-term family
    xi_1(2s) y^s + xi_1(2-2s) y^(1-s) collides and leaves the critical line.

    For y below y* the lowest conjugate pair of zeros sits on the line at
    +/- i t1(y) with t1 shrinking to 0 as y grows; at y* the pair collides
    at the centre point and leaves the line. y* is found by bisection on
    the presence of a sign change below t = 1.5 (the next zero of the
    family stays above 2 throughout the bracket).
    """
    t_hi = 1.5
    y_lo, y_hi = 6.0, 8.0

    def pair_on_line(y: float) -> bool:
        return len(family_line_zeros(y, t_hi, opts)) > 0

    if not pair_on_line(y_lo) or pair_on_line(y_hi):
        raise ConvergenceError(
            f"collision not bracketed in y between {y_lo} and {y_hi}"
        )
    while y_hi - y_lo > resolution:
        y_mid = 0.5 * (y_lo + y_hi)
        if pair_on_line(y_mid):
            y_lo = y_mid
        else:
            y_hi = y_mid
    return 0.5 * (y_lo + y_hi)
