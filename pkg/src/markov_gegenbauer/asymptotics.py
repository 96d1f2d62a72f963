"""Reference asymptotics: a two-sided bracket for the Legendre case, the
Bessel-zero limit of c_n / n^2, and closed-form brackets for that limit."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .basis import Lambda, _lam
from .constant import sharp_constant

__all__ = [
    "AsymptoticsReport",
    "LegendreBracket",
    "bessel_first_zero",
    "legendre_bracket",
    "limit_bracket",
    "asymptotic_report",
]

_SCAN_UPPER = 40.0
_SCAN_POINTS = 2000
_MAX_ORDER = 35.0

# tighter limit brackets known for the Chebyshev and lam = 1 cases
TIGHT_LIMIT_BRACKETS = {0.0: (0.472135, 0.478849), 1.0: (0.248549, 0.256861)}


@dataclass(frozen=True)
class LegendreBracket:
    n: int
    lower: float
    upper: float


@dataclass(frozen=True)
class AsymptoticsReport:
    lam: float
    bessel_order: float
    bessel_first_zero: float
    limit_value: float  # 1 / (2 j_{nu,1})
    bracket_lower: float
    bracket_upper: float
    trajectory: tuple[tuple[int, float], ...]  # (n, c_n / n^2)
    tight_bracket: tuple[float, float] | None


def _bessel_series(nu: float, x: float) -> float:
    """J_nu(x) without the (x/2)^nu / Gamma(nu+1) prefactor (same zeros)."""
    q = -0.25 * x * x
    term = 1.0
    total = 1.0
    s = 0
    while True:
        s += 1
        term *= q / (s * (s + nu))
        total += term
        if abs(term) <= 1e-18 * max(1.0, abs(total)) and s > x:
            return total


def bessel_first_zero(nu: float) -> float:
    """First positive zero of J_nu, by a sign scan and bisection on (0, 40]."""
    if nu <= -1.0:
        raise ValueError("order must exceed -1")
    if nu > _MAX_ORDER:
        raise ValueError(f"order {nu} too large: first zero may lie beyond the scan window")
    xs = [(_SCAN_UPPER * i) / _SCAN_POINTS for i in range(1, _SCAN_POINTS + 1)]
    prev_x, prev_f = 0.0, 1.0  # series value tends to +1 at 0+
    for x in xs:
        f = _bessel_series(nu, x)
        if f == 0.0:
            return x
        if prev_f > 0.0 > f:
            lo, hi = prev_x, x
            while hi - lo > 1e-12:
                mid = 0.5 * (lo + hi)
                if _bessel_series(nu, mid) > 0.0:
                    lo = mid
                else:
                    hi = mid
            return 0.5 * (lo + hi)
        prev_x, prev_f = x, f
    raise RuntimeError("no sign change found in the scan window")


def legendre_bracket(n: int) -> LegendreBracket:
    """Two-sided asymptotic bracket for the Legendre-weight constant, n > 5."""
    if n <= 5:
        raise ValueError("the bracket is valid only for n > 5")
    s = n + 1.5

    def value(r: float) -> float:
        return (s * s / math.pi) / (1.0 - (math.pi**2 - 3.0) / (12.0 * s * s) + r / s**4)

    # larger parenthesis gives the smaller value
    return LegendreBracket(n=n, lower=value(13.0), upper=value(-6.0))


def limit_bracket(lam: Lambda | float) -> tuple[float, float]:
    """Closed-form bracket for the limit of c_n / n^2."""
    lv = _lam(lam)
    lower = 1.0 / math.sqrt(2.0 * (2.0 * lv + 1.0) * (2.0 * lv + 5.0))
    upper = 1.0 / (2.0 * math.sqrt(2.0 * lv + 1.0))
    return lower, upper


def asymptotic_report(lam: Lambda | float, n_list) -> AsymptoticsReport:
    """Trajectory of c_n / n^2 along n_list against the known limit data."""
    lv = _lam(lam)
    ns = [int(n) for n in n_list]
    if not ns or any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("n_list must be nonempty and strictly ascending")
    nu = (2.0 * lv - 3.0) / 4.0
    j1 = bessel_first_zero(nu)
    lower, upper = limit_bracket(lv)
    trajectory = tuple((n, sharp_constant(n, lv).normalized) for n in ns)
    return AsymptoticsReport(
        lam=lv,
        bessel_order=nu,
        bessel_first_zero=j1,
        limit_value=1.0 / (2.0 * j1),
        bracket_lower=lower,
        bracket_upper=upper,
        trajectory=trajectory,
        tight_bracket=TIGHT_LIMIT_BRACKETS.get(lv),
    )
