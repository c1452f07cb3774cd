"""Integer-order cylinder functions J_l and K_l on the non-negative real axis.

Production evaluation is delegated to ``scipy.special`` (Cephes / AMOS);
the wrappers here enforce the domain, give J/K derivatives through the
standard recurrences, and expose a plain ascending-series evaluator that is
used as an independent cross-check at small arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special


@dataclass(frozen=True)
class SpecFunConfig:
    target_rel_error: float = 1e-13
    series_term_cap: int = 200

    def __post_init__(self):
        if not 0.0 < self.target_rel_error <= 1e-10:
            raise ValueError("target_rel_error must lie in (0, 1e-10]")
        if self.series_term_cap < 50:
            raise ValueError("series_term_cap must be >= 50")


def _check_order(l):
    if int(l) != l or l < 0:
        raise ValueError(f"order must be a non-negative integer, got {l!r}")
    return int(l)


def _as_real(x):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("argument must be finite")
    return arr


def _unwrap(arr):
    return float(arr) if np.ndim(arr) == 0 else arr


def bessel_j(l, x):
    """J_l(x) for integer ``l >= 0`` and real ``x >= 0`` (scalar or array)."""
    l = _check_order(l)
    arr = _as_real(x)
    if np.any(arr < 0):
        raise ValueError("bessel_j is defined here for x >= 0 only")
    return _unwrap(special.jv(l, arr))


def bessel_k(l, x):
    """K_l(x) for integer ``l >= 0`` and real ``x > 0`` (scalar or array).

    Raises ``OverflowError`` when the result is not representable, which
    happens only for arguments very close to zero at high order.
    """
    l = _check_order(l)
    arr = _as_real(x)
    if np.any(arr <= 0):
        raise ValueError("bessel_k diverges at x <= 0")
    out = special.kv(l, arr)
    if np.any(np.isinf(out)):
        raise OverflowError(f"K_{l}(x) overflows for the smallest requested x")
    return _unwrap(out)


def bessel_j_deriv(l, x):
    """dJ_l/dx = (J_{l-1} - J_{l+1})/2, with J_{-1} = -J_1."""
    l = _check_order(l)
    if l == 0:
        return -bessel_j(1, x)
    return 0.5 * (bessel_j(l - 1, x) - bessel_j(l + 1, x))


def bessel_k_deriv(l, x):
    """dK_l/dx = -(K_{l-1} + K_{l+1})/2, with K_{-1} = K_1."""
    l = _check_order(l)
    if l == 0:
        return -bessel_k(1, x)
    return -0.5 * (bessel_k(l - 1, x) + bessel_k(l + 1, x))


def bessel_j_series(l: int, x: float, cfg: SpecFunConfig | None = None) -> float:
    """Ascending power series for J_l(x).

    Reliable for ``x`` up to roughly ``l + 12``; beyond that cancellation
    between terms eats the precision and callers should use :func:`bessel_j`.
    """
    cfg = cfg or SpecFunConfig()
    l = _check_order(l)
    if not math.isfinite(x) or x < 0:
        raise ValueError("x must be finite and >= 0")
    if x == 0.0:
        return 1.0 if l == 0 else 0.0
    half = 0.5 * x
    term = half**l / math.factorial(l)
    total = term
    q = -half * half
    for k in range(1, cfg.series_term_cap):
        term *= q / (k * (k + l))
        total += term
        if abs(term) <= cfg.target_rel_error * 1e-3 * abs(total):
            return total
    raise ArithmeticError(f"J_{l} series did not converge in {cfg.series_term_cap} terms at x={x}")
