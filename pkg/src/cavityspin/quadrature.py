"""Adaptive 1-D quadrature on finite intervals and exponentially decaying tails.

Backed by QUADPACK's adaptive Gauss-Kronrod (21-point) rule through
``scipy.integrate.quad``; the error estimate returned is the one QUADPACK
computes from the Gauss/Kronrod difference.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, NamedTuple

from scipy import integrate as _integrate


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-11
    abs_tol: float = 1e-15
    max_depth: int = 60
    tail_cutoff_factor: float = 60.0

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be > 0")
        if self.max_depth < 10:
            raise ValueError("max_depth must be >= 10")
        if self.tail_cutoff_factor < 20:
            raise ValueError("tail_cutoff_factor must be >= 20")


class QuadResult(NamedTuple):
    value: float
    error: float


class QuadratureError(ArithmeticError):
    """Raised when the adaptive rule cannot meet its tolerance.

    ``estimate`` carries the best value reached.
    """

    def __init__(self, message, estimate: QuadResult):
        super().__init__(message)
        self.estimate = estimate


def integrate(f: Callable[[float], float], a: float, b: float,
              cfg: QuadratureConfig | None = None) -> QuadResult:
    cfg = cfg or QuadratureConfig()
    if not a <= b:
        raise ValueError("integrate requires a <= b")
    if a == b:
        return QuadResult(0.0, 0.0)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        out = _integrate.quad(f, a, b, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol,
                              limit=cfg.max_depth, full_output=1)
    value, err = out[0], out[1]
    if len(out) > 3:
        # ier > 0; accept roundoff-limited results that still meet the target
        if err > max(cfg.abs_tol, cfg.rel_tol * abs(value)) * 10:
            raise QuadratureError(f"quadrature did not converge on [{a}, {b}]: {out[3]}",
                                  QuadResult(value, err))
    return QuadResult(value, err)


class TailBoundError(QuadratureError):
    pass


def integrate_tail(f: Callable[[float], float], a: float, decay_rate: float,
                   cfg: QuadratureConfig | None = None) -> QuadResult:
    """Integrate ``f`` over ``[a, inf)`` for an integrand decaying like exp(-decay_rate x).

    The interval is truncated after ``tail_cutoff_factor`` e-foldings; the
    discarded remainder is bounded by |f(b)|/decay_rate and folded into the
    returned error.
    """
    cfg = cfg or QuadratureConfig()
    if not decay_rate > 0:
        raise ValueError("decay_rate must be > 0")
    b = a + cfg.tail_cutoff_factor / decay_rate
    head = integrate(f, a, b, cfg)
    f_end = abs(f(b))
    remainder = f_end / decay_rate
    if not math.isfinite(f_end) or remainder > max(cfg.abs_tol, cfg.rel_tol * abs(head.value)):
        raise TailBoundError(f"integrand has not decayed at the cutoff x={b}: |f|={f_end:g}", head)
    return QuadResult(head.value, head.error + remainder)
