"""Sign-counting tools for generalized polynomials.

A generalized polynomial is a finite sum c_1 x^{e_1} + ... + c_k x^{e_k}
with real (not necessarily integer) exponents, considered on x > 0.  The
Descartes bound carries over: the number of positive roots is at most the
number of sign changes in the coefficient sequence ordered by exponent.
Every numerator and denominator appearing in the slope analysis is of this
form, which is what makes the sign classifications tractable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class GeneralizedPolynomial:
    """Sum of c * x^e terms on x > 0, exponents strictly increasing."""

    terms: Tuple[Tuple[float, float], ...]

    def __post_init__(self):
        cleaned = []
        for coeff, expo in self.terms:
            coeff = float(coeff)
            expo = float(expo)
            if not (math.isfinite(coeff) and math.isfinite(expo)):
                raise ValueError("coefficients and exponents must be finite")
            if coeff == 0.0:
                continue
            cleaned.append((coeff, expo))
        cleaned.sort(key=lambda t: t[1])
        for (_, e1), (_, e2) in zip(cleaned, cleaned[1:]):
            if e1 == e2:
                raise ValueError("duplicate exponent %g" % e1)
        object.__setattr__(self, "terms", tuple(cleaned))

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        for coeff, expo in self.terms:
            out = out + coeff * x ** expo
        if out.ndim == 0:
            return float(out)
        return out


def sign_changes(gp: GeneralizedPolynomial) -> int:
    """Sign changes in the coefficient sequence, zeros already dropped."""
    signs = [1 if c > 0 else -1 for c, _ in gp.terms]
    return sum(1 for s1, s2 in zip(signs, signs[1:]) if s1 != s2)


def count_positive_roots_sampled(gp: GeneralizedPolynomial, s_max: float,
                                 n: int = 2000) -> int:
    """Roots of gp on (0, s_max] found by a geometric scan plus bisection.

    Counts sign changes of gp over a geometric grid and sharpens each
    bracket by bisection; tangential (even-order) contacts that never cross
    are invisible to this counter, matching how the Descartes bound is used.
    """
    if not gp.terms:
        return 0
    if s_max <= 0.0:
        raise ValueError("s_max must be positive")
    if n < 2:
        raise ValueError("need at least two sample points")
    grid = np.geomspace(s_max * 1e-12, s_max, n)
    vals = gp(grid)
    count = 0
    for i in range(len(grid) - 1):
        v1, v2 = vals[i], vals[i + 1]
        if v1 == 0.0:
            continue
        if v2 == 0.0 or (v1 > 0.0) != (v2 > 0.0):
            count += 1
    return count


def ratio_h(x, p1: float, q1: float, p2: float, q2: float):
    """(x^p1 - x^q1) / (x^p2 - x^q2) on x > 0, extended by its x -> 1 limit.

    The limit value (p1 - q1)/(p2 - q2) follows from l'Hopital.  Vectorized;
    requires p2 != q2 so the denominator is not identically zero.
    """
    if p2 == q2:
        raise ValueError("denominator exponents must differ")
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("ratio_h is defined for x > 0")
    with np.errstate(divide="ignore", invalid="ignore"):
        num = x ** p1 - x ** q1
        den = x ** p2 - x ** q2
        out = num / den
    limit = (p1 - q1) / (p2 - q2)
    out = np.where(den == 0.0, limit, out)
    if out.ndim == 0:
        return float(out)
    return out
