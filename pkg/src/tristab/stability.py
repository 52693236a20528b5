"""The slope functional J(omega, gamma) = d/d omega of the profile mass.

Sign of J decides orbital stability of the standing wave: positive J means
stable, negative unstable.  Three independent evaluation routes are provided
so each can serve as an oracle for the others:

* ``eval_J``: the transformed integrand C * N(a,s)/D(a,s)^{3/2} on [0,1],
  with the (1-s)^{-1/2} endpoint removed by s = 1 - u^2.
* ``eval_J_raw``: the direct form
  (-1/(2U'(a))) * integral of (3 + s(U'(a)-U'(s))/U(s)) sqrt(s)/sqrt(U(s))
  over [0, a], with the (a-s)^{-1/2} endpoint removed by s = a - u^2.
* ``eval_J_mass_fd``: central finite difference of the mass integral
  ``mass_Q`` in omega, with a Richardson consistency estimate.

For defocusing-lowest-power (D*) cases with p < 7/3, the omega -> 0 limit
J(0, gamma) is finite and computed by ``eval_J0`` from the gamma-eliminated
pieces N1, N2, D1, D2.

Near the nonexistence curve the integral genuinely diverges; evaluation is
skipped there and a signed infinity sentinel is returned (positive on the
lower-left side, negative on the FF upper-right side).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .boundary import omega_star
from .errors import DivergingIntegral, NoStandingWave, NotOnCurve, UnsupportedRegime
from .landscape import u_prime, u_value
from .model import NonlinearityParams
from .profile import ProfileResult, find_a, find_a0
from .quadrature import integrate

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class StabilityValue:
    """One J evaluation: value, error estimate, divergence flag, route tag."""

    j: float
    abs_error: float
    diverging: bool
    method: str

    def verdict(self) -> str:
        """stable / unstable / indeterminate per the sign of j.

        A diverging sentinel carries the sign of the limit, which is
        definitive.  A finite j decides only when it exceeds its own error
        estimate.
        """
        if self.diverging:
            return "stable" if self.j > 0 else "unstable"
        if abs(self.j) > self.abs_error:
            return "stable" if self.j > 0 else "unstable"
        return "indeterminate"


@dataclass(frozen=True)
class OmegaZeroPieces:
    """gamma-eliminated integrand pieces for the omega = 0 functional.

    The integrand of J(0, gamma) is (N1 + beta*N2) / (D1 + beta*D2)^{3/2}.
    In the DF case both D1 and D2 are positive on (0, 1).
    """

    beta: float
    n1: Callable
    n2: Callable
    d1: Callable
    d2: Callable


def _require_profile(params: NonlinearityParams, omega: float,
                     gamma: float) -> ProfileResult:
    res = find_a(params, omega, gamma)
    if res is None:
        raise NoStandingWave(
            "no standing wave at omega=%g, gamma=%g (case %s)"
            % (omega, gamma, params.case))
    return res


def _divergence_sign(params: NonlinearityParams, omega: float,
                     gamma: float) -> float:
    """Sign of the J blow-up on the side of the curve the query sits on.

    Lower-left approaches give +infinity in every case with a curve; only
    the FF case has an upper-right side (larger first zero), where the limit
    is -infinity.
    """
    if params.case == "FF":
        try:
            ws = omega_star(params, gamma)
        except NotOnCurve:
            return 1.0
        if omega > ws:
            return -1.0
    return 1.0


def _sentinel(params, omega, gamma, method: str) -> StabilityValue:
    sign = _divergence_sign(params, omega, gamma)
    return StabilityValue(j=sign * math.inf, abs_error=math.inf,
                          diverging=True, method=method)


# -- transformed route -------------------------------------------------------


def _transformed_integrand(params: NonlinearityParams, gamma: float,
                           a: float) -> Callable:
    """Integrand in u after s = 1 - u^2, vectorized.

    A_l(a, 1-u^2) needs 1 - (1-u^2)^e to full relative precision near u = 0,
    so the powers go through expm1/log1p.
    """
    p, q, r = params.p, params.q, params.r
    ep, eq, er = (p - 1.0) / 2.0, (q - 1.0) / 2.0, (r - 1.0) / 2.0
    ap, aq, ar = a ** ep, a ** eq, a ** er
    cnp = params.a1 * (5.0 - p) / (p + 1.0) * ap
    cnq = -gamma * (5.0 - q) / (q + 1.0) * aq
    cnr = params.a3 * (5.0 - r) / (r + 1.0) * ar
    cdp = params.a1 / (p + 1.0) * ap
    cdq = -gamma / (q + 1.0) * aq
    cdr = params.a3 / (r + 1.0) * ar

    def g(u):
        u = np.asarray(u, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            L = np.log1p(-u * u)
            Ep = -np.expm1(ep * L)
            Eq = -np.expm1(eq * L)
            Er = -np.expm1(er * L)
            N = cnp * Ep + cnq * Eq + cnr * Er
            D = cdp * Ep + cdq * Eq + cdr * Er
            safe = D > 0.0
            out = np.where(safe,
                           2.0 * u * N / np.where(safe, D, 1.0) ** 1.5,
                           0.0)
        return out

    return g


def eval_J(params: NonlinearityParams, omega: float, gamma: float,
           rel_tol: float = 1e-9) -> StabilityValue:
    """J via the transformed integrand; the default route for sweeps."""
    res = _require_profile(params, omega, gamma)
    if res.on_boundary:
        return _sentinel(params, omega, gamma, "transformed")
    a, up = res.a, res.uprime_at_a
    C = -a / (4.0 * _SQRT2 * up)
    quad = integrate(_transformed_integrand(params, gamma, a), 0.0, 1.0,
                     rel_tol=rel_tol, max_panels=2000, initial=2)
    return StabilityValue(j=C * quad.value, abs_error=abs(C) * quad.abs_error,
                          diverging=False, method="transformed")


# -- raw route ---------------------------------------------------------------


def _raw_integrand(params: NonlinearityParams, omega: float, gamma: float,
                   a: float, up: float) -> Callable:
    def g(u):
        u = np.asarray(u, dtype=float)
        s = a - u * u
        s = np.where(s < 0.0, 0.0, s)
        with np.errstate(divide="ignore", invalid="ignore"):
            Us = u_value(params, omega, gamma, s)
            Ups = u_prime(params, omega, gamma, s)
            safe = np.asarray(Us, dtype=float) > 0.0
            Us_safe = np.where(safe, Us, 1.0)
            bracket = 3.0 + s * (up - Ups) / Us_safe
            out = np.where(safe,
                           2.0 * u * bracket * np.sqrt(s) / np.sqrt(Us_safe),
                           0.0)
        return out

    return g


def eval_J_raw(params: NonlinearityParams, omega: float, gamma: float,
               rel_tol: float = 1e-9) -> StabilityValue:
    """J via the direct integrand on [0, a]; oracle for the transformed route."""
    res = _require_profile(params, omega, gamma)
    if res.on_boundary:
        return _sentinel(params, omega, gamma, "raw")
    a, up = res.a, res.uprime_at_a
    pref = -1.0 / (2.0 * up)
    quad = integrate(_raw_integrand(params, omega, gamma, a, up),
                     0.0, math.sqrt(a), rel_tol=rel_tol, max_panels=2000,
                     initial=2)
    return StabilityValue(j=pref * quad.value,
                          abs_error=abs(pref) * quad.abs_error,
                          diverging=False, method="raw")


# -- mass and finite-difference route ----------------------------------------


def mass_Q(params: NonlinearityParams, omega: float, gamma: float,
           rel_tol: float = 1e-11) -> float:
    """Profile mass integral Q = int_0^a sqrt(s)/sqrt(U(s)) ds.

    Raises NoStandingWave when no profile exists and DivergingIntegral when
    the profile sits on the nonexistence curve (double zero makes the
    integral infinite).
    """
    res = _require_profile(params, omega, gamma)
    if res.on_boundary:
        raise DivergingIntegral(
            "mass integral diverges on the nonexistence curve at "
            "omega=%g, gamma=%g" % (omega, gamma))
    a = res.a

    def g(u):
        u = np.asarray(u, dtype=float)
        s = a - u * u
        s = np.where(s < 0.0, 0.0, s)
        with np.errstate(divide="ignore", invalid="ignore"):
            Us = u_value(params, omega, gamma, s)
            safe = np.asarray(Us, dtype=float) > 0.0
            out = np.where(safe,
                           2.0 * u * np.sqrt(s)
                           / np.sqrt(np.where(safe, Us, 1.0)),
                           0.0)
        return out

    quad = integrate(g, 0.0, math.sqrt(a), rel_tol=rel_tol, max_panels=2000,
                     initial=2)
    return quad.value


def eval_J_mass_fd(params: NonlinearityParams, omega: float,
                   gamma: float) -> StabilityValue:
    """J as a central difference of mass_Q in omega, Richardson-checked.

    Step h = max(1e-4*omega, 1e-6) clamped to omega/2; shrunk further if a
    stencil point falls outside the existence region.
    """
    res = _require_profile(params, omega, gamma)
    if res.on_boundary:
        return _sentinel(params, omega, gamma, "mass_fd")
    h = max(1e-4 * omega, 1e-6)
    h = min(h, 0.5 * omega)
    last_exc = None
    for _ in range(6):
        try:
            d_h = (mass_Q(params, omega + h, gamma)
                   - mass_Q(params, omega - h, gamma)) / (2.0 * h)
            d_h2 = (mass_Q(params, omega + 0.5 * h, gamma)
                    - mass_Q(params, omega - 0.5 * h, gamma)) / h
            err = abs(d_h - d_h2) / 3.0 + 1e-9 * abs(d_h2)
            return StabilityValue(j=d_h2, abs_error=err, diverging=False,
                                  method="mass_fd")
        except (NoStandingWave, DivergingIntegral) as exc:
            last_exc = exc
            h *= 0.25
    raise last_exc


# -- omega = 0 functional ----------------------------------------------------


def omega_zero_pieces(params: NonlinearityParams,
                      a0: float) -> OmegaZeroPieces:
    """The N1, N2, D1, D2 pieces and beta for the omega = 0 integrand."""
    p, q, r = params.p, params.q, params.r
    a1, a3 = params.a1, params.a3
    ep, eq, er = (p - 1.0) / 2.0, (q - 1.0) / 2.0, (r - 1.0) / 2.0
    beta = (p + 1.0) / (r + 1.0) * a0 ** ((r - p) / 2.0)

    def n1(s):
        s = np.asarray(s, dtype=float)
        return a1 * ((5.0 - p) * (1.0 - s ** ep) - (5.0 - q) * (1.0 - s ** eq))

    def n2(s):
        s = np.asarray(s, dtype=float)
        return a3 * ((5.0 - r) * (1.0 - s ** er) - (5.0 - q) * (1.0 - s ** eq))

    def d1(s):
        s = np.asarray(s, dtype=float)
        return a1 * (s ** eq - s ** ep)

    def d2(s):
        s = np.asarray(s, dtype=float)
        return a3 * (s ** eq - s ** er)

    return OmegaZeroPieces(beta=beta, n1=n1, n2=n2, d1=d1, d2=d2)


def eval_J0(params: NonlinearityParams, gamma: float,
            rel_tol: float = 1e-9) -> StabilityValue:
    """J(0, gamma), the omega -> 0 limit; D* cases with p < 7/3 only.

    Raises UnsupportedRegime for p >= 7/3 (the limit is -infinity there),
    NoStandingWave when F1 has no positive zero (DD with gamma at or above
    the endpoint value), and DivergingIntegral at a degenerate zero.
    """
    if params.sign1 != -1:
        raise ValueError("the omega = 0 functional applies to D* cases only")
    p, q, r = params.p, params.q, params.r
    if p >= 7.0 / 3.0:
        raise UnsupportedRegime(
            "J(0, gamma) is not finite for p >= 7/3 (the limit is -infinity)")
    a0 = find_a0(params, gamma)
    if a0 is None:
        raise NoStandingWave(
            "no zero-frequency amplitude at gamma=%g (case %s)"
            % (gamma, params.case))
    up0 = u_prime(params, 0.0, gamma, a0)
    scale = (a0 ** ((p - 1.0) / 2.0) + abs(gamma) * a0 ** ((q - 1.0) / 2.0)
             + a0 ** ((r - 1.0) / 2.0))
    if up0 >= -1e-9 * (1.0 + scale):
        raise DivergingIntegral(
            "degenerate zero-frequency amplitude at gamma=%g" % gamma)
    pieces = omega_zero_pieces(params, a0)
    beta = pieces.beta
    a1, a3 = params.a1, params.a3
    ep, eq, er = (p - 1.0) / 2.0, (q - 1.0) / 2.0, (r - 1.0) / 2.0

    # left half (0, 1/2]: s = 0.5 t^m flattens the s^{-3(p-1)/4} endpoint;
    # direct powers are exact here and the expm1 forms would cancel instead
    m = int(math.ceil(4.0 / (7.0 - 3.0 * p))) + 1
    m = max(m, 2)

    def g_left(t):
        t = np.asarray(t, dtype=float)
        s = 0.5 * t ** m
        num = pieces.n1(s) + beta * pieces.n2(s)
        den = pieces.d1(s) + beta * pieces.d2(s)
        with np.errstate(divide="ignore", invalid="ignore"):
            safe = den > 0.0
            out = np.where(safe,
                           num / np.where(safe, den, 1.0) ** 1.5
                           * (0.5 * m) * t ** (m - 1),
                           0.0)
        return out

    # right half [1/2, 1): s = 1 - u^2 with expm1 forms, since every piece
    # is a difference of values that approach 1
    def g_right(u):
        u = np.asarray(u, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            L = np.log1p(-u * u)
            Ep = -np.expm1(ep * L)
            Eq = -np.expm1(eq * L)
            Er = -np.expm1(er * L)
            num = (a1 * ((5.0 - p) * Ep - (5.0 - q) * Eq)
                   + beta * a3 * ((5.0 - r) * Er - (5.0 - q) * Eq))
            den = a1 * (Ep - Eq) + beta * a3 * (Er - Eq)
            safe = den > 0.0
            out = np.where(safe,
                           2.0 * u * num / np.where(safe, den, 1.0) ** 1.5,
                           0.0)
        return out

    quad_l = integrate(g_left, 0.0, 1.0, rel_tol=rel_tol, max_panels=2000,
                       initial=2)
    quad_r = integrate(g_right, 0.0, 1.0 / _SQRT2, rel_tol=rel_tol,
                       max_panels=2000, initial=2)
    C = -a0 / (4.0 * _SQRT2 * up0)
    pref = C * math.sqrt((p + 1.0) / a0 ** ep)
    j = pref * (quad_l.value + quad_r.value)
    err = abs(pref) * (quad_l.abs_error + quad_r.abs_error)
    return StabilityValue(j=j, abs_error=err, diverging=False,
                          method="omega_zero")
