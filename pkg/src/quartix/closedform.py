"""Closed-form critical points of the ratio quintic.

The derivative quartic ``5 mu0 x^4 + 4 mu1 x^3 + 3 mu2 x^2 + 2 mu3 x + mu4`` is
shifted to the depressed form ``w^4 + p w^2 + q w + r`` (``x = w - mu1/(5 mu0)``),
its resolvent cubic is solved with the trigonometric Cardano formula in the
three-real-root regime, and Ferrari's factorisation yields the four critical
points.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .poly import Quintic, eval_poly

COS_CLAMP = 1e-12
RADICAND_RTOL = 1e-10
Q_BIQUADRATIC_RTOL = 1e-12
SEPARATION_RTOL = 1e-9
Q_DEGENERATE_RTOL = 1e-12


class ClosedFormError(ArithmeticError):
    """The closed form does not apply; callers fall back to the oracle."""


class ClosedFormUnavailable(ClosedFormError):
    pass


class ComplexExtrema(ClosedFormError):
    pass


class DegenerateClosedForm(ClosedFormError):
    pass


class CasusIrreducibilisError(ValueError):
    pass


@dataclass(frozen=True)
class ResolventData:
    p: float
    q: float
    r: float
    a: float
    b: float
    Q: float
    shift: float
    alpha: Optional[float] = None
    z0: Optional[float] = None

    @property
    def three_real(self) -> bool:
        return self.Q < 0

    def resolvent_cubic(self, z: float) -> float:
        p, q, r = self.p, self.q, self.r
        return z**3 + p * z**2 + (p * p - 4 * r) / 4 * z - q * q / 8

    def depressed_quartic(self, w: float) -> float:
        return w**4 + self.p * w**2 + self.q * w + self.r

    def as_dict(self) -> dict:
        d = {"p": self.p, "q": self.q, "r": self.r, "a": self.a, "b": self.b, "Q": self.Q}
        if self.z0 is not None:
            d["z0"] = self.z0
            d["alpha"] = self.alpha
        return d


def resolvent(quintic: Quintic) -> ResolventData:
    m0, m1, m2, m3, m4, _ = quintic.mu
    if not m0 > 0:
        raise ValueError("not a valid quintic from a quartic operator: mu0 must be positive")
    p = (15 * m0 * m2 - 6 * m1**2) / (25 * m0**2)
    q = (50 * m0**2 * m3 + 8 * m1**3 - 30 * m0 * m1 * m2) / (125 * m0**3)
    r = (15 * m0 * m1**2 * m2 - 50 * m0**2 * m1 * m3 - 3 * m1**4 + 125 * m0**3 * m4) / (625 * m0**4)
    a = -p * p / 12 - r
    b = -(p**3) / 108 + p * r / 3 - q * q / 8
    Q = (a / 3) ** 3 + (b / 2) ** 2
    shift = m1 / (5 * m0)
    if Q >= 0:
        return ResolventData(p, q, r, a, b, Q, shift)
    if abs(a) <= 1e-300:
        raise DegenerateClosedForm("degenerate depressed cubic")
    alpha = _alpha(a, b)
    z0 = 2 * math.sqrt(-a / 3) * math.cos(2 * math.pi / 3 + alpha / 3) - p / 3
    return ResolventData(p, q, r, a, b, Q, shift, alpha, z0)


def _alpha(a: float, b: float) -> float:
    c = -(b / 2) * (-3 / a) ** 1.5
    if abs(c) > 1:
        if abs(c) > 1 + COS_CLAMP:
            raise CasusIrreducibilisError(f"cos(alpha) = {c!r} outside [-1, 1]")
        c = math.copysign(1.0, c)
    return math.acos(c)


def cardano_real_roots(a: float, b: float) -> tuple[float, float, float]:
    """The three real roots of ``eta^3 + a eta + b`` for ``(a/3)^3 + (b/2)^2 < 0``.

    Returned as ``(eta1, eta2, eta3)`` with ``eta_k = 2 sqrt(-a/3) cos((alpha +
    2 pi (k - 2)) / 3)``, so that ``eta3 < eta1 < eta2``.
    """
    if (a / 3) ** 3 + (b / 2) ** 2 >= 0:
        raise CasusIrreducibilisError("casus irreducibilis precondition violated: Q >= 0")
    alpha = _alpha(a, b)
    m = 2 * math.sqrt(-a / 3)
    return tuple(m * math.cos((alpha + 2 * math.pi * (k - 2)) / 3) for k in (1, 2, 3))


@dataclass(frozen=True)
class ExtremaSet:
    xi_ext: tuple[float, float, float, float]
    lam: tuple[float, float, float, float]
    biquadratic: bool = False

    @property
    def xi_min(self) -> float:
        return self.lam[0]

    @property
    def xi_max(self) -> float:
        return self.lam[-1]


def _sqrt_radicand(x: float, scale: float) -> float:
    if x < 0:
        if x < -RADICAND_RTOL * scale:
            raise ComplexExtrema("complex extrema: negative radicand in Ferrari split")
        return 0.0
    return math.sqrt(x)


def ferrari_extrema(quintic: Quintic, res: ResolventData) -> ExtremaSet:
    """The four real critical points of ``quintic`` in the ``Q < 0, z0 > 0`` regime."""
    if not res.three_real:
        raise ClosedFormUnavailable("closed form unavailable: Q >= 0")
    # Q shares its zeros with the discriminant of P': a rounding-level Q means a
    # repeated extremum, which the square roots below would split by ~sqrt(eps)
    if abs(res.Q) <= Q_DEGENERATE_RTOL * ((res.a / 3) ** 2 * abs(res.a / 3) + (res.b / 2) ** 2):
        raise DegenerateClosedForm("closed form degenerate: repeated extremum (Q ~ 0)")
    p, q, r = res.p, res.q, res.r
    wscale = 1.0 + abs(p) + abs(q) + abs(r)
    if abs(q) <= Q_BIQUADRATIC_RTOL * wscale:
        # w^4 + p w^2 + r: the Ferrari split would divide 0 by 0
        d = _sqrt_radicand(p * p - 4 * r, wscale)
        s1, s2 = (-p + d) / 2, (-p - d) / 2
        if s2 < 0:
            raise ComplexExtrema("complex extrema: biquadratic has a negative square")
        u, v = math.sqrt(s1), math.sqrt(s2)
        omegas = (u, -u, v, -v)
        biq = True
    else:
        if res.z0 is None or not res.z0 > 0:
            raise ClosedFormUnavailable("closed form unavailable: z0 <= 0")
        z0 = res.z0
        s = math.sqrt(2 * z0)
        t = q / (2 * s)
        d12 = _sqrt_radicand(2 * z0 - 4 * (p / 2 + z0 + t), wscale)
        d34 = _sqrt_radicand(2 * z0 - 4 * (p / 2 + z0 - t), wscale)
        omegas = ((s + d12) / 2, (s - d12) / 2, (-s + d34) / 2, (-s - d34) / 2)
        biq = False
    xi = tuple(_polish(quintic, w - res.shift) for w in omegas)
    lam = tuple(sorted(xi))
    for lo, hi in zip(lam, lam[1:]):
        if hi - lo <= SEPARATION_RTOL * max(1.0, abs(lo), abs(hi)):
            raise DegenerateClosedForm("closed form degenerate: repeated extremum")
    return ExtremaSet(xi, lam, biq)


def _polish(quintic: Quintic, x: float, steps: int = 4) -> float:
    """Newton on P' from the closed-form value, keeping only improving steps.

    The shift back from the depressed variable cancels badly when the extrema
    span several orders of magnitude.
    """
    d1 = quintic.derivative()
    d2 = d1.derivative()
    f = eval_poly(d1, x)
    for _ in range(steps):
        slope = eval_poly(d2, x)
        if f == 0 or slope == 0:
            break
        nx = x - f / slope
        nf = eval_poly(d1, nx)
        if not abs(nf) < abs(f):
            break
        x, f = nx, nf
    return x


def derivative_residual(quintic: Quintic, x: float) -> float:
    """``|P'(x)|`` relative to the quintic's scale at ``x``."""
    return abs(eval_poly(quintic.derivative(), x)) / quintic.scale(x)
