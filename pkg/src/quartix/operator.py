"""Quartic operators on the positive quadrant and their positive fixed points.

``Q(x, y) = (sum_i C(4,i) a_i x^(4-i) y^i, sum_i C(4,i) b_i x^(4-i) y^i)`` with
all ``a_i, b_i > 0``.  Every fixed point in the open quadrant has a ratio
``xi = y/x`` that is a positive root of the ratio quintic, and every such root
gives back exactly one fixed point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import closedform
from .classify import Classification, Regime, classify, skeleton_segments
from .poly import Quintic, RootSet, Root, cauchy_bound, descartes_bound, isolate_real_roots
from .report import AnalysisReport

BINOMIAL = (1, 4, 6, 4, 1)
ROOT_RTOL = 1e-9
FIXED_POINT_RTOL = 1e-9


class NotAFixedPointError(ValueError):
    pass


@dataclass(frozen=True)
class QuarticOperator:
    """Reduced coefficients ``a_0..a_4``, ``b_0..b_4`` (binomial weights not included)."""

    a: tuple[float, ...]
    b: tuple[float, ...]

    def __init__(self, a: Sequence[float], b: Sequence[float]):
        a = tuple(float(x) for x in a)
        b = tuple(float(x) for x in b)
        for name, c in (("a", a), ("b", b)):
            if len(c) != 5:
                raise ValueError(f"'{name}' needs exactly 5 coefficients, got {len(c)}")
            for i, x in enumerate(c):
                if not (math.isfinite(x) and x > 0):
                    raise ValueError(f"coefficient {name}[{i}] = {x!r} must be positive (all a_i, b_i > 0)")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def from_expanded(cls, A: Sequence[float], B: Sequence[float]) -> "QuarticOperator":
        """From monomial coefficients of ``x^4, x^3 y, x^2 y^2, x y^3, y^4``."""
        if len(A) != 5 or len(B) != 5:
            raise ValueError("expanded form needs 5 monomial coefficients per component")
        return cls([x / c for x, c in zip(A, BINOMIAL)], [x / c for x, c in zip(B, BINOMIAL)])

    @property
    def expanded(self) -> tuple[tuple[float, ...], tuple[float, ...]]:
        return (tuple(c * x for c, x in zip(BINOMIAL, self.a)), tuple(c * x for c, x in zip(BINOMIAL, self.b)))

    def __call__(self, x: float, y: float) -> tuple[float, float]:
        return apply(self, x, y)


def _form(c: Sequence[float], x: float, y: float) -> float:
    return sum(k * ci * x ** (4 - i) * y**i for i, (k, ci) in enumerate(zip(BINOMIAL, c)))


def _ratio_form(c: Sequence[float], xi: float) -> float:
    return sum(k * ci * xi**i for i, (k, ci) in enumerate(zip(BINOMIAL, c)))


def apply(op: QuarticOperator, x: float, y: float) -> tuple[float, float]:
    if x < 0 or y < 0:
        raise ValueError("quartic operator is defined on the nonnegative quadrant")
    return _form(op.a, x, y), _form(op.b, x, y)


def build_quintic(op: QuarticOperator) -> Quintic:
    a, b = op.a, op.b
    return Quintic((
        a[4],
        4 * a[3] - b[4],
        6 * a[2] - 4 * b[3],
        4 * a[1] - 6 * b[2],
        a[0] - 4 * b[1],
        b[0],
    ))


def realize_quintic(mu: Sequence[float]) -> QuarticOperator:
    """Some valid operator whose ratio quintic has the given ``mu0..mu5``.

    Needs ``mu0 > 0`` and ``mu5 > 0``.  Only divisions by 4 are used, so
    integer or dyadic ``mu`` are reproduced exactly.
    """
    m0, m1, m2, m3, m4, m5 = (float(m) for m in mu)
    if not (m0 > 0 and m5 > 0):
        raise ValueError("mu0 and mu5 must be positive")
    a3 = max(1.0, math.floor(m1 / 4) + 1)
    b4 = 4 * a3 - m1
    a2 = max(1.0, math.floor(m2 / 6) + 1)
    b3 = (6 * a2 - m2) / 4
    b2 = max(1.0, math.floor(-m3 / 6) + 1)
    a1 = (m3 + 6 * b2) / 4
    b1 = max(1.0, math.floor(-m4 / 4) + 1)
    a0 = m4 + 4 * b1
    return QuarticOperator([a0, a1, a2, a3, m0], [m5, b1, b2, b3, b4])


@dataclass(frozen=True)
class FixedPoint:
    xi: float
    x: float
    y: float
    residual: float
    multiplicity: int = 1
    certified: bool = True

    def as_dict(self) -> dict:
        return {"xi": self.xi, "x": self.x, "y": self.y, "residual": self.residual, "multiplicity": self.multiplicity}


def root_tolerance(quintic: Quintic, xi: float) -> float:
    return ROOT_RTOL * sum(abs(m) for m in quintic.mu) * max(1.0, xi) ** 5


def _fixed_point(op: QuarticOperator, xi: float, multiplicity: int = 1) -> FixedPoint:
    if not xi > 0:
        raise ValueError("ratio xi must be positive")
    x = _ratio_form(op.a, xi) ** (-1.0 / 3.0)
    y = xi * x
    u, v = apply(op, x, y)
    residual = max(abs(u - x), abs(v - y))
    ok = residual <= FIXED_POINT_RTOL * (x + y)
    return FixedPoint(xi, x, y, residual, multiplicity, ok)


def recover_fixed_point(op: QuarticOperator, xi: float, multiplicity: int = 1) -> FixedPoint:
    """The fixed point ``(x, xi x)`` with ``x = (sum C(4,i) a_i xi^i)^(-1/3)``."""
    if not xi > 0:
        raise ValueError("ratio xi must be positive")
    quintic = build_quintic(op)
    if abs(quintic(xi)) > root_tolerance(quintic, xi):
        raise NotAFixedPointError(f"not certified as fixed point: P5({xi!r}) = {quintic(xi)!r}")
    fp = _fixed_point(op, xi, multiplicity)
    if not fp.certified:
        raise NotAFixedPointError(f"not certified as fixed point: residual {fp.residual!r}")
    return fp


def positive_roots(quintic: Quintic, tol: float = 1e-13) -> RootSet:
    """Oracle: all distinct positive roots of the ratio quintic."""
    return isolate_real_roots(quintic.poly, (0.0, cauchy_bound(quintic.poly)), tol)


def _bisect(f, lo: float, hi: float, tol: float = 1e-14) -> float:
    flo = f(lo) > 0
    while hi - lo > tol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        fm = f(mid)
        if fm == 0:
            return mid
        if (fm > 0) == flo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def closed_form_roots(quintic: Quintic, cls: Classification, ext) -> list[Root]:
    """Positive roots located from the monotonicity skeleton alone."""
    if cls.regime == Regime.THEOREM_1:
        hi = cauchy_bound(quintic.poly)
        x = _bisect(quintic, 0.0, hi)
        return [Root(x, 1, (x, x))]
    tangent, crossings = skeleton_segments(cls.pattern.s)
    pts = [0.0, *ext.lam, cauchy_bound(quintic.poly)]
    out = [Root(pts[i], 2, (pts[i], pts[i])) for i in tangent]
    for i, j in crossings:
        x = _bisect(quintic, pts[i], pts[j])
        out.append(Root(x, 1, (pts[i], pts[j])))
    return sorted(out, key=lambda r: r.value)


def count_fixed_points(
    op: QuarticOperator,
    *,
    zero_band_rtol: float = 1e-9,
    use_oracle: bool = True,
    use_closed_form: bool = True,
) -> AnalysisReport:
    """Full analysis: closed-form classification, oracle count and fixed points."""
    if not (use_oracle or use_closed_form):
        raise ValueError("at least one of the oracle and the closed form must run")
    quintic = build_quintic(op)
    notes: list[str] = []
    res = closedform.resolvent(quintic)
    ext = None
    if use_closed_form:
        try:
            ext = closedform.ferrari_extrema(quintic, res)
        except closedform.ClosedFormError as exc:
            notes.append(str(exc))
        cls = classify(quintic, res, ext, zero_band_rtol)
    else:
        cls = Classification(Regime.ORACLE_ONLY, notes=("closed form disabled",))

    if ext is not None:
        lambdas = list(ext.lam)
    else:
        lambdas = isolate_real_roots(quintic.derivative()).values

    closed = cls.regime in (Regime.THEOREM_1, Regime.TABLE_2)
    consistent = True
    roots: Optional[RootSet] = None
    if use_oracle:
        roots = positive_roots(quintic)
        found = list(roots)
        n_fix = len(found)
        if closed and cls.n_fix != n_fix:
            if cls.ambiguous:
                notes.append(f"closed form gave {cls.n_fix}, oracle {n_fix}; boundary-flagged, resolved by oracle")
            else:
                consistent = False
                notes.append(f"inconsistent: closed form {cls.n_fix} vs oracle {n_fix}")
    else:
        if not closed:
            raise closedform.ClosedFormUnavailable(
                "closed form unavailable for this operator (regime ORACLE_ONLY); run with the oracle"
            )
        found = closed_form_roots(quintic, cls, ext)
        n_fix = len(found)

    fixed = [_fixed_point(op, r.value, r.multiplicity) for r in found]
    if not all(fp.certified for fp in fixed):
        consistent = False
        notes.append("a fixed point failed residual certification")

    return AnalysisReport(
        coefficients={"a": list(op.a), "b": list(op.b)},
        mu=list(quintic.mu),
        descartes_bound=descartes_bound(quintic.poly),
        resolvent=res,
        lambdas=lambdas,
        p5_at_lambdas=[quintic(x) for x in lambdas],
        classification=cls,
        fixed_points=fixed,
        method="closed_form" if closed else "oracle_fallback",
        consistent=consistent,
        n_fix=n_fix,
        roots=roots,
        notes=notes,
    )
