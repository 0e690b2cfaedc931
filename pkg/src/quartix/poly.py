"""Real polynomials of low degree: evaluation, Descartes bound, and an exact
root-isolation oracle.

Coefficients are stored in descending order (``coeffs[0]`` is the leading
coefficient).  Root isolation converts the floating-point coefficients to exact
rationals, performs the square-free decomposition and the Sturm-sequence
bookkeeping in exact integer arithmetic, and only refines the already isolated roots
in floating point.  The result is certified for the polynomial *as given*.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

TRIM_RTOL = 1e-14
MAX_DEGREE = 8


class DegeneratePolynomialError(ValueError):
    pass


def _trim(coeffs: Sequence[float]) -> tuple[float, ...]:
    c = [float(x) for x in coeffs]
    if not c:
        return (0.0,)
    cmax = max(abs(x) for x in c)
    thresh = TRIM_RTOL * cmax
    i = 0
    while i < len(c) - 1 and abs(c[i]) <= thresh:
        i += 1
    return tuple(c[i:])


@dataclass(frozen=True)
class Poly:
    """Polynomial with real coefficients in descending degree order."""

    coeffs: tuple[float, ...]

    def __init__(self, coeffs: Iterable[float]):
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: float) -> float:
        return eval_poly(self, x)

    def derivative(self) -> "Poly":
        return derivative(self)

    def scale(self, x: float) -> float:
        """Magnitude used for relative tolerances at ``x``."""
        return sum(abs(c) for c in self.coeffs) * max(1.0, abs(x)) ** self.degree

    def __len__(self) -> int:
        return len(self.coeffs)


def as_poly(p) -> Poly:
    return p if isinstance(p, Poly) else Poly(p)


def eval_poly(p, x: float) -> float:
    """Horner evaluation."""
    acc = 0.0
    for c in as_poly(p).coeffs:
        acc = acc * x + c
    return acc


def derivative(p) -> Poly:
    p = as_poly(p)
    n = p.degree
    if n == 0:
        return Poly([0.0])
    return Poly([c * (n - i) for i, c in enumerate(p.coeffs[:-1])])


def descartes_bound(p) -> int:
    """Number of sign changes in the coefficient sequence, zeros skipped."""
    signs = [c > 0 for c in as_poly(p).coeffs if c != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def cauchy_bound(p) -> float:
    """All real roots lie in ``(-B, B)``."""
    c = as_poly(p).coeffs
    return 1.0 + max(abs(x) for x in c[1:]) / abs(c[0]) if len(c) > 1 else 1.0


# ---------------------------------------------------------------------------
# exact helpers: integer polynomials (descending lists of ints)
#
# Every float is a dyadic rational, so the input is an integer polynomial up to
# a positive factor.  Remainders carry positive multipliers only, which keeps
# the signs that the Sturm sequence and the bracket checks rely on.


def _zstrip(c: list[int]) -> list[int]:
    i = 0
    while i < len(c) - 1 and c[i] == 0:
        i += 1
    return c[i:]


def _zeval(c: Sequence[int], x: Fraction) -> int:
    """``den^deg * c(num / den)``: same sign as ``c(x)``."""
    n, d = x.numerator, x.denominator
    acc = 0
    dk = 1
    for a in c:
        acc = acc * n + a * dk
        dk *= d
    return acc


def _zderiv(c: Sequence[int]) -> list[int]:
    n = len(c) - 1
    if n == 0:
        return [0]
    return [a * (n - i) for i, a in enumerate(c[:-1])]


def _primitive(c: Sequence[int]) -> list[int]:
    g = 0
    for a in c:
        g = gcd(g, a)
    return [a // g for a in c] if g > 1 else list(c)


def _zprem(num: Sequence[int], den: Sequence[int], steps: int | None = None):
    """``|lc(den)|^steps * num = quot * den + rem``.

    ``steps`` defaults to ``deg num - deg den + 1``; a larger value pads
    ``num`` so that several divisions by ``den`` share one multiplier.
    """
    den = _zstrip(list(den))
    if den == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    if steps is None:
        steps = max(len(num) - len(den) + 1, 0)
    num = [0] * (len(den) + steps - 1 - len(num)) + list(num)
    lead = den[0]
    lead_abs, sgn = abs(lead), (1 if lead > 0 else -1)
    quot: list[int] = []
    for i in range(steps):
        t = num[i]
        quot = [q * lead_abs for q in quot] + [sgn * t]
        num = [a * lead_abs for a in num]
        if t:
            for j, d in enumerate(den):
                num[i + j] -= sgn * t * d
    rem = num[steps:] or [0]
    return quot or [0], _zstrip(rem)


def _zdiv_exact(num: Sequence[int], den: Sequence[int], steps: int) -> list[int]:
    q, r = _zprem(num, den, steps)
    if r != [0]:
        raise ArithmeticError("inexact polynomial division")
    return q


def _zgcd(f: Sequence[int], g: Sequence[int]) -> list[int]:
    f, g = _primitive(_zstrip(list(f))), _primitive(_zstrip(list(g)))
    while g != [0]:
        _, r = _zprem(f, g)
        f, g = g, _primitive(r)
    return f if f[0] > 0 else [-a for a in f]


def _zmul(f: Sequence[int], g: Sequence[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] += x * y
    return out


def square_free_decomposition(p) -> list[tuple[Poly, int]]:
    """Yun's algorithm, in exact arithmetic.

    Returns ``[(factor, multiplicity), ...]`` with monic square-free, pairwise
    coprime factors of positive degree.  The product of ``factor**multiplicity``
    times the leading coefficient reproduces ``p``.
    """
    exact = _to_exact(as_poly(p))
    return [(Poly([a / f[0] for a in f]), m) for f, m in _yun(exact)]


def _yun(c: list[int]) -> list[tuple[list[int], int]]:
    out: list[tuple[list[int], int]] = []
    if len(c) <= 1:
        return out
    d = _zderiv(c)
    a = _zgcd(c, d)
    steps = len(c) - len(a) + 1
    # one shared multiplier keeps cc - b' meaningful
    b, cc = _zdiv_exact(c, a, steps), _zdiv_exact(d, a, steps)
    i = 1
    while len(_zstrip(b)) > 1:
        bd = _zderiv(b)
        dd = [x - y for x, y in zip(_pad(cc, len(bd)), _pad(bd, len(cc)))]
        aa = _zgcd(b, dd)
        if len(aa) > 1:
            out.append((aa, i))
        steps = len(b) - len(aa) + 1
        b, cc = _zdiv_exact(b, aa, steps), _zdiv_exact(dd, aa, steps)
        g = 0
        for v in (*b, *cc):
            g = gcd(g, v)
        if g > 1:
            b, cc = [v // g for v in b], [v // g for v in cc]
        i += 1
    return out


def _pad(c: Sequence[int], n: int) -> list[int]:
    return [0] * (n - len(c)) + list(c)


def _to_exact(p: Poly) -> list[int]:
    q = [Fraction(x) for x in p.coeffs]
    den = 1
    for x in q:
        den = lcm(den, x.denominator)
    return _primitive(_zstrip([int(x * den) for x in q]))


def _sturm_chain(c: list[int]) -> list[list[int]]:
    chain = [c, _primitive(_zderiv(c))]
    while len(chain[-1]) > 1:
        _, r = _zprem(chain[-2], chain[-1])
        if r == [0]:
            break
        chain.append(_primitive([-x for x in r]))
    return chain


def _variations(chain, x: Fraction) -> int:
    signs = [v > 0 for v in (_zeval(c, x) for c in chain) if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


# ---------------------------------------------------------------------------
# root isolation


@dataclass(frozen=True)
class Root:
    value: float
    multiplicity: int
    interval: tuple[float, float]


@dataclass(frozen=True)
class RootSet:
    roots: tuple[Root, ...] = field(default_factory=tuple)

    @property
    def distinct_positive_count(self) -> int:
        return sum(1 for r in self.roots if r.value > 0)

    @property
    def values(self) -> list[float]:
        return [r.value for r in self.roots]

    @property
    def positive(self) -> list[Root]:
        return [r for r in self.roots if r.value > 0]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


_SPLITS = (Fraction(1, 2), Fraction(3, 7), Fraction(4, 7), Fraction(5, 13), Fraction(8, 13))


def _isolate(chain, lo: Fraction, hi: Fraction, max_depth: int = 2000):
    """Intervals (a, b] each containing exactly one root of the square-free
    chain[0] inside the open interval (lo, hi)."""
    sqf = chain[0]
    out = []
    v_lo = _variations(chain, lo)
    v_hi = _variations(chain, hi)
    n = v_lo - v_hi - (1 if _zeval(sqf, hi) == 0 else 0)
    stack = [(lo, hi, v_lo, v_hi, n, 0)] if n > 0 else []
    while stack:
        a, b, va, vb, k, depth = stack.pop()
        if k == 1:
            out.append((a, b))
            continue
        if depth > max_depth:
            raise RuntimeError("root isolation did not separate roots")
        for s in _SPLITS:
            m = a + (b - a) * s
            if _zeval(sqf, m) != 0:
                break
        vm = _variations(chain, m)
        left = va - vm
        right = k - left
        if left:
            stack.append((a, m, va, vm, left, depth + 1))
        if right:
            stack.append((m, b, vm, vb, right, depth + 1))
    return sorted(out)


def _refine(fpoly: Poly, exact, a: Fraction, b: Fraction, tol: float):
    """Shrink the bracket of a simple root of ``exact`` to width <= tol."""
    sa = _zeval(exact, a)
    sb = _zeval(exact, b)
    if sb == 0:
        x = float(b)
        return x, (x, x)
    lo, hi = float(a), float(b)
    flo = sa > 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = fpoly(mid)
        if fm == 0:
            lo = hi = mid
            break
        if (fm > 0) == flo:
            lo = mid
        else:
            hi = mid
    # float signs are unreliable right at the root; confirm the bracket exactly
    qlo, qhi = Fraction(lo), Fraction(hi)
    if lo != hi:
        vlo, vhi = _zeval(exact, qlo), _zeval(exact, qhi)
        if vlo == 0:
            return lo, (lo, lo)
        if vhi == 0:
            return hi, (hi, hi)
        if (vlo > 0) == (vhi > 0):
            # widen back towards the certified exact bracket
            w = max(hi - lo, tol)
            while True:
                qlo = max(a, qlo - Fraction(w))
                qhi = min(b, qhi + Fraction(w))
                vlo, vhi = _zeval(exact, qlo), _zeval(exact, qhi)
                if (vlo > 0) != (vhi > 0) or vlo == 0 or vhi == 0:
                    break
                w *= 2
            lo, hi = float(qlo), float(qhi)
    elif _zeval(exact, qlo) != 0:
        # landed on a float whose exact value is not a root; keep a tiny bracket
        lo, hi = np.nextafter(lo, -np.inf), np.nextafter(hi, np.inf)
    return 0.5 * (lo + hi), (lo, hi)


def isolate_real_roots(p, interval: tuple[float, float] | None = None, tol: float = 1e-12) -> RootSet:
    """All distinct real roots of ``p`` in the open ``interval``.

    Each root carries its multiplicity (from the exact square-free
    decomposition) and an isolating interval of width at most ``tol`` (or a
    degenerate interval when the root is hit exactly).  With ``interval=None``
    the whole real line is searched via the Cauchy bound.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not isinstance(p, Poly):
        raw = [float(x) for x in p]
        while raw and raw[0] == 0.0:
            raw = raw[1:]
        if not raw:
            raise DegeneratePolynomialError("degenerate polynomial: all coefficients vanish")
        if abs(raw[0]) <= TRIM_RTOL * max(abs(x) for x in raw):
            raise DegeneratePolynomialError("degenerate polynomial: leading coefficient below trim tolerance")
        p = Poly(raw)
    if p.degree > MAX_DEGREE:
        raise ValueError(f"degree {p.degree} exceeds supported maximum {MAX_DEGREE}")
    if p.degree == 0:
        if p.coeffs[0] == 0:
            raise DegeneratePolynomialError("degenerate polynomial: zero polynomial")
        return RootSet(())
    if interval is None:
        B = cauchy_bound(p)
        interval = (-B, B)
    lo, hi = interval
    if not lo < hi:
        raise ValueError("interval must satisfy lo < hi")

    exact = _to_exact(p)
    factors = _yun(exact)
    sqf = [1]
    for f, _ in factors:
        sqf = _zmul(sqf, f)
    chain = _sturm_chain(sqf)
    fsqf = Poly([a / sqf[0] for a in sqf])
    qlo, qhi = Fraction(lo), Fraction(hi)
    if _zeval(sqf, qlo) == 0:
        # open interval: step off a root sitting on the left endpoint
        step = (qhi - qlo) / 2
        while _variations(chain, qlo) - _variations(chain, qlo + step) > 0 or _zeval(sqf, qlo + step) == 0:
            step /= 2
        qlo += step
    if _zeval(sqf, qhi) == 0:
        step = (qhi - qlo) / 2
        while _variations(chain, qhi - step) - _variations(chain, qhi) > 1 or _zeval(sqf, qhi - step) == 0:
            step /= 2
        qhi -= step

    roots = []
    for a, b in _isolate(chain, qlo, qhi):
        value, box = _refine(fsqf, sqf, a, b, tol)
        mult = _multiplicity(factors, a, b)
        roots.append(Root(value, mult, box))
    return RootSet(tuple(roots))


def _multiplicity(factors, a: Fraction, b: Fraction) -> int:
    for f, m in factors:
        fb = _zeval(f, b)
        if fb == 0:
            return m
        fa = _zeval(f, a)
        # each factor is square-free and the bracket holds one root overall
        if fa != 0 and (fa > 0) != (fb > 0):
            return m
    raise RuntimeError("isolated root not attributed to any square-free factor")


def count_real_roots(p, interval: tuple[float, float]) -> int:
    """Exact number of distinct real roots in the open interval."""
    return len(isolate_real_roots(p, interval))


@dataclass(frozen=True)
class Quintic:
    """The ratio polynomial ``mu0 x^5 + mu1 x^4 + mu2 x^3 + mu3 x^2 + mu4 x - mu5``.

    ``mu`` holds ``(mu0, ..., mu5)``; note the sign convention on the constant
    term, which makes ``mu5 > 0`` for every operator with positive coefficients.
    """

    mu: tuple[float, float, float, float, float, float]

    def __init__(self, mu: Iterable[float]):
        mu = tuple(float(m) for m in mu)
        if len(mu) != 6:
            raise ValueError("a quintic needs exactly six coefficients mu0..mu5")
        object.__setattr__(self, "mu", mu)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[float]) -> "Quintic":
        c = list(coeffs)
        return cls(c[:5] + [-c[5]])

    @property
    def coeffs(self) -> tuple[float, ...]:
        return self.mu[:5] + (-self.mu[5],)

    @property
    def poly(self) -> Poly:
        return Poly(self.coeffs)

    def __call__(self, x: float) -> float:
        return eval_poly(self.poly, x)

    def derivative(self) -> Poly:
        return derivative(self.poly)

    def scale(self, x: float) -> float:
        return sum(abs(m) for m in self.mu) * max(1.0, abs(x)) ** 5
