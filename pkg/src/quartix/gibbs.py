"""Translation-invariant Gibbs measures for a degenerate-kernel model on the
Cayley tree of order four.

The kernel is ``K(t, u) = phi1(t) psi1(u) + phi2(t) psi2(u)``, i.e. the potential
``xi(t, u) = ln(K(t, u)) / (J beta)``.  A fixed point ``(x, y)`` of the quartic
operator with coefficients

    a_i = int_0^1 psi1 phi1^(4-i) phi2^i du,    b_i = int_0^1 psi2 phi1^(4-i) phi2^i du

gives the Hammerstein fixed function ``g = x phi1 + y phi2`` (``H4 g = g``) and
the normalised solution ``f = (g / g(0))^4`` of ``R4 f = f``.  Both identities
are checked numerically rather than assumed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .operator import FixedPoint, QuarticOperator, count_fixed_points
from .report import AnalysisReport

K_ORDER = 4
VALIDATION_POINTS = 1001
CERT_RTOL = 1e-9


class InvalidPotentialError(ValueError):
    pass


class QuadratureError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Potential:
    """A function on [0, 1]: polynomial (descending coefficients) or samples.

    Samples are ``(t, value)`` pairs, linearly interpolated.
    """

    coeffs: Optional[tuple[float, ...]] = None
    samples: Optional[tuple[tuple[float, float], ...]] = None

    def __post_init__(self):
        if (self.coeffs is None) == (self.samples is None):
            raise InvalidPotentialError("a potential is either polynomial coefficients or samples")

    @classmethod
    def poly(cls, coeffs: Sequence[float]) -> "Potential":
        c = tuple(float(x) for x in coeffs)
        if not c:
            raise InvalidPotentialError("empty coefficient list")
        return cls(coeffs=c)

    @classmethod
    def tabulated(cls, samples: Sequence[Sequence[float]]) -> "Potential":
        s = tuple(sorted((float(t), float(v)) for t, v in samples))
        if len(s) < 2 or s[0][0] > 0 or s[-1][0] < 1:
            raise InvalidPotentialError("samples must cover [0, 1] with at least two points")
        return cls(samples=s)

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs is not None else None

    def __call__(self, t):
        if self.coeffs is not None:
            return np.polyval(self.coeffs, t)
        ts, vs = zip(*self.samples)
        return np.interp(t, ts, vs)

    def as_json(self):
        return list(self.coeffs) if self.coeffs is not None else {"samples": [list(s) for s in self.samples]}


def _as_potential(p) -> Potential:
    if isinstance(p, Potential):
        return p
    if isinstance(p, dict) and "samples" in p:
        return Potential.tabulated(p["samples"])
    return Potential.poly(p)


@dataclass(frozen=True)
class PotentialSet:
    phi1: Potential
    phi2: Potential
    psi1: Potential
    psi2: Potential
    J: float = 1.0
    beta: float = 1.0

    def __init__(self, phi1, phi2, psi1, psi2, J: float = 1.0, beta: float = 1.0):
        for name, value in (("phi1", phi1), ("phi2", phi2), ("psi1", psi1), ("psi2", psi2)):
            object.__setattr__(self, name, _as_potential(value))
        object.__setattr__(self, "J", float(J))
        object.__setattr__(self, "beta", float(beta))
        if self.J == 0 or not math.isfinite(self.J):
            raise InvalidPotentialError("J must be a nonzero real")
        if not self.beta > 0:
            raise InvalidPotentialError("beta (inverse temperature) must be positive")
        grid = np.linspace(0.0, 1.0, VALIDATION_POINTS)
        for name in ("phi1", "phi2", "psi1", "psi2"):
            v = getattr(self, name)(grid)
            if not np.all(v >= 0) or not np.any(v > 0):
                k = int(np.argmin(v))
                raise InvalidPotentialError(
                    f"invalid potential set: {name}({grid[k]:.3f}) = {v[k]:.6g}; potentials must be positive"
                )
        # the log-potential must be finite: K(t, u) > 0 on the whole square
        K = kernel(self, grid[:, None], grid[None, :])
        if not np.all(K > 0):
            i, j = np.unravel_index(int(np.argmin(K)), K.shape)
            raise InvalidPotentialError(
                f"invalid potential set: kernel K({grid[i]:.3f}, {grid[j]:.3f}) = {K[i, j]:.6g} is not positive"
            )

    @property
    def polynomial(self) -> bool:
        return all(getattr(self, n).coeffs is not None for n in ("phi1", "phi2", "psi1", "psi2"))

    def exactness_degree(self) -> Optional[int]:
        if not self.polynomial:
            return None
        return max(self.psi1.degree, self.psi2.degree) + K_ORDER * max(self.phi1.degree, self.phi2.degree)

    def as_json(self) -> dict:
        return {
            "mode": "gibbs",
            "phi1": self.phi1.as_json(),
            "phi2": self.phi2.as_json(),
            "psi1": self.psi1.as_json(),
            "psi2": self.psi2.as_json(),
            "J": self.J,
            "beta": self.beta,
        }


@dataclass(frozen=True)
class QuadratureConfig:
    rule: str = "gauss-legendre"
    nodes: int = 16
    refinement: float = 1e-10
    max_doublings: int = 14

    def __post_init__(self):
        if self.rule not in ("gauss-legendre", "simpson"):
            raise ValueError(f"unknown quadrature rule {self.rule!r}")
        if self.nodes < 8:
            raise ValueError("quadrature needs at least 8 nodes/panels")
        if not self.refinement > 0:
            raise ValueError("refinement threshold must be positive")


def _rule(rule: str, n: int) -> tuple[np.ndarray, np.ndarray]:
    if rule == "gauss-legendre":
        x, w = np.polynomial.legendre.leggauss(n)
        return 0.5 * (x + 1.0), 0.5 * w
    n += n % 2
    x = np.linspace(0.0, 1.0, n + 1)
    w = np.full(n + 1, 2.0)
    w[1:-1:2] = 4.0
    w[0] = w[-1] = 1.0
    return x, w / (3.0 * n)


def integrate(f: Callable[[np.ndarray], np.ndarray], quad: QuadratureConfig, start: Optional[int] = None) -> np.ndarray:
    """Integrate ``f(u)`` over [0, 1] (values along axis 0), doubling the rule
    until every component changes by at most ``quad.refinement`` relative."""
    n = max(quad.nodes, start or 0)
    x, w = _rule(quad.rule, n)
    prev = np.tensordot(w, f(x), axes=(0, 0))
    for _ in range(quad.max_doublings):
        n *= 2
        x, w = _rule(quad.rule, n)
        cur = np.tensordot(w, f(x), axes=(0, 0))
        if np.all(np.abs(cur - prev) <= quad.refinement * np.maximum(np.abs(cur), 1e-300)):
            return cur
        prev = cur
    raise QuadratureError(f"quadrature did not converge; last two estimates {prev!r} and {cur!r}")


def _start_nodes(pot: PotentialSet, quad: QuadratureConfig) -> Optional[int]:
    deg = pot.exactness_degree()
    if deg is None or quad.rule != "gauss-legendre":
        return None
    return deg // 2 + 1


def compute_coefficients(pot: PotentialSet, quad: QuadratureConfig = QuadratureConfig()) -> QuarticOperator:
    def integrand(u):
        p1, p2 = pot.phi1(u), pot.phi2(u)
        powers = np.stack([p1 ** (K_ORDER - i) * p2**i for i in range(K_ORDER + 1)], axis=1)
        return np.concatenate([pot.psi1(u)[:, None] * powers, pot.psi2(u)[:, None] * powers], axis=1)

    vals = integrate(integrand, quad, _start_nodes(pot, quad))
    if not np.all(vals > 0):
        raise InvalidPotentialError("invalid potential set: a coefficient integral is not positive")
    return QuarticOperator(vals[:5], vals[5:])


def kernel(pot: PotentialSet, t, u, diagnostic: bool = False):
    """``K(t, u) = exp(J beta xi(t, u))``.

    The exp/log composition cancels; ``diagnostic=True`` evaluates it literally.
    """
    s = pot.phi1(t) * pot.psi1(u) + pot.phi2(t) * pot.psi2(u)
    if not diagnostic:
        return s
    if np.any(np.asarray(s) <= 0):
        raise InvalidPotentialError("invalid potential set: logarithm of a non-positive kernel value")
    jb = pot.J * pot.beta
    xi = np.log(s) / jb
    return np.exp(jb * xi)


@dataclass(frozen=True)
class HammersteinCertificate:
    fixed_point: FixedPoint
    t: np.ndarray = field(repr=False)
    g: np.ndarray = field(repr=False)
    f: np.ndarray = field(repr=False)
    residual_H: float
    residual_R: float
    roundtrip: float
    certified: bool

    @property
    def fixed_function_samples(self) -> list[tuple[float, float]]:
        return list(zip(self.t.tolist(), self.g.tolist()))

    @property
    def f0(self) -> float:
        return float(self.f[0])

    def as_dict(self, samples: bool = False) -> dict:
        d = {
            "xi": self.fixed_point.xi,
            "x": self.fixed_point.x,
            "y": self.fixed_point.y,
            "residual_H": self.residual_H,
            "residual_R": self.residual_R,
            "roundtrip": self.roundtrip,
            "f0": self.f0,
            "certified": self.certified,
        }
        if samples:
            d["samples"] = [[t, g] for t, g in self.fixed_function_samples]
        return d


def certify_hammerstein(
    pot: PotentialSet,
    fp: FixedPoint,
    quad: QuadratureConfig = QuadratureConfig(),
    grid: int = 101,
    tol: float = CERT_RTOL,
) -> HammersteinCertificate:
    t = np.linspace(0.0, 1.0, grid)
    x, y = fp.x, fp.y

    def g_of(u):
        return x * pot.phi1(u) + y * pot.phi2(u)

    g = g_of(t)
    g0 = float(g_of(0.0))
    start = _start_nodes(pot, quad)

    # (H4 g)(t) with the kernel evaluated as a function of both variables
    Hg = integrate(lambda u: kernel(pot, t[None, :], u[:, None]) * g_of(u)[:, None] ** K_ORDER, quad, start)
    residual_H = float(np.max(np.abs(Hg - g)))

    def f_of(u):
        return (g_of(u) / g0) ** K_ORDER

    f = f_of(t)
    num = integrate(lambda u: kernel(pot, t[None, :], u[:, None]) * f_of(u)[:, None], quad, start)
    Rf = (num / num[0]) ** K_ORDER
    residual_R = float(np.max(np.abs(Rf - f)))

    # back to g from f: g = f^(1/k) / (int K(0,u) f(u) du)^(1/(k-1))
    g_back = f ** (1.0 / K_ORDER) / num[0] ** (1.0 / (K_ORDER - 1))
    roundtrip = float(np.max(np.abs(g_back - g)))

    ok = residual_H <= tol * max(1.0, float(np.max(g))) and residual_R <= tol * max(1.0, float(np.max(f)))
    return HammersteinCertificate(fp, t, g, f, residual_H, residual_R, roundtrip, bool(ok))


def count_gibbs_measures(
    pot: PotentialSet, quad: QuadratureConfig = QuadratureConfig(), **kwargs
) -> AnalysisReport:
    """Number of translation-invariant Gibbs measures, with one certificate each."""
    op = compute_coefficients(pot, quad)
    report = count_fixed_points(op, **kwargs)
    certs = [certify_hammerstein(pot, fp, quad) for fp in report.fixed_points]
    report.gibbs = certs
    report.input = {**pot.as_json(), "quadrature": {"rule": quad.rule, "nodes": quad.nodes, "refinement": quad.refinement}}
    if not all(c.certified for c in certs):
        report.consistent = False
        report.notes.append("a Hammerstein fixed function failed certification")
    return report
