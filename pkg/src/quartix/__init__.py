"""Positive fixed points of quartic operators on the plane."""
from .poly import Poly, Quintic, Root, RootSet, derivative, descartes_bound, eval_poly, isolate_real_roots
from .closedform import ExtremaSet, ResolventData, cardano_real_roots, ferrari_extrema, resolvent
from .classify import Classification, Regime, Sign, SignPattern, classify
from .operator import (
    FixedPoint,
    QuarticOperator,
    apply,
    build_quintic,
    count_fixed_points,
    realize_quintic,
    recover_fixed_point,
)
from .report import AnalysisReport

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "Classification",
    "ExtremaSet",
    "FixedPoint",
    "Poly",
    "QuarticOperator",
    "Quintic",
    "Regime",
    "ResolventData",
    "Root",
    "RootSet",
    "Sign",
    "SignPattern",
    "apply",
    "build_quintic",
    "cardano_real_roots",
    "classify",
    "count_fixed_points",
    "derivative",
    "descartes_bound",
    "eval_poly",
    "ferrari_extrema",
    "isolate_real_roots",
    "realize_quintic",
    "recover_fixed_point",
    "resolvent",
]
