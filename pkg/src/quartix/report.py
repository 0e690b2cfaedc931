"""Analysis reports and their deterministic JSON form."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Optional

SCHEMA = "quartix/1"


@dataclass
class AnalysisReport:
    coefficients: dict
    mu: list
    descartes_bound: int
    resolvent: Any
    lambdas: list
    p5_at_lambdas: list
    classification: Any
    fixed_points: list
    method: str
    consistent: bool
    n_fix: int
    roots: Any = None
    notes: list = field(default_factory=list)
    gibbs: Optional[list] = None
    input: Optional[dict] = None

    def to_dict(self) -> dict:
        cls = self.classification
        c = {"regime": cls.regime.value}
        if cls.table_row is not None:
            c["table_row"] = cls.table_row
        if cls.n_fix is not None:
            c["n_fix"] = cls.n_fix
        if cls.lower_bound is not None:
            c["lower_bound"] = cls.lower_bound
        if cls.pattern is not None:
            c["signs"] = str(cls.pattern)
        c["boundary_flags"] = list(cls.boundary_flags)
        if cls.notes:
            c["notes"] = list(cls.notes)
        out = {
            "schema": SCHEMA,
            "input": self.input if self.input is not None else {"mode": "operator", **self.coefficients},
            "coefficients": self.coefficients,
            "mu": self.mu,
            "descartes_bound": self.descartes_bound,
            "resolvent": self.resolvent.as_dict(),
            "lambdas": self.lambdas,
            "p5_at_lambdas": self.p5_at_lambdas,
            "classification": c,
            "n_fix": self.n_fix,
            "table_row": cls.table_row,
            "fixed_points": [fp.as_dict() for fp in self.fixed_points],
            "method": self.method,
            "consistent": self.consistent,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        if self.gibbs is not None:
            out["gibbs"] = [g.as_dict() for g in self.gibbs]
        return out

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def to_text(self) -> str:
        d = self.to_dict()
        c = d["classification"]
        lines = [
            f"mu              = {', '.join(_fmt(m) for m in d['mu'])}",
            f"descartes bound = {d['descartes_bound']}",
            "resolvent       = " + ", ".join(f"{k}={_fmt(v)}" for k, v in d["resolvent"].items()),
            f"lambdas         = {', '.join(_fmt(v) for v in d['lambdas'])}",
            f"P5(lambdas)     = {', '.join(_fmt(v) for v in d['p5_at_lambdas'])}",
            f"regime          = {c['regime']}" + (f" (table row {c['table_row']})" if "table_row" in c else ""),
            f"method          = {d['method']}",
            f"n_fix           = {d['n_fix']}",
        ]
        for fp in d["fixed_points"]:
            lines.append(
                f"  xi={_fmt(fp['xi'])}  x={_fmt(fp['x'])}  y={_fmt(fp['y'])}"
                f"  residual={fp['residual']:.3e}  multiplicity={fp['multiplicity']}"
            )
        for g in d.get("gibbs", []):
            lines.append(
                f"  measure xi={_fmt(g['xi'])}  residual_H={g['residual_H']:.3e}"
                f"  residual_R={g['residual_R']:.3e}  certified={g['certified']}"
            )
        lines.append(f"consistent      = {d['consistent']}")
        for n in d.get("notes", []):
            lines.append(f"note: {n}")
        return "\n".join(lines) + "\n"


def _fmt(x) -> str:
    if isinstance(x, float):
        if not math.isfinite(x):
            return "null"
        return format(x, ".17g")
    return json.dumps(x)


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with floats written to 17 significant digits, key order preserved."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj)
    if isinstance(obj, float):
        return _fmt(obj)
    return json.dumps(float(obj)) if hasattr(obj, "__float__") else json.dumps(str(obj))
