"""Command-line front end.

    quartix analyze CONFIG [--out PATH] [--format json|text] [--tol FLOAT]
                           [--oracle-only | --no-oracle]
    quartix gibbs CONFIG   [same flags] [--dump-samples PATH]

Exit status: 0 on a consistent report, 1 on input errors, 2 when the closed
form and the oracle disagree (or a certificate fails).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import closedform
from .gibbs import InvalidPotentialError, PotentialSet, QuadratureConfig, QuadratureError, count_gibbs_measures
from .operator import QuarticOperator, count_fixed_points
from .report import SCHEMA

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2

OPERATOR_KEYS = {"schema", "mode", "coeff_form", "a", "b", "description"}
GIBBS_KEYS = {"schema", "mode", "phi1", "phi2", "psi1", "psi2", "J", "beta", "quadrature", "description"}


class ConfigError(ValueError):
    pass


def _number(value, field: str) -> float:
    if isinstance(value, bool):
        raise ConfigError(f"field '{field}': expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        try:
            return float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError):
            pass
    raise ConfigError(f"field '{field}': expected a number or a fraction string, got {value!r}")


def _numbers(cfg: dict, field: str, length: int | None = None) -> list[float]:
    if field not in cfg:
        raise ConfigError(f"missing field '{field}'")
    v = cfg[field]
    if not isinstance(v, list):
        raise ConfigError(f"field '{field}': expected a list")
    if length is not None and len(v) != length:
        raise ConfigError(f"field '{field}': expected {length} entries, got {len(v)}")
    return [_number(x, f"{field}[{i}]") for i, x in enumerate(v)]


def _check_keys(cfg: dict, allowed: set[str]) -> None:
    extra = sorted(set(cfg) - allowed)
    if extra:
        raise ConfigError(f"unknown field '{extra[0]}'")
    schema = cfg.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise ConfigError(f"field 'schema': unsupported schema {schema!r} (expected {SCHEMA!r})")


def load_config(path) -> dict:
    try:
        cfg = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    return cfg


def operator_from_config(cfg: dict) -> QuarticOperator:
    if cfg.get("mode", "operator") != "operator":
        raise ConfigError(f"field 'mode': expected 'operator', got {cfg.get('mode')!r}")
    _check_keys(cfg, OPERATOR_KEYS)
    form = cfg.get("coeff_form", "reduced")
    a, b = _numbers(cfg, "a", 5), _numbers(cfg, "b", 5)
    try:
        if form == "reduced":
            return QuarticOperator(a, b)
        if form == "expanded":
            return QuarticOperator.from_expanded(a, b)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    raise ConfigError(f"field 'coeff_form': expected 'reduced' or 'expanded', got {form!r}")


def potentials_from_config(cfg: dict) -> tuple[PotentialSet, QuadratureConfig]:
    if cfg.get("mode") != "gibbs":
        raise ConfigError(f"field 'mode': expected 'gibbs', got {cfg.get('mode')!r}")
    _check_keys(cfg, GIBBS_KEYS)
    funcs = {}
    for name in ("phi1", "phi2", "psi1", "psi2"):
        if name not in cfg:
            raise ConfigError(f"missing field '{name}'")
        v = cfg[name]
        if isinstance(v, dict) and "samples" in v:
            funcs[name] = {"samples": [[_number(t, f"{name}.samples"), _number(y, f"{name}.samples")] for t, y in v["samples"]]}
        else:
            funcs[name] = _numbers(cfg, name)
    J = _number(cfg.get("J", 1.0), "J")
    beta = _number(cfg.get("beta", 1.0), "beta")
    q = cfg.get("quadrature", {})
    if not isinstance(q, dict):
        raise ConfigError("field 'quadrature': expected an object")
    try:
        quad = QuadratureConfig(
            rule=q.get("rule", "gauss-legendre"),
            nodes=int(q.get("nodes", 16)),
            refinement=_number(q.get("refinement", 1e-10), "quadrature.refinement"),
        )
    except ValueError as exc:
        raise ConfigError(f"field 'quadrature': {exc}") from None
    try:
        pot = PotentialSet(funcs["phi1"], funcs["phi2"], funcs["psi1"], funcs["psi2"], J=J, beta=beta)
    except InvalidPotentialError as exc:
        raise ConfigError(str(exc)) from None
    return pot, quad


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quartix", description="Positive fixed points of quartic operators.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, help_ in (("analyze", "count fixed points of an operator"), ("gibbs", "count Gibbs measures of a potential set")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("config")
        p.add_argument("--out", metavar="PATH")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--tol", type=float, help="relative zero band for the extremum signs (default 1e-9)")
        g = p.add_mutually_exclusive_group()
        g.add_argument("--oracle-only", action="store_true", help="skip the closed form")
        g.add_argument("--no-oracle", action="store_true", help="closed form only")
        if name == "gibbs":
            p.add_argument("--dump-samples", metavar="PATH", help="write t g(t) columns per fixed function")
    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    kwargs = {"use_oracle": not args.no_oracle, "use_closed_form": not args.oracle_only}
    if args.tol is not None:
        if not args.tol > 0:
            print("error: --tol must be positive", file=sys.stderr)
            return EXIT_INPUT
        kwargs["zero_band_rtol"] = args.tol
    try:
        cfg = load_config(args.config)
        if args.command == "analyze":
            op = operator_from_config(cfg)
            report = count_fixed_points(op, **kwargs)
            report.input = cfg
        else:
            pot, quad = potentials_from_config(cfg)
            report = count_gibbs_measures(pot, quad, **kwargs)
            report.input = cfg
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InvalidPotentialError, QuadratureError, closedform.ClosedFormError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    text = report.to_json() + "\n" if args.format == "json" else report.to_text()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.command == "gibbs" and args.dump_samples:
        with open(args.dump_samples, "w") as fh:
            for k, cert in enumerate(report.gibbs):
                fh.write(f"# fixed function {k}: xi = {cert.fixed_point.xi:.17g}\n")
                for t, g in cert.fixed_function_samples:
                    fh.write(f"{t:.17g} {g:.17g}\n")
                fh.write("\n\n")
    return EXIT_OK if report.consistent else EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
