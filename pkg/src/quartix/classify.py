"""Counting positive roots of the ratio quintic from its values at the extrema.

With four real critical points ``l1 < l2 < l3 < l4`` the quintic increases on
``(-inf, l1)``, ``(l2, l3)``, ``(l4, inf)`` and decreases on ``(l1, l2)``,
``(l3, l4)``.  Together with ``P(0) = -mu5 < 0`` and ``P(+inf) = +inf`` the signs
at the critical points determine the number of distinct positive roots.  The
17 condition rows of the sign table are kept as labels.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Optional

from .closedform import ExtremaSet, ResolventData
from .poly import Quintic

ZERO_BAND_RTOL = 1e-9
AMBIGUOUS_FACTOR = 10.0


class Sign(enum.IntEnum):
    NEG = -1
    ZERO = 0
    POS = 1

    def __str__(self) -> str:
        return {-1: "-", 0: "0", 1: "+"}[int(self)]


class Regime(str, enum.Enum):
    THEOREM_1 = "THEOREM_1"
    TABLE_2 = "TABLE_2"
    ORACLE_ONLY = "ORACLE_ONLY"


N, Z, P = Sign.NEG, Sign.ZERO, Sign.POS

# row -> ({extremum index (0-based): required sign}, count)
TABLE_ROWS: dict[int, tuple[dict[int, Sign], int]] = {
    1: ({0: N, 2: N}, 1),
    2: ({0: Z, 2: N}, 2),
    3: ({0: N, 2: Z}, 2),
    4: ({1: P, 3: Z}, 2),
    5: ({1: Z, 3: P}, 2),
    6: ({1: P, 3: Z}, 2),  # same conditions as row 4
    7: ({0: Z, 3: Z}, 3),
    8: ({0: Z, 2: Z}, 3),
    9: ({1: Z, 3: Z}, 3),
    10: ({1: P, 3: N}, 3),
    11: ({0: N, 2: P, 3: N}, 3),
    12: ({0: P, 1: N, 3: P}, 3),
    13: ({0: Z, 2: P, 3: N}, 4),
    14: ({0: P, 2: Z}, 4),
    15: ({1: Z, 3: N}, 4),
    16: ({0: P, 1: N, 3: Z}, 4),
    17: ({0: P, 1: N, 2: P, 3: N}, 5),
}


@dataclass(frozen=True)
class SignPattern:
    s: tuple[Sign, Sign, Sign, Sign]
    values: tuple[float, float, float, float]
    bands: tuple[float, float, float, float]
    boundary_flags: tuple[bool, bool, bool, bool]

    @property
    def ambiguous(self) -> bool:
        return any(self.boundary_flags)

    def __str__(self) -> str:
        return "".join(str(x) for x in self.s)


@dataclass(frozen=True)
class Classification:
    regime: Regime
    n_fix: Optional[int] = None
    lower_bound: Optional[int] = None
    table_row: Optional[int] = None
    pattern: Optional[SignPattern] = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ambiguous(self) -> bool:
        return self.pattern is not None and self.pattern.ambiguous

    @property
    def boundary_flags(self) -> tuple[bool, ...]:
        return self.pattern.boundary_flags if self.pattern is not None else ()


def zero_band(quintic: Quintic, x: float, rtol: float = ZERO_BAND_RTOL) -> float:
    return rtol * sum(abs(m) for m in quintic.mu) * max(1.0, x) ** 5


def sign_pattern(quintic: Quintic, ext: ExtremaSet, rtol: float = ZERO_BAND_RTOL) -> SignPattern:
    values = tuple(quintic(x) for x in ext.lam)
    bands = tuple(zero_band(quintic, x, rtol) for x in ext.lam)
    signs = tuple(Sign.ZERO if abs(v) <= w else (Sign.POS if v > 0 else Sign.NEG) for v, w in zip(values, bands))
    # a ZERO call is itself uncertain unless the value is exactly zero
    flags = tuple(0 < abs(v) <= AMBIGUOUS_FACTOR * w for v, w in zip(values, bands))
    return SignPattern(signs, values, bands, flags)


def matching_rows(signs) -> list[int]:
    return [row for row, (cond, _) in TABLE_ROWS.items() if all(signs[i] == s for i, s in cond.items())]


def skeleton_segments(signs) -> tuple[list[int], list[tuple[int, int]]]:
    """Tangency points and sign-change segments on ``(0, inf)``.

    Points are indexed 0 (the origin), 1..4 (the extrema) and 5 (+inf).
    Returns the extremum indices that are roots and the index pairs of
    monotone segments containing exactly one simple root.
    """
    seq = [Sign.NEG, *signs, Sign.POS]
    tangent = [i for i in range(1, 5) if seq[i] == Sign.ZERO]
    crossings = [(i, i + 1) for i in range(5) if seq[i] * seq[i + 1] < 0]
    return tangent, crossings


def skeleton_count(signs) -> int:
    tangent, crossings = skeleton_segments(signs)
    return len(tangent) + len(crossings)


def classify(quintic: Quintic, res: ResolventData, ext: Optional[ExtremaSet], rtol: float = ZERO_BAND_RTOL) -> Classification:
    """Count positive roots from the closed-form extrema, when the theory applies."""
    if not res.three_real or res.z0 is None or not res.z0 > 0 or ext is None:
        return Classification(Regime.ORACLE_ONLY, notes=("requires Q < 0 and z0 > 0",))
    pattern = sign_pattern(quintic, ext, rtol)
    if ext.xi_max < 0:
        # increasing on (xi_max, inf) with P(0) < 0
        return Classification(Regime.THEOREM_1, n_fix=1, pattern=pattern)
    if not ext.xi_min > 0:
        return Classification(Regime.ORACLE_ONLY, pattern=pattern, notes=("origin lies between extrema",))

    s = pattern.s
    notes = []
    # P is strictly monotone between neighbouring extrema, so two adjacent ZEROs
    # only happen when the band swamps clustered extrema: defer to the oracle
    clash = [i for i in range(3) if s[i] == s[i + 1] == Sign.ZERO]
    if clash:
        flags = list(pattern.boundary_flags)
        for i in clash:
            flags[i] = flags[i + 1] = True
        pattern = replace(pattern, boundary_flags=tuple(flags))
        notes.append(f"sign pattern {pattern} has adjacent zeros; unresolvable at this zero band")
    n = skeleton_count(s)
    rows = [] if clash else matching_rows(s)
    if not rows and not clash:
        notes.append(f"sign pattern {pattern} is not listed in the table; count from monotonicity")
    elif len(rows) > 1:
        notes.append(f"pattern matches rows {rows}; labelled with the first")
    for r in rows:
        if TABLE_ROWS[r][1] != n:
            raise AssertionError(f"table row {r} disagrees with the monotonicity count {n}")
    bound = None
    if s[0] == Sign.ZERO or s[3] == Sign.ZERO:
        bound = 2
    if s[0] == Sign.POS and s[3] == Sign.NEG:
        bound = 3
    if pattern.ambiguous and not clash:
        notes.append("extremum value within 10x the zero band; confirm with the oracle")
    return Classification(
        Regime.TABLE_2,
        n_fix=n,
        lower_bound=bound,
        table_row=rows[0] if rows else None,
        pattern=pattern,
        notes=tuple(notes),
    )
