import numpy as np
import pytest

from quartix import QuarticOperator, Quintic, count_fixed_points, realize_quintic

ACCEPTANCE_LINES: list[str] = []

# Synthesised integer quintics, one per condition row of the sign table.
# Rows with a single zero come from P' = 60 (x-l1)(x-l2)(x-l3)(x-l4) integrated
# with a chosen constant; rows 7-9 need two tangencies and are products of
# linear factors.
TABLE_VECTORS = {
    1: [12, -165, 820, -1830, 1800, -638],
    2: [12, -165, 820, -1830, 1800, -637],
    3: [12, -180, 980, -2340, 2400, -1088],
    4: [12, -165, 820, -1830, 1800, -125],
    5: [12, -180, 980, -2340, 2400, -784],
    6: [12, -165, 820, -1830, 1800, -125],
    7: [1, -12, 53, -106, 96, -32],  # (x-1)^2 (x-2) (x-4)^2
    8: [1, -10, 37, -64, 52, -16],  # (x-1)^2 (x-2)^2 (x-4)
    9: [1, -13, 64, -148, 160, -64],  # (x-1) (x-2)^2 (x-4)^2
    10: [12, -165, 820, -1830, 1800, -354],
    11: [12, -180, 980, -2340, 2400, -1044],
    12: [12, -180, 980, -2340, 2400, -828],
    13: [12, -195, 1120, -2760, 2880, -1057],
    14: [12, -165, 820, -1830, 1800, -621],
    15: [12, -165, 820, -1830, 1800, -584],
    16: [12, -225, 1540, -4590, 5400, -1512],
    17: [12, -165, 820, -1830, 1800, -602],
}
TABLE_COUNTS = {1: 1, 2: 2, 3: 2, 4: 2, 5: 2, 6: 2, 7: 3, 8: 3, 9: 3, 10: 3, 11: 3, 12: 3, 13: 4, 14: 4, 15: 4, 16: 4, 17: 5}

# P' = 60 (x+5)(x+3)(x+2)(x+1): every extremum is negative
THEOREM_1_VECTOR = [12, 165, 820, 1830, 1800, -1]


def random_operators(n=1000, seed=20191):
    rng = np.random.default_rng(seed)
    c = 10 ** rng.uniform(-2, 2, size=(n, 10))
    return [QuarticOperator(row[:5], row[5:]) for row in c]


def random_potential_sets(n=50, seed=11):
    """Polynomial potentials with positive coefficients (so positive on [0, 1])."""
    from quartix.gibbs import PotentialSet

    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        funcs = [list(rng.uniform(0.1, 2.0, size=rng.integers(1, 4))) for _ in range(4)]
        out.append(PotentialSet(*funcs, J=1.0, beta=float(rng.uniform(0.5, 2))))
    return out


def random_table_quintics(n=1000, seed=7):
    """Quintics with four positive extrema and a random constant term."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        lam = np.sort(rng.uniform(0.2, 6.0, size=4))
        if np.min(np.diff(lam)) < 0.05:
            continue
        mu0 = 10 ** rng.uniform(-1, 1)
        dp = 5 * mu0 * np.poly(lam)
        base = np.polyint(dp)  # constant term 0
        vals = np.polyval(base, lam)
        c = rng.uniform(-vals.max() - 1.0, min(-vals.min() + 1.0, 0.0))
        if c >= 0:
            continue
        coeffs = base.copy()
        coeffs[-1] = c
        out.append(Quintic.from_coeffs(coeffs))
    return out


@pytest.fixture(scope="session")
def random_reports():
    ops = random_operators()
    return [count_fixed_points(op) for op in ops]


@pytest.fixture(scope="session")
def table_family_reports():
    return [count_fixed_points(realize_quintic(q.mu)) for q in random_table_quintics()]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
