import numpy as np
import pytest

from conftest import random_potential_sets

from quartix.gibbs import (
    InvalidPotentialError,
    Potential,
    PotentialSet,
    QuadratureConfig,
    QuadratureError,
    certify_hammerstein,
    compute_coefficients,
    count_gibbs_measures,
    integrate,
    kernel,
)

ONES = PotentialSet([1], [1], [1], [1])
MONOMIAL = PotentialSet([1], [1, 0], [1], [2, 0])  # phi2 = u, psi2 = 2u


def test_all_ones_coefficients():
    op = compute_coefficients(ONES)
    assert op.a == pytest.approx((1,) * 5, rel=1e-14)
    assert op.b == pytest.approx((1,) * 5, rel=1e-14)


@pytest.mark.parametrize("rule", ["gauss-legendre", "simpson"])
def test_monomial_coefficients(rule):
    op = compute_coefficients(MONOMIAL, QuadratureConfig(rule=rule))
    tol = 1e-12 if rule == "gauss-legendre" else 1e-9
    assert op.a == pytest.approx([1 / (i + 1) for i in range(5)], rel=tol)
    assert op.b == pytest.approx([2 / (i + 2) for i in range(5)], rel=tol)


def test_all_ones_gibbs():
    rep = count_gibbs_measures(ONES)
    assert rep.n_fix == 1 and rep.consistent
    cert = rep.gibbs[0]
    assert cert.fixed_point.x == pytest.approx(16 ** (-1 / 3), rel=1e-10)
    assert cert.residual_H <= 1e-9 and cert.residual_R <= 1e-9
    assert cert.f0 == 1.0
    assert cert.roundtrip <= 1e-9


def test_monomial_gibbs():
    rep = count_gibbs_measures(MONOMIAL)
    assert rep.consistent and all(c.certified for c in rep.gibbs)
    assert len(rep.gibbs) == rep.n_fix


def test_certification_rejects_non_fixed_point():
    rep = count_gibbs_measures(ONES)
    fp = rep.fixed_points[0]
    from dataclasses import replace

    bad = certify_hammerstein(ONES, replace(fp, x=fp.x * 1.01, y=fp.y * 1.01))
    assert not bad.certified and bad.residual_H > 1e-4


def test_random_potential_sets_certified_count():
    for pot in random_potential_sets(10):
        rep = count_gibbs_measures(pot)
        assert sum(c.certified for c in rep.gibbs) == rep.n_fix


def test_kernel_diagnostic_matches():
    t = np.linspace(0, 1, 7)
    pot = random_potential_sets(1)[0]
    K = kernel(pot, t[:, None], t[None, :])
    Kd = kernel(pot, t[:, None], t[None, :], diagnostic=True)
    np.testing.assert_allclose(K, Kd, rtol=1e-13)


def test_invalid_potentials():
    with pytest.raises(InvalidPotentialError, match="phi1"):
        PotentialSet([-1, 0.5], [1], [1], [1])
    with pytest.raises(InvalidPotentialError, match="kernel"):
        PotentialSet([1, 0], [1, 0], [1], [1])  # K(0, u) = 0
    with pytest.raises(InvalidPotentialError):
        PotentialSet([1], [1], [1], [1], beta=0)
    with pytest.raises(InvalidPotentialError):
        PotentialSet([1], [1], [1], [1], J=0)
    with pytest.raises(InvalidPotentialError):
        Potential.tabulated([(0.2, 1), (1, 1)])


def test_tabulated_potentials():
    s = [(t, 1.0) for t in np.linspace(0, 1, 5)]
    pot = PotentialSet({"samples": s}, {"samples": s}, [1], [1])
    rep = count_gibbs_measures(pot, QuadratureConfig(rule="simpson"))
    assert rep.gibbs[0].fixed_point.x == pytest.approx(16 ** (-1 / 3), rel=1e-10)


def test_quadrature_refinement_and_failure():
    q = QuadratureConfig(rule="simpson", nodes=8)
    assert integrate(np.exp, q) == pytest.approx(np.e - 1, rel=1e-9)
    with pytest.raises(QuadratureError):
        integrate(lambda u: 1 / np.sqrt(u + 1e-12), QuadratureConfig(rule="simpson", max_doublings=3))
    with pytest.raises(ValueError):
        QuadratureConfig(rule="trapezoid")
    with pytest.raises(ValueError):
        QuadratureConfig(nodes=2)
