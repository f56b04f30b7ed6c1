"""Enumerated polynomial families against the printed golden values and
against each other."""

import pytest

from eulerian_gamma.errors import MismatchAgainstDirect, NotExpandable
from eulerian_gamma.families import (
    alternating_inv_poly,
    basic_eulerian,
    basic_eulerian_desrix,
    cda_free_derangement_cyc_table,
    cyc_gamma,
    dd_free_ascent_inv_table,
    dd_free_inv_table,
    derangement_cyc_poly,
    gamma_basic,
    gamma_derangement,
    gamma_poly,
    gamma_tilde_poly,
    sw3_gamma,
)
from eulerian_gamma.mpoly import MPoly, ONE

t = MPoly.var("t")
r = MPoly.var("r")
q = MPoly.var("q")
y = MPoly.var("y")
b = MPoly.var("b")


def test_basic_eulerian_small():
    assert basic_eulerian(0) == ONE
    assert basic_eulerian(1) == r
    assert basic_eulerian(2) == r**2 + t
    # 123 -> r^3; 312 -> t; 231 -> t^2; 213/132/321 -> tr, trq, trq^2
    assert basic_eulerian(3) == r**3 + t + t**2 + t * r * (ONE + q + q**2)


def test_golden_a4_at_r_one():
    golden = (ONE + t) ** 3 + (
        2 * q + 3 * q**2 + 2 * q**3 + q**4
    ) * t * (ONE + t)
    assert basic_eulerian(4).substitute("r", 1) == golden


def test_golden_a4_at_r_zero():
    golden = t * (ONE + t) ** 2 + (q + 2 * q**2 + q**3 + q**4) * t**2
    assert basic_eulerian(4).substitute("r", 0) == golden


def test_triple_equidistribution():
    for n in range(0, 7):
        assert basic_eulerian(n) == basic_eulerian_desrix(n)


def test_golden_gamma_polys():
    assert gamma_poly(0) == ONE
    assert gamma_poly(1) == ONE
    assert gamma_poly(2) == ONE
    assert gamma_poly(3) == ONE + y * (q + q**2)
    assert gamma_poly(4) == ONE + y * (q + q**2) * (2 + q + q**2)
    assert gamma_poly(5) == (
        ONE
        + y * (3 * q + 5 * q**2 + 5 * q**3 + 5 * q**4 + 2 * q**5 + 2 * q**6)
        + y**2 * (q + q**3) * (ONE + q + q**2 + q**3) * (q + q**2)
    )


def test_golden_gamma_tilde_polys():
    assert gamma_tilde_poly(0) == ONE
    assert gamma_tilde_poly(1) == MPoly.zero()
    assert gamma_tilde_poly(2) == y
    assert gamma_tilde_poly(3) == y
    assert gamma_tilde_poly(4) == y + y**2 * (q + 2 * q**2 + q**3 + q**4)
    assert gamma_tilde_poly(5) == y + y**2 * (
        2 * q + 4 * q**2 + 4 * q**3 + 4 * q**4 + 2 * q**5 + 2 * q**6
    )


def test_gamma_basic_table():
    expansion = gamma_basic(4)
    assert expansion.center == 3
    assert expansion.gammas[0] == ONE
    assert expansion.gammas[1] == 2 * q + 3 * q**2 + 2 * q**3 + q**4
    # agrees with the direct family table
    assert dd_free_inv_table(4)[1] == expansion.gammas[1]


def test_gamma_derangement_table():
    expansion = gamma_derangement(5)
    assert expansion.center == 5
    assert expansion.gammas[0].is_zero()
    assert expansion.gammas[1] == ONE
    assert expansion.gammas[2] == (
        2 * q + 4 * q**2 + 4 * q**3 + 4 * q**4 + 2 * q**5 + 2 * q**6
    )
    assert dd_free_ascent_inv_table(5) == {
        1: expansion.gammas[1],
        2: expansion.gammas[2],
    }


def test_cyc_gamma_table():
    expansion = cyc_gamma(4)
    assert expansion.gammas[1] == b
    assert expansion.gammas[2] == 2 * b + 3 * b**2
    assert cda_free_derangement_cyc_table(4)[2] == 2 * b + 3 * b**2


def test_derangement_cyc_poly_specializes():
    for n in range(1, 7):
        assert derangement_cyc_poly(n).substitute("b", 1) == basic_eulerian(
            n
        ).substitute("r", 0).substitute("q", 1)


def test_sw3_gamma_nonnegative_and_specializes():
    for n in range(1, 7):
        expansion = sw3_gamma(n)
        assert expansion.center == n
        direct = dd_free_ascent_inv_table(n)
        for k, g in enumerate(expansion.gammas):
            assert g.coefficients_nonnegative()
            assert g.substitute("p", 1) == direct.get(k, MPoly.zero())
        if n >= 2:
            assert expansion.gammas[0].is_zero()


def test_alternating_counts():
    # up-down counts (tangent/secant numbers): 1, 1, 2, 5, 16, 61 for n=1..6
    sizes = [
        alternating_inv_poly(n).substitute("q", 1) for n in range(1, 7)
    ]
    assert sizes == [ONE, ONE, MPoly.const(2), MPoly.const(5),
                     MPoly.const(16), MPoly.const(61)]


def test_extraction_cross_check_raises_on_corruption():
    from eulerian_gamma.families import _compare_expansion
    from eulerian_gamma.mpoly import GammaExpansion

    fake = GammaExpansion(center=3, gammas=(ONE, ONE))
    with pytest.raises(MismatchAgainstDirect):
        _compare_expansion(fake, {0: ONE, 1: 2 * q}, "fake")


def test_gamma_extraction_rejects_wrong_center():
    from eulerian_gamma.mpoly import gamma_extract

    with pytest.raises(NotExpandable):
        gamma_extract(basic_eulerian(4).substitute("r", 1), center=4)
