import pytest

from conftest import random_semigroups

from nsres.errors import LengthMismatch
from nsres.ring import (
    Monomial,
    RingElement,
    binomial_latex,
    graded_basis,
    monomials_of_degree,
    normal_form,
    s_degree,
    toric_generators,
)
from nsres.semigroup import from_generators as G

S457 = G((4, 5, 7))


def mono(*exps):
    return Monomial(tuple(exps))


def test_s_degree():
    assert s_degree(mono(2, 0, 0, 1), S457) == 15
    assert s_degree(mono(0, 1, 1, 0), S457) == 15
    assert s_degree(mono(0, 0, 0, 0), S457) == 0
    with pytest.raises(LengthMismatch):
        s_degree(mono(1, 1), S457)
    with pytest.raises(LengthMismatch):
        mono(1, 1) * mono(1, 1, 1)


def test_toric_generators_fixtures():
    assert [binomial_latex(p) for p in toric_generators(G((2, 3)))] == ["x_1^2 - y^3"]
    med = toric_generators(G((4, 5, 6, 7)))
    assert len(med) == 6
    assert all(rhs.exponents[0] >= 1 for _, rhs in med)


def test_toric_generators_homogeneous_random():
    for S in random_semigroups(21, 40, 9):
        pairs = toric_generators(S)
        m = S.multiplicity
        assert len(pairs) == m * (m - 1) // 2
        for lhs, rhs in pairs:
            assert s_degree(lhs, S) == s_degree(rhs, S)


def test_normal_form():
    assert not normal_form([(1, mono(0, 2, 0, 0)), (-1, mono(0, 0, 1, 0))], S457)
    el = normal_form([(1, mono(0, 1, 1, 0)), (-1, mono(1, 0, 0, 1))], S457)
    assert el.terms == {15: 1, 11: -1}
    assert str(el) == "t^15 - t^11"
    assert normal_form([], S457).is_zero()


def test_ring_element_arithmetic():
    a = RingElement.monomial(5, 2)
    b = RingElement.monomial(7, -1)
    assert (a * b).terms == {12: -2}
    assert (a + a).terms == {5: 4}
    assert (a - a) == 0
    assert a.shift(3).degree() == 8
    assert RingElement.monomial(0, 1).is_unit()
    assert not a.is_unit()
    assert str(RingElement()) == "0"
    with pytest.raises(ValueError):
        (a + b).degree()


def test_graded_bases():
    assert graded_basis("R", S457, 6) == []
    assert graded_basis("R", S457, 9) == [9]
    got = graded_basis("Q", S457, 10)
    assert sorted(got) == sorted([(0, 2, 0, 0), (0, 0, 1, 0)])
    assert graded_basis("Q", S457, 0) == [(0, 0, 0, 0)]
    assert graded_basis("Qmin", S457, 0) == [(0, 0, 0)]


def test_monomials_of_degree():
    assert monomials_of_degree((1, 1), 2) == ((0, 2), (1, 1), (2, 0))
    assert monomials_of_degree((2, 3), 1) == ()
    assert monomials_of_degree((2, 3), -1) == ()
