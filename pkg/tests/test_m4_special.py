import pytest

from nsres import apery_resolution as ar
from nsres import m4_special as m4
from nsres.emit import symbolic_entry_latex, word_text
from nsres.errors import NotMultiplicityFour, WrongFace
from nsres.matrices import is_complex
from nsres.ring import RingElement
from nsres.semigroup import from_generators as G

S457 = G((4, 5, 7))
t = RingElement.monomial


def grid(M):
    """Rows of rendered entries ('' for zero) plus source and target labels."""
    rows = [
        [symbolic_entry_latex(M.entries[(r, c)], 4) if (r, c) in M.entries else "" for c in range(len(M.source))]
        for r in range(len(M.target))
    ]
    return [word_text(l) for l in M.source], [word_text(l) for l in M.target], rows


# expected face-level matrices; '' marks a zero entry
RAY = [
    (["0", "1"], ["()"], [["y", "x_1"]]),
    (["01", "13"], ["0", "1"], [["x_1", "-y^{b_{13}}"], ["-y", "x_1^3"]]),
    (["013", "131"], ["01", "13"], [["x_1^3", "y^{b_{13}}"], ["y", "x_1"]]),
]

CI = [
    (["0", "1", "2"], ["()"], [["y", "x_1", "x_2"]]),
    (
        ["01", "02", "11", "12", "22"],
        ["0", "1", "2"],
        [
            ["x_1", "x_2", "", "", "-y^{b_{22}}"],
            ["-y", "", "x_1", "x_2", ""],
            ["", "-y", "-y^{b_{11}}", "-x_1", "x_2"],
        ],
    ),
    (
        ["011", "012", "022", "111", "112", "122", "222"],
        ["01", "02", "11", "12", "22"],
        [
            ["x_1", "x_2", "", "", "", "y^{b_{22}}", ""],
            ["-y^{b_{11}}", "-x_1", "x_2", "", "", "", "y^{b_{22}}"],
            ["y", "", "", "x_1", "x_2", "", ""],
            ["", "y", "", "-y^{b_{11}}", "-x_1", "x_2", ""],
            ["", "", "y", "", "", "x_1", "x_2"],
        ],
    ),
    (
        ["0111", "0112", "0122", "0222", "1111", "1112", "1122", "1222", "2222"],
        ["011", "012", "022", "111", "112", "122", "222"],
        [
            ["x_1", "x_2", "", "", "", "", "-y^{b_{22}}", "", ""],
            ["-y^{b_{11}}", "-x_1", "x_2", "", "", "", "", "-y^{b_{22}}", ""],
            ["", "", "x_1", "x_2", "", "", "", "", "-y^{b_{22}}"],
            ["-y", "", "", "", "x_1", "x_2", "", "", ""],
            ["", "-y", "", "", "-y^{b_{11}}", "-x_1", "x_2", "", ""],
            ["", "", "-y", "", "", "", "x_1", "x_2", ""],
            ["", "", "", "-y", "", "", "-y^{b_{11}}", "-x_1", "x_2"],
        ],
    ),
]

# row 01 / column 033 of d_3 needs the x_1 factor: the entry has degree 2a_3 - a_1
NONCI = [
    (["0", "1", "3"], ["()"], [["y", "x_1", "x_3"]]),
    (
        ["01", "03", "12", "13", "31", "33"],
        ["0", "1", "3"],
        [
            ["x_1", "x_3", "", "-y^{b_{13}}", "-y^{b_{13}}", ""],
            ["-y", "", "x_1^2", "x_3", "", "-x_1y^{b_{33}}"],
            ["", "-y", "-y^{b_{12}}", "", "x_1", "x_3"],
        ],
    ),
    (
        ["012", "013", "031", "033", "121", "123", "131", "133", "312", "313", "331", "333"],
        ["01", "03", "12", "13", "31", "33"],
        [
            ["x_1^2", "x_3", "", "-x_1y^{b_{33}}", "", "", "y^{b_{13}}", "", "x_1y^{b_{13}}", "", "", "-y^{b_{13}+b_{33}}"],
            ["-y^{b_{12}}", "", "x_1", "x_3", "", "", "", "y^{b_{13}}", "", "y^{b_{13}}", "", ""],
            ["y", "", "", "", "x_1", "x_3", "", "-y^{b_{33}}", "", "", "y^{b_{33}}", ""],
            ["", "y", "", "", "-y^{b_{12}}", "", "x_1", "x_3", "", "", "", ""],
            ["", "", "y", "", "y^{b_{12}}", "", "", "", "x_1^2", "x_3", "", "-x_1y^{b_{33}}"],
            ["", "", "", "y", "", "y^{b_{12}}", "", "", "-y^{b_{12}}", "", "x_1", "x_3"],
        ],
    ),
]


def test_classification():
    assert m4.classify_face_m4(S457) == m4.FaceClassM4(m4.NONCI_FACET, 1)
    assert m4.classify_face_m4(G((4, 5, 6))) == m4.FaceClassM4(m4.CI_FACET, 1)
    assert m4.classify_face_m4(G((4, 5))) == m4.FaceClassM4(m4.RAY, 1)
    assert m4.classify_face_m4(G((4, 5, 6, 7))).tag == m4.INTERIOR
    assert m4.classify_face_m4(G((4, 7, 9))) == m4.FaceClassM4(m4.NONCI_FACET, 3)
    with pytest.raises(NotMultiplicityFour):
        m4.classify_face_m4(G((5, 6, 7)))


def test_ray_matrices():
    assert [grid(M) for M in m4.symbolic_resolution(G((4, 5)), 3)] == RAY
    # period two from d = 2 onwards
    later = m4.symbolic_resolution(G((4, 9)), 5)
    assert grid(later[3])[2] == RAY[1][2] and grid(later[4])[2] == RAY[2][2]


def test_ci_matrices():
    assert [grid(M) for M in m4.symbolic_resolution(G((4, 5, 6)), 4)] == CI


def test_nonci_matrices():
    assert [grid(M) for M in m4.symbolic_resolution(S457, 3)] == NONCI


def test_nonci_second_matrix_column_12():
    M = m4.nonci_resolution(S457, 2)[1]
    assert M.entry((1,), (1, 2)) == t(10)
    assert M.entry((3,), (1, 2)) == t(8, -1)


def test_ray_concrete():
    S = G((4, 9))
    d1, d2, d3 = m4.ray_resolution(S, 3)
    assert d2.entry((0,), (1, 3)) == t(32, -1)  # b_13 = 8
    assert d2.entry((1,), (1, 3)) == t(27)
    assert is_complex([d1, d2, d3])


def test_word_sets():
    assert m4.language_words(1) == ((0,), (1,), (3,))
    assert [word_text(w) for w in m4.language_words(2)] == ["01", "03", "12", "13", "31", "33"]
    assert len(m4.language_words(3)) == 12
    for d in range(1, 8):
        assert len(m4.language_words(d)) == 3 * 2 ** (d - 1)
        assert len(m4.ci_basis(d)) == 2 * d + 1
        assert len(m4.ray_words(d)) == 2


def test_minimality_criteria():
    assert not m4.has_units(m4.ci_resolution(G((4, 5, 6)), 4))
    assert not m4.has_units(m4.nonci_resolution(S457, 4))
    # on the ray b_11 = b_12 = 0, so the facet constructions are not minimal there
    ray = G((4, 5))
    assert m4.has_units(m4.ci_resolution(ray, 3))
    assert m4.has_units(m4.nonci_resolution(ray, 3))
    assert is_complex(m4.ci_resolution(ray, 4))
    assert is_complex(m4.nonci_resolution(ray, 4))


def test_wrong_face():
    with pytest.raises(WrongFace):
        m4.m4_resolution(G((4, 5, 6, 7)), 3)
    with pytest.raises(WrongFace):
        m4.ray_resolution(S457, 3)
    with pytest.raises(WrongFace):
        m4.ci_resolution(S457, 3)
    with pytest.raises(WrongFace):
        m4.nonci_resolution(G((4, 5, 6)), 3)


def test_chain_map_values():
    b12, b13 = 2, 2
    assert m4.chain_map(S457, (2,)) == {(1,): t(5)}
    assert m4.chain_map(S457, (1, 1)) == {}
    assert m4.chain_map(S457, (2, 1)) == {(1, 2): t(0)}
    assert m4.chain_map(S457, (2, 3)) == {}
    assert m4.chain_map(S457, (2, 2)) == {(1, 3): t(4 * b12)}
    assert m4.chain_map(S457, (0, 2)) == {(0, 1): t(5)}
    assert m4.chain_map(S457, (3, 2)) == {(3, 1): t(5), (0, 1): t(4 * b13)}


def apply(M, vec):
    out = {}
    for label, coeff in vec.items():
        c = M.source.index(label)
        for r, e in M.column(c):
            key = M.target[r]
            out[key] = out.get(key, RingElement()) + coeff * e
    return {k: v for k, v in out.items() if v}


def p_apply(S, vec):
    """Push a vector on Apéry basis words through the chain map p."""
    out = {}
    for w, coeff in vec.items():
        for v, el in m4.chain_map(S, w).items():
            out[v] = out.get(v, RingElement()) + coeff * el
    return {k: v for k, v in out.items() if v}


def test_both_lifts_of_e32():
    d2 = m4.nonci_resolution(S457, 2)[1]
    target = p_apply(S457, apply(ar.differential(S457, 2), {(3, 2): t(0)}))
    reduced = m4.chain_map(S457, (3, 2))
    other = {(3, 1): t(5), (1, 3): t(5, -1)}
    assert apply(d2, reduced) == target
    assert apply(d2, other) == target
    diff = dict(reduced)
    for k, v in other.items():
        diff[k] = diff.get(k, RingElement()) - v
    assert apply(d2, diff) == {}


@pytest.mark.parametrize("gens", [(4, 5, 7), (4, 7, 9), (4, 13, 31)])
def test_chain_map_commutes(gens):
    S = G(gens)
    for d in (1, 2, 3):
        apery = ar.differential(S, d)
        mini = m4.nonci_resolution(S, d)[d - 1]
        for w in apery.source:
            lhs = apply(mini, m4.chain_map(S, w))
            assert lhs == p_apply(S, apply(apery, {w: t(0)})), (gens, w)


def test_mirror_symbolic():
    rep = m4.symbolic_resolution(S457, 3)
    mirror = m4.symbolic_resolution(G((4, 7, 9)), 3)
    assert mirror == [m4.relabel_symbolic(M, 3) for M in rep]
    assert word_text(mirror[1].source[0]) == "03"


def test_symbolic_face_uniform():
    assert m4.symbolic_resolution(G((4, 9, 14)), 4) == m4.symbolic_resolution(G((4, 5, 6)), 4)
    assert m4.symbolic_resolution(G((4, 13, 31)), 4) == m4.symbolic_resolution(S457, 4)
