from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_semigroups, scaled_partner

from nsres.kunz import (
    b_matrix,
    b_value,
    face_signature,
    in_cone,
    kunz_poset,
    relabel_pairs,
    same_face,
    to_dot,
)
from nsres.semigroup import from_generators as G


def test_b_values():
    B = b_matrix(G((4, 5, 7)))
    assert (B[1, 1], B[1, 2], B[3, 3], B[1, 3]) == (0, 2, 1, 2)
    assert B[2, 1] == B[1, 2]
    T = b_matrix(G((4, 13, 31)))
    assert (T[1, 1], T[1, 2], T[3, 3], T[1, 3]) == (0, 2, 9, 10)


def test_face_signatures():
    assert face_signature(G((4, 5, 7))).tight_pairs == {(1, 1)}
    assert face_signature(G((4, 5, 6, 7))).tight_pairs == frozenset()
    assert face_signature(G((4, 5, 6))).tight_pairs == {(1, 2)}


def test_kunz_poset_covers():
    assert kunz_poset(G((4, 5, 7))).covers() == [(0, 1), (0, 3), (1, 2)]
    assert kunz_poset(G((4, 5, 6, 7))).covers() == [(0, 1), (0, 2), (0, 3)]
    assert kunz_poset(G((2, 3))).covers() == [(0, 1)]
    assert kunz_poset(G((4, 5, 7))).atoms() == [1, 3]


def test_same_face():
    S = G((4, 5, 7))
    assert same_face(S, G((4, 13, 31)))
    assert not same_face(S, G((4, 5, 6)))
    assert same_face(S, S)
    assert not same_face(S, G((5, 6, 7)))


def test_in_cone():
    assert in_cone((5, 10, 7))
    assert in_cone((5, 6, 7))
    assert not in_cone((6, 10, 7))
    assert not in_cone((5, 14, 3))
    assert not in_cone((9, 2, 7))


def test_relabel_pairs_mirror():
    assert relabel_pairs({(1, 1)}, 3, 4) == {(3, 3)}
    assert face_signature(G((4, 7, 9))).relabel(3).tight_pairs == {(1, 1)}


def test_to_dot():
    dot = to_dot(kunz_poset(G((4, 5, 7))))
    assert dot.startswith("digraph kunz {")
    assert "n1 -> n2;" in dot and "n0 -> n2;" not in dot


def test_apery_points_lie_in_cone():
    for S in random_semigroups(11, 60, 9):
        assert in_cone(S.apery)


def test_scaling_preserves_face():
    for S in random_semigroups(12, 40, 8):
        T = scaled_partner(S)
        assert same_face(S, T)
        assert kunz_poset(S) == kunz_poset(T)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.data())
def test_b_nonnegative_and_poset_matches(m, data):
    gens = [m] + data.draw(st.lists(st.integers(m + 1, 5 * m), min_size=1, max_size=m))
    if __import__("math").gcd(*gens) != 1:
        gens.append(m + 1)
    S = G(gens)
    P = kunz_poset(S)
    for i in range(1, S.m):
        for j in range(1, S.m):
            assert b_value(S, i, j) >= 0
            if i != j and (i + j) % S.m:
                # a_i + a_j = a_{i+j} exactly when i precedes i+j
                assert (b_value(S, i, j) == 0) == P.leq(i, (i + j) % S.m)
