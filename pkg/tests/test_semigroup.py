import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nsres.errors import GcdNotOne
from nsres.semigroup import (
    apery_set,
    contains,
    factorization_lengths,
    from_generators,
    is_med,
    max_factorization_length,
)


def brute_members(gens, bound):
    seen = {0}
    for n in range(1, bound + 1):
        if any(n - g in seen for g in gens if g <= n):
            seen.add(n)
    return seen


def brute_lmax(gens, n):
    best = [None] * (n + 1)
    best[0] = 0
    for k in range(1, n + 1):
        opts = [best[k - g] + 1 for g in gens if g <= k and best[k - g] is not None]
        best[k] = max(opts) if opts else None
    return best[n]


gens_strategy = st.lists(st.integers(2, 40), min_size=1, max_size=5).filter(
    lambda g: __import__("math").gcd(*g) == 1
)


def test_apery_fixtures():
    assert from_generators((4, 5, 7)).apery == (5, 10, 7)
    assert from_generators((4, 13, 31)).apery == (13, 26, 31)
    assert apery_set(from_generators((5, 6, 19))) == (6, 12, 18, 19)
    assert apery_set(from_generators((2, 3))) == (3,)


def test_gcd_not_one():
    with pytest.raises(GcdNotOne):
        from_generators((2, 4))


def test_bad_generators():
    with pytest.raises(ValueError):
        from_generators(())
    with pytest.raises(ValueError):
        from_generators((0, 3))
    with pytest.raises(ValueError):
        from_generators((1, 3))


def test_contains_fixtures():
    S = from_generators((4, 5, 7))
    assert contains(S, 9) and not contains(S, 6) and contains(S, 0)
    assert 9 in S and -4 not in S


def test_med_fixtures():
    assert is_med(from_generators((4, 5, 6, 7)))
    assert not is_med(from_generators((4, 5, 7)))
    assert is_med(from_generators((2, 3)))


def test_minimal_generators_and_frobenius():
    S = from_generators((4, 5, 7, 10, 12))
    assert S.minimal_generators == (4, 5, 7)
    assert S.frobenius == 6
    assert S.embedding_dimension == 3


def test_lmax_fixtures():
    S = from_generators((5, 6, 19))
    assert max_factorization_length(S, 24) == 4
    assert max_factorization_length(S, 19) == 1
    assert max_factorization_length(S, 25) == 5
    assert max_factorization_length(S, 7) is None
    assert factorization_lengths(S, 6) == [0, None, None, None, None, 1, 1]


@settings(max_examples=80, deadline=None)
@given(gens_strategy)
def test_apery_matches_brute_force(gens):
    S = from_generators(gens)
    m = S.multiplicity
    bound = m * max(gens) + max(gens)
    members = brute_members(gens, bound)
    for i in range(1, m):
        assert S.a(i) == min(n for n in members if n % m == i)
    for n in range(bound + 1):
        assert contains(S, n) == (n in members)
    assert S.frobenius == max(n for n in range(bound) if n not in members)


@settings(max_examples=40, deadline=None)
@given(gens_strategy, st.integers(0, 120))
def test_lmax_matches_brute_force(gens, n):
    S = from_generators(gens)
    assert max_factorization_length(S, n) == brute_lmax(S.minimal_generators, n)
