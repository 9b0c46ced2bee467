"""
Numerical semigroups: membership, Apéry sets, minimal generators, MED
detection and maximal factorization lengths.
"""

from dataclasses import dataclass, field
from functools import reduce
from math import gcd

from .errors import GcdNotOne


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup given by generators.

    ``apery[i-1]`` is the least element of S congruent to i mod m, for
    i = 1, ..., m-1.  The residue-0 element a_0 is taken to be m.
    """

    generators: tuple
    multiplicity: int
    apery: tuple
    frobenius: int
    minimal_generators: tuple
    _lmax: list = field(default_factory=list, repr=False, compare=False, hash=False)

    @property
    def m(self):
        return self.multiplicity

    def a(self, i):
        """Apéry element of residue class i, with a(0) = m."""
        i %= self.multiplicity
        return self.multiplicity if i == 0 else self.apery[i - 1]

    @property
    def apery_with_zero(self):
        """The tuple (a_0, a_1, ..., a_{m-1}) with a_0 = m."""
        return (self.multiplicity,) + self.apery

    def __contains__(self, n):
        return contains(self, n)

    def __str__(self):
        return "<%s>" % ", ".join(str(g) for g in self.minimal_generators)

    @property
    def embedding_dimension(self):
        return len(self.minimal_generators)


def _round_robin_apery(m, gens):
    # shortest paths over Z_m; each generator g adds edges r -> r+g of weight g
    inf = None
    dist = [inf] * m
    dist[0] = 0
    for g in gens:
        step = g % m
        if step == 0:
            continue
        d = gcd(step, m)
        cycle_len = m // d
        for r in range(d):
            cycle = [(r + k * step) % m for k in range(cycle_len)]
            finite = [k for k, res in enumerate(cycle) if dist[res] is not None]
            if not finite:
                continue
            start = min(finite, key=lambda k: dist[cycle[k]])
            for k in range(cycle_len):
                src = cycle[(start + k) % cycle_len]
                dst = cycle[(start + k + 1) % cycle_len]
                if dist[src] is None:
                    continue
                cand = dist[src] + g
                if dist[dst] is None or cand < dist[dst]:
                    dist[dst] = cand
    return dist


def from_generators(gens):
    """Build the semigroup generated by ``gens`` (deduplicated and sorted)."""
    gens = tuple(sorted(set(int(g) for g in gens)))
    if not gens:
        raise ValueError("at least one generator is required")
    if gens[0] <= 0:
        raise ValueError("generators must be positive integers")
    if reduce(gcd, gens) != 1:
        raise GcdNotOne("gcd of %s is %d, not 1" % (list(gens), reduce(gcd, gens)))
    m = gens[0]
    if m == 1:
        raise ValueError("multiplicity 1 (S = N) has no Apéry resolution")
    dist = _round_robin_apery(m, gens)
    apery = tuple(dist[1:])
    frob = max(apery) - m
    mins = [m]
    for i in range(1, m):
        decomposable = any(
            (apery[j - 1] + apery[(i - j) % m - 1] == apery[i - 1])
            for j in range(1, m)
            if (i - j) % m != 0
        )
        if not decomposable:
            mins.append(apery[i - 1])
    return NumericalSemigroup(
        generators=gens,
        multiplicity=m,
        apery=apery,
        frobenius=frob,
        minimal_generators=tuple(sorted(mins)),
    )


def contains(S, n):
    if n < 0:
        return False
    r = n % S.multiplicity
    return r == 0 or n >= S.apery[r - 1]


def apery_set(S):
    return S.apery


def is_med(S):
    return len(S.minimal_generators) == S.multiplicity


def factorization_lengths(S, N):
    """L_max(n) for n = 0..N as a list (None where n is not in S)."""
    table = S._lmax
    if len(table) <= N:
        if not table:
            table.append(0)
        gens = S.minimal_generators
        for n in range(len(table), N + 1):
            best = None
            for g in gens:
                if g > n:
                    break
                prev = table[n - g]
                if prev is not None and (best is None or prev + 1 > best):
                    best = prev + 1
            table.append(best)
    return table[: N + 1]


def max_factorization_length(S, n):
    """Largest number of minimal generators summing to n (None if n not in S)."""
    if n < 0:
        return None
    return factorization_lengths(S, n)[n]
