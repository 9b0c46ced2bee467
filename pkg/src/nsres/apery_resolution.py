"""
The infinite Apéry resolution of k over k[S].

F_d has basis e_w for words w = (w_1, ..., w_d) over Z_m with w_i != 0 for
i > 1, and

    d(e_w) = x_{w_d} e_{w_1..w_{d-1}}
             + sum_{i<d} (-1)^(d-i) y^(b_{w_i w_{i+1}}) e_{tau_i w},

where tau_i adds letters i and i+1.  Targets with a 0 past the first
position vanish.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .kunz import b_value
from .linalg import QQ
from .matrices import (
    BettiTable,
    SymbolicMatrix,
    SymbolicTerm,
    b_symbols,
    betti_of_complex,
    build_matrix,
    cokernel_dims,
    homology_dims,
    is_complex,
)
from .ring import RingElement


@lru_cache(maxsize=None)
def word_basis(m, d):
    """Words of length d with nonzero letters past the first, in lex order."""
    if d == 0:
        return ((),)
    rest = list(product(range(1, m), repeat=d - 1))
    return tuple((first,) + tail for first in range(m) for tail in rest)


def tau(w, i, m):
    """Merge letters i and i+1 (0-based i); None when the result is not a basis word."""
    merged = (w[i] + w[i + 1]) % m
    if merged == 0 and i > 0:
        return None
    return w[:i] + (merged,) + w[i + 2 :]


def _terms(m, w):
    """Yield (target, sign, kind, data) for each term of d(e_w).

    kind "x" carries the residue of the x variable (0 means y); kind "y"
    carries the pair whose b value is the y exponent.
    """
    d = len(w)
    yield w[:-1], 1, "x", w[-1]
    for i in range(d - 1):
        t = tau(w, i, m)
        if t is not None:
            yield t, (-1) ** (d - 1 - i), "y", (w[i], w[i + 1])


@lru_cache(maxsize=None)
def differential(S, d):
    """The map F_d -> F_{d-1} of the Apéry resolution of S."""
    m = S.multiplicity
    source, target = word_basis(m, d), word_basis(m, d - 1)
    columns = []
    for w in source:
        col = {}
        for t, sign, kind, data in _terms(m, w):
            deg = S.a(data) if kind == "x" else m * b_value(S, *data)
            el = RingElement.monomial(deg, sign)
            col[t] = col[t] + el if t in col else el
        columns.append(col)
    return build_matrix(S, source, target, columns)


def resolution(S, D):
    """[d_1, ..., d_D]."""
    return [differential(S, d) for d in range(1, D + 1)]


@lru_cache(maxsize=None)
def symbolic_differential(m, d):
    source, target = word_basis(m, d), word_basis(m, d - 1)
    tindex = {lab: i for i, lab in enumerate(target)}
    entries = {}
    zero_x = (0,) * (m - 1)
    for c, w in enumerate(source):
        for t, sign, kind, data in _terms(m, w):
            if kind == "x":
                if data == 0:
                    term = SymbolicTerm(sign, zero_x, (), 1)
                else:
                    x = [0] * (m - 1)
                    x[data - 1] = 1
                    term = SymbolicTerm(sign, tuple(x), (), 0)
            elif 0 in data:
                # b_{0j} = 1 for every semigroup
                term = SymbolicTerm(sign, zero_x, (), 1)
            else:
                term = SymbolicTerm(sign, zero_x, b_symbols([data]), 0)
            key = (tindex[t], c)
            entries[key] = entries.get(key, ()) + (term,)
    return SymbolicMatrix(m, source, target, entries)


def check_complex(S, D):
    """Whether d_{d-1} d_d = 0 in R for 2 <= d <= D."""
    return is_complex(resolution(S, D))


def _unit_count_matrix(S, d):
    """Only the unit entries of d_d (those surviving tensoring with k)."""
    m = S.multiplicity
    cols = {}
    tindex = {lab: i for i, lab in enumerate(word_basis(m, d - 1))}
    for c, w in enumerate(word_basis(m, d)):
        for t, sign, kind, data in _terms(m, w):
            if kind == "y" and 0 not in data and b_value(S, *data) == 0:
                r = tindex[t]
                cols.setdefault(c, {})
                cols[c][r] = cols[c].get(r, 0) + sign
    return cols


class _UnitView:
    """Duck-typed stand-in for DifferentialMatrix in betti_of_complex."""

    def __init__(self, S, d):
        m = S.multiplicity
        self.source = word_basis(m, d)
        self.target = word_basis(m, d - 1)
        self._cols = _unit_count_matrix(S, d)

    def constant_entries(self):
        return {(r, c): x for c, col in self._cols.items() for r, x in col.items() if x}


def betti_via_tensor(S, D, field=QQ):
    """beta_0..beta_D of k over R read off the Apéry resolution tensored with k."""
    views = [_UnitView(S, d) for d in range(1, D + 2)]
    values = betti_of_complex(views, field)
    return BettiTable(values, D)


def has_unit_entries(S, d):
    return bool(_unit_count_matrix(S, d))


def default_bound(S, d):
    return (d + 2) * max(S.apery)


@dataclass
class HomologyReport:
    step: int
    degree_bound: int
    dims: dict
    cokernel: dict = None

    @property
    def exact(self):
        if any(self.dims.values()):
            return False
        if self.cokernel is not None:
            return all(v == (1 if n == 0 else 0) for n, v in self.cokernel.items())
        return True

    def nonzero(self):
        return {n: v for n, v in self.dims.items() if v}


def complex_homology(matrices, S, d, N, field=QQ):
    """Homology report for an arbitrary resolution given as [d_1, d_2, ...]."""
    dims = homology_dims(matrices, S, d, N, field)
    coker = cokernel_dims(matrices[0], S, N, field) if d == 1 else None
    return HomologyReport(d, N, dims, coker)


def truncated_homology(S, d, N=None, field=QQ):
    """dim H_d per S-degree n <= N (plus coker d_1 per degree when d = 1)."""
    if N is None:
        N = default_bound(S, d)
    return complex_homology(resolution(S, d + 1), S, d, N, field)
