"""
The associated graded ring gr_m(k[S]) = Q/I* with Q standard graded on one
variable per minimal generator (y for m, x_r for a generator of residue r).

I*_d is the kernel of Q_d -> m^d/m^{d+1}: a monomial of S-degree n goes to
the class of t^n when L_max(n) = d and to 0 when L_max(n) > d.
"""

from dataclasses import dataclass

from .errors import DegreeBoundTooLow, ZeroPolynomial
from .linalg import QQ, Echelon
from .oracle import betti_k_over_gr
from .ring import monomials_of_degree
from .semigroup import factorization_lengths


def variable_names(S):
    m = S.multiplicity
    return ["y" if g == m else "x_%d" % (g % m) for g in S.minimal_generators]


def _priority(S):
    """Variable order for leading terms: x's by residue, then y."""
    m = S.multiplicity
    gens = S.minimal_generators
    return sorted(range(len(gens)), key=lambda i: (gens[i] == m, gens[i] % m))


def monomial_key(S, exps):
    """Lex key under the priority order; larger keys lead."""
    return tuple(exps[i] for i in _priority(S))


def render_monomial(S, exps):
    names = variable_names(S)
    order = sorted(range(len(exps)), key=lambda i: (names[i] != "y", names[i]))
    parts = []
    for i in order:
        e = exps[i]
        if e:
            parts.append(names[i] if e == 1 else "%s^%s" % (names[i], e if e < 10 else "{%d}" % e))
    return "".join(parts) or "1"


def render_poly(S, poly):
    """Leading term first; coefficients printed when not +-1."""
    terms = sorted(poly.items(), key=lambda kv: monomial_key(S, kv[0]), reverse=True)
    out = ""
    for k, (exps, c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = render_monomial(S, exps)
        if mag != 1:
            body = "%s%s" % (mag, body)
        if k == 0:
            out = ("-" if sign == "-" else "") + body
        else:
            out += " %s %s" % (sign, body)
    return out or "0"


def std_degree(exps):
    return sum(exps)


def s_degree(S, exps):
    return sum(e * g for e, g in zip(exps, S.minimal_generators))


def initial_form(poly, S=None):
    """Lowest standard-degree component of {exponents: coefficient}."""
    poly = {tuple(e): c for e, c in dict(poly).items() if c}
    if not poly:
        raise ZeroPolynomial("the zero polynomial has no initial form")
    low = min(std_degree(e) for e in poly)
    return {e: c for e, c in poly.items() if std_degree(e) == low}


@dataclass
class GrPresentation:
    S: object
    degree_bound: int
    names: list
    pieces: dict
    generators: dict

    def all_generators(self):
        return [g for d in sorted(self.generators) for g in self.generators[d]]

    def rendered_generators(self):
        return [render_poly(self.S, g) for g in self.all_generators()]

    def hilbert(self):
        k = len(self.names)
        return [len(monomials_of_degree((1,) * k, d)) - len(self.pieces[d]) for d in sorted(self.pieces)]


def _rref_rows(ech):
    return {p: dict(r) for p, r in ech.rref().items()}


def _full_reduce(vec, rows, p=None):
    v = dict(vec)
    for piv in sorted((c for c in v if c in rows), reverse=True):
        f = v.get(piv)
        if f:
            for k, x in rows[piv].items():
                y = v.get(k, 0) - f * x
                if p is not None:
                    y %= p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return v


def initial_ideal_truncated(S, D, field=QQ):
    """I*_d for d <= D and the minimal generators of I* in those degrees."""
    k = len(S.minimal_generators)
    gens = S.minimal_generators
    L = factorization_lengths(S, D * max(gens))
    pieces, generators = {}, {}
    prev = []
    for d in range(1, D + 1):
        mons = sorted(monomials_of_degree((1,) * k, d), key=lambda e: monomial_key(S, e))
        col = {e: i for i, e in enumerate(mons)}
        basis = []
        by_degree = {}
        for e in mons:
            n = s_degree(S, e)
            if L[n] > d:
                basis.append({e: 1})
            else:
                by_degree.setdefault(n, []).append(e)
        for group in by_degree.values():
            for e in group[1:]:
                basis.append({e: 1, group[0]: -1})
        # canonical basis of the piece
        ech = Echelon(field)
        for b in basis:
            ech.insert({col[e]: field(c) for e, c in b.items()})
        rows = _rref_rows(ech)
        pieces[d] = [_to_poly(rows[p], mons, field) for p in sorted(rows, reverse=True)]

        lower = Echelon(field)
        for b in prev:
            for i in range(k):
                prod = {}
                for e, c in b.items():
                    e2 = list(e)
                    e2[i] += 1
                    prod[col[tuple(e2)]] = field(c)
                lower.insert(prod)
        low_rows = _rref_rows(lower)
        rest = Echelon(field)
        for p in sorted(rows, reverse=True):
            v = _full_reduce(rows[p], low_rows, field.p)
            if v:
                rest.insert(v)
        new = _rref_rows(rest)
        if new:
            generators[d] = [_to_poly(new[p], mons, field) for p in sorted(new, reverse=True)]
        prev = pieces[d]
    return GrPresentation(S, D, variable_names(S), pieces, generators)


def _to_poly(row, mons, field):
    return {mons[i]: field.to_python(c) for i, c in row.items()}


def gr_hilbert(S, D):
    """H(d) = #{n in S : L_max(n) = d} for d = 0..D."""
    L = factorization_lengths(S, max(D, 1) * max(S.minimal_generators))
    H = [0] * (D + 1)
    for l in L:
        if l is not None and l <= D:
            H[l] += 1
    return tuple(H)


@dataclass
class QuadraticReport:
    quadratic: bool
    certificate: list
    degree_bound: int

    def __bool__(self):
        return self.quadratic


def is_quadratic(S, D=6):
    pres = initial_ideal_truncated(S, D)
    bad = [g for d in sorted(pres.generators) if d >= 3 for g in pres.generators[d]]
    return QuadraticReport(not bad, [render_poly(S, g) for g in bad], D)


def betti1_Q_gr(S, D=6):
    """Number of minimal generators of I* in degrees <= D."""
    return len(initial_ideal_truncated(S, D).all_generators())


def gr_betti_k(S, i_max, D, field=QQ, strict=True):
    """beta_{i,j} of k over gr for i <= i_max, j <= D (standard grading)."""
    if D < i_max:
        raise ValueError("degree bound must be at least i_max")
    return betti_k_over_gr(S, i_max, D, field, strict).betti


def nonlinear_entries(table):
    return {(i, j): c for (i, j), c in table.graded.items() if i != j and c}


def koszul_up_to(S, i_max=3, D=6, field=QQ):
    """True iff beta_{i,j} vanishes off the diagonal for i <= i_max, j <= D.

    A bounded certificate only: nothing is claimed beyond the bounds.
    """
    try:
        table = gr_betti_k(S, i_max, D, field, strict=False)
    except DegreeBoundTooLow:
        return False
    return not nonlinear_entries(table)


def default_degree_bound(S):
    return 6
