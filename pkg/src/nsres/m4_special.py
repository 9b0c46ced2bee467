"""
Minimal resolutions of k over k[S] for multiplicity 4.

Up to the unit action i -> 3i on Z_4, a semigroup of multiplicity 4 lies in
the interior of C_4, on the ray a_2 = 2a_1, a_3 = 3a_1, on the facet
a_3 = a_1 + a_2 (complete intersection), or on the facet a_2 = 2a_1.
Constructions work in the representative's letters through a relabeled
view of S; output labels are mapped back to the true residues, keeping the
representative's row and column order.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .apery_resolution import _terms
from .errors import NotMultiplicityFour, ReductionFailure, WrongFace
from .kunz import b_value, face_signature
from .matrices import (
    SymbolicMatrix,
    SymbolicTerm,
    build_matrix,
    label_degree,
    symbolize,
)
from .ring import RingElement

INTERIOR, RAY, CI_FACET, NONCI_FACET = "Interior", "Ray", "CIFacet", "NonCIFacet"

_SIGNATURES = {
    frozenset(): INTERIOR,
    frozenset({(1, 1), (1, 2)}): RAY,
    frozenset({(1, 2)}): CI_FACET,
    frozenset({(1, 1)}): NONCI_FACET,
}


@dataclass(frozen=True)
class FaceClassM4:
    tag: str
    unit: int


def classify_face_m4(S):
    if S.multiplicity != 4:
        raise NotMultiplicityFour("multiplicity is %d, not 4" % S.multiplicity)
    sig = face_signature(S)
    for u in (1, 3):
        tag = _SIGNATURES.get(sig.relabel(u).tight_pairs)
        if tag is not None:
            return FaceClassM4(tag, u)
    raise WrongFace("signature %s is not a face of C_4 containing semigroups" % sorted(sig))


class RelabeledView:
    """S seen through the letter map i -> u*i: view.a(i) = S.a(u*i).

    Only the Apéry data is exposed (enough for b values, degrees and face
    computations); membership queries must go to the real semigroup.
    """

    def __init__(self, S, unit):
        self.S = S
        self.unit = unit
        self.multiplicity = S.multiplicity
        self.apery = tuple(S.a(unit * i) for i in range(1, S.multiplicity))

    @property
    def m(self):
        return self.multiplicity

    def a(self, i):
        return self.S.a(self.unit * i)

    def cls(self, n):
        """Residue class of degree n in the representative's letters."""
        return (self.unit * n) % self.multiplicity


def _view(S, allowed, name):
    fc = classify_face_m4(S)
    if fc.tag not in allowed:
        raise WrongFace("%s needs a semigroup on %s, got %s" % (name, " or ".join(allowed), fc.tag))
    return RelabeledView(S, fc.unit)


def _finish(M, view):
    return M if view.unit == 1 else M.relabeled(view.unit, 4)


def relabel_symbolic(M, unit):
    """Map letters, x indices and b symbols of a symbolic matrix by i -> unit*i."""
    if unit == 1:
        return M
    m = M.m
    f = lambda i: (unit * i) % m

    def term(t):
        x = [0] * (m - 1)
        for i, e in enumerate(t.x, start=1):
            x[f(i) - 1] += e
        b = {}
        for (i, j), k in t.b:
            key = tuple(sorted((f(i), f(j))))
            b[key] = b.get(key, 0) + k
        return SymbolicTerm(t.coeff, tuple(x), tuple(sorted(b.items())), t.const)

    return SymbolicMatrix(
        m,
        tuple(tuple(f(x) for x in lab) for lab in M.source),
        tuple(tuple(f(x) for x in lab) for lab in M.target),
        {rc: tuple(term(t) for t in ts) for rc, ts in M.entries.items()},
        M.kind,
    )


# -- ray ----------------------------------------------------------------------


def ray_words(d):
    """(A_d, B_d): 0 followed by 1,3,1,... and 1,3,1,3,... (length d)."""
    if d == 0:
        return ((),)
    alt = tuple(1 if k % 2 == 0 else 3 for k in range(d))
    return ((0,) + alt[: d - 1], alt)


def _ray_matrix(view, d):
    b13 = b_value(view, 1, 3)
    a1 = view.a(1)
    mono = RingElement.monomial
    src, tgt = ray_words(d), ray_words(d - 1)
    if d == 1:
        cols = [{(): mono(4)}, {(): mono(a1)}]
    elif d % 2 == 0:
        cols = [
            {tgt[0]: mono(a1), tgt[1]: mono(4, -1)},
            {tgt[0]: mono(4 * b13, -1), tgt[1]: mono(3 * a1)},
        ]
    else:
        cols = [
            {tgt[0]: mono(3 * a1), tgt[1]: mono(4)},
            {tgt[0]: mono(4 * b13), tgt[1]: mono(a1)},
        ]
    return build_matrix(view, src, tgt, cols, kind="ray")


def ray_resolution(S, D):
    """[d_1, ..., d_D] for a semigroup <4, a_1> on the ray (period 2 from d = 2)."""
    view = _view(S, (RAY,), "ray_resolution")
    return [_finish(_ray_matrix(view, d), view) for d in range(1, D + 1)]


# -- complete intersection facet ------------------------------------------------


@lru_cache(maxsize=None)
def ci_basis(d):
    """Multisets over {0,1,2} of size d with at most one 0, as sorted tuples."""
    out = []
    for c0 in (0, 1):
        for c1 in range(d - c0 + 1):
            c2 = d - c0 - c1
            out.append((0,) * c0 + (1,) * c1 + (2,) * c2)
    return tuple(sorted(out))


def _ms(c):
    return tuple(sorted(c))


def _minus(c, *letters):
    c = list(c)
    for x in letters:
        if x not in c:
            return None
        c.remove(x)
    return c


def _ci_column(view, c):
    """d(e'_c) as {target: RingElement} in the representative's letters."""
    d = len(c)
    b11, b22 = b_value(view, 1, 1), b_value(view, 2, 2)
    a1, a2 = view.a(1), view.a(2)
    mono = RingElement.monomial
    sign_y = (-1) ** (d - 1)
    even = c.count(2) % 2 == 0
    col = {}

    def add(target, el):
        if target is None:
            return
        key = _ms(target)
        if key.count(0) > 1:
            return
        col[key] = col[key] + el if key in col else el

    add(_minus(c, 2), mono(a2))
    add(_minus(c, 1), mono(a1, 1 if even else -1))
    if even:
        t = _minus(c, 1, 1)
        add(None if t is None else t + [2], mono(4 * b11, -1))
    add(_minus(c, 0), mono(4, sign_y))
    t = _minus(c, 2, 2)
    add(None if t is None else t + [0], mono(4 * b22, sign_y))
    return col


def _ci_matrix(view, d):
    src, tgt = ci_basis(d), ci_basis(d - 1)
    return build_matrix(view, src, tgt, [_ci_column(view, c) for c in src], kind="multiset")


def ci_differential(S, d):
    """d_d of the resolution with rank F'_d = 2d + 1 on the facet a_3 = a_1 + a_2."""
    view = _view(S, (CI_FACET, RAY), "ci_differential")
    return _finish(_ci_matrix(view, d), view)


def ci_resolution(S, D):
    return [ci_differential(S, d) for d in range(1, D + 1)]


# -- non-complete-intersection facet --------------------------------------------


def in_language(w):
    """Whether w lies in W_d: first letter in {0,1,3}, then {2,3} after a 1 and {1,3} otherwise."""
    if not w:
        return True
    if w[0] not in (0, 1, 3):
        return False
    for prev, cur in zip(w, w[1:]):
        if cur not in ((2, 3) if prev == 1 else (1, 3)):
            return False
    return True


@lru_cache(maxsize=None)
def language_words(d):
    if d == 0:
        return ((),)
    out = [(x,) for x in (0, 1, 3)]
    for _ in range(d - 1):
        out = [w + (x,) for w in out for x in ((2, 3) if w[-1] == 1 else (1, 3))]
    return tuple(sorted(out))


def _clean(x):
    return int(x) if isinstance(x, Fraction) and x.denominator == 1 else x


def _axpy(target, f, vec):
    for k, v in vec.items():
        x = target.get(k, 0) + f * v
        if x:
            target[k] = x
        else:
            target.pop(k, None)


class NonCIBuilder:
    """Inductive minimization of the Apéry resolution on the facet a_2 = 2a_1.

    Elements of free modules are homogeneous and stored as {word: scalar};
    the coefficient of e_u in an element of degree n is scalar * t^(n - deg u).
    ``p(v)`` is the chain map p_d on the Apéry basis word v and ``column(w)``
    is d'(e'_w) for w in W_d.
    """

    MAX_STEPS = 100000

    def __init__(self, view):
        self.view = view
        self.m = view.multiplicity
        self._p = {(): {(): 1}}
        self._cols = {}

    def deg(self, word):
        return label_degree(self.view, word)

    def apery_column(self, w):
        out = {}
        for t, sign, _, _ in _terms(self.m, w):
            out[t] = out.get(t, 0) + sign
        return {k: v for k, v in out.items() if v}

    def apply_p(self, elem):
        out = {}
        for v, c in elem.items():
            _axpy(out, c, self.p(v))
        return out

    def p(self, v):
        got = self._p.get(v)
        if got is not None:
            return got
        if in_language(v):
            res = {v: 1}
        else:
            res = self.lift(self.apply_p(self.apery_column(v)), self.deg(v), len(v))
        self._p[v] = res
        return res

    def column(self, w):
        got = self._cols.get(w)
        if got is None:
            got = self._cols[w] = self.apply_p(self.apery_column(w))
        return got

    def is_reduced(self, u, n):
        k = self.view.cls(n)
        return k == 0 or (k == 1 and u and u[-1] == 1)

    def _lift_word(self, u, k):
        if k == 3:
            return u + (3,)
        if k == 2:
            return u + ((2,) if u and u[-1] == 1 else (1,))
        return u + (1,)

    def lift(self, g, D, d):
        """The reduced h in F'_d with d'(h) = g, for a cycle g of degree D."""
        g = dict(g)
        h = {}
        priority = {3: 0, 2: 1, 1: 2}
        for _ in range(self.MAX_STEPS):
            pending = []
            for u, c in g.items():
                n = D - self.deg(u)
                if not self.is_reduced(u, n):
                    k = self.view.cls(n)
                    pending.append((priority[k], -n, u, k))
            if not pending:
                break
            _, _, u, k = min(pending)
            w = self._lift_word(u, k)
            col = self.column(w)
            kappa = col.get(u)
            if not kappa:
                raise ReductionFailure("column %s has no e_%s term" % (w, u))
            f = Fraction(g[u]) / kappa
            _axpy(g, -f, col)
            h[w] = _clean(h.get(w, 0) + f)
            if not h[w]:
                del h[w]
        else:
            raise ReductionFailure("reduction did not terminate")
        if g:
            raise ReductionFailure("nonzero reduced remainder %s in degree %d" % (g, D))
        for w in h:
            if not self.is_reduced(w, D - self.deg(w)):
                raise ReductionFailure("lift term e_%s is not reduced" % (w,))
        return {k: _clean(v) for k, v in h.items()}

    def matrix(self, d):
        src, tgt = language_words(d), language_words(d - 1)
        mono = RingElement.monomial
        cols = []
        for w in src:
            D = self.deg(w)
            cols.append({u: mono(D - self.deg(u), c) for u, c in self.column(w).items()})
        return build_matrix(self.view, src, tgt, cols, kind="language")


@lru_cache(maxsize=None)
def _nonci_builder(S):
    return NonCIBuilder(_view(S, (NONCI_FACET, RAY), "nonci_resolution"))


def nonci_resolution(S, D):
    """[d'_1, ..., d'_D] with rank F'_d = 3 * 2^(d-1) on the facet a_2 = 2a_1."""
    B = _nonci_builder(S)
    return [_finish(B.matrix(d), B.view) for d in range(1, D + 1)]


def chain_map(S, word):
    """p_d(e_word) as {W_d word: R-coefficient}, in true residues."""
    B = _nonci_builder(S)
    u = B.view.unit
    src = tuple((u * x) % 4 for x in word)
    D = B.deg(src)
    f = lambda lab: tuple((u * x) % 4 for x in lab)
    return {f(w): RingElement.monomial(D - B.deg(w), c) for w, c in B.p(src).items()}


# -- dispatch -------------------------------------------------------------------


def m4_resolution(S, D):
    """The face's specialized resolution (the ray uses the period-2 complex)."""
    tag = classify_face_m4(S).tag
    if tag == RAY:
        return ray_resolution(S, D)
    if tag == CI_FACET:
        return ci_resolution(S, D)
    if tag == NONCI_FACET:
        return nonci_resolution(S, D)
    raise WrongFace("interior semigroups use the Apéry resolution, which is already minimal")


def symbolic_resolution(S, D, construction=None):
    """Face-level symbolic matrices of a multiplicity-4 construction."""
    fc = classify_face_m4(S)
    construction = construction or {RAY: "ray", CI_FACET: "ci", NONCI_FACET: "nonci"}.get(fc.tag)
    builders = {"ray": ray_resolution, "ci": ci_resolution, "nonci": nonci_resolution}
    if construction not in builders:
        raise WrongFace("no specialized construction for %s" % fc.tag)
    mats = builders[construction](S, D)
    view = RelabeledView(S, fc.unit)
    out = []
    for M in mats:
        rep = M if fc.unit == 1 else M.relabeled(fc.unit, 4)
        out.append(relabel_symbolic(symbolize(rep, view), fc.unit))
    return out


def has_units(matrices):
    return any(M.has_unit_entries() for M in matrices)
