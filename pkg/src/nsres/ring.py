"""
The S-graded polynomial ring Q = k[y, x_1, ..., x_{m-1}] and the semigroup
ring R = Q/I_S = k[S], whose elements are stored in the basis {t^n : n in S}.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import LengthMismatch
from .kunz import b_value
from .semigroup import contains


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


@dataclass(frozen=True)
class Monomial:
    """Exponent vector (e_0, ..., e_{m-1}) with index 0 standing for y."""

    exponents: tuple

    def __mul__(self, other):
        if len(self.exponents) != len(other.exponents):
            raise LengthMismatch("monomials of different lengths")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    @classmethod
    def var(cls, m, i, power=1):
        e = [0] * m
        e[i % m] = power
        return cls(tuple(e))

    @classmethod
    def one(cls, m):
        return cls((0,) * m)

    def latex(self):
        return monomial_latex(self.exponents)


def monomial_latex(exps, names=None):
    """Render x/y notation, e.g. ``x_1x_3`` or ``y^2x_3`` (empty string for 1)."""
    m = len(exps)
    if names is None:
        names = ["y"] + ["x_%d" % i for i in range(1, m)]
    parts = []
    for i in range(m):
        e = exps[i]
        if e == 0:
            continue
        parts.append(names[i] if e == 1 else "%s^%s" % (names[i], e if e < 10 else "{%d}" % e))
    return "".join(parts)


def s_degree(mon, S):
    exps = mon.exponents if isinstance(mon, Monomial) else tuple(mon)
    if len(exps) != S.multiplicity:
        raise LengthMismatch("monomial has %d exponents, expected %d" % (len(exps), S.multiplicity))
    return sum(e * S.a(i) for i, e in enumerate(exps))


class RingElement:
    """Element of k[S]: a finite map n -> coefficient meaning sum c_n t^n."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {n: _clean(c) for n, c in terms.items() if c}

    @classmethod
    def monomial(cls, n, c=1):
        el = cls.__new__(cls)
        el.terms = {n: c} if c else {}
        return el

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, RingElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for n, c in other.terms.items():
            out[n] = out.get(n, 0) + c
        return RingElement(out)

    def __neg__(self):
        el = RingElement.__new__(RingElement)
        el.terms = {n: -c for n, c in self.terms.items()}
        return el

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RingElement):
            return RingElement({n: c * other for n, c in self.terms.items()})
        out = {}
        for n1, c1 in self.terms.items():
            for n2, c2 in other.terms.items():
                out[n1 + n2] = out.get(n1 + n2, 0) + c1 * c2
        return RingElement(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by t^k."""
        el = RingElement.__new__(RingElement)
        el.terms = {n + k: c for n, c in self.terms.items()}
        return el

    def degree(self):
        """The single S-degree of a homogeneous element (None for 0)."""
        if not self.terms:
            return None
        if len(self.terms) != 1:
            raise ValueError("element is not homogeneous")
        return next(iter(self.terms))

    def coefficient(self, n=None):
        if n is None:
            n = self.degree()
        return self.terms.get(n, 0)

    def is_unit(self):
        return len(self.terms) == 1 and 0 in self.terms

    def __repr__(self):
        return "RingElement(%s)" % render_element(self)

    def __str__(self):
        return render_element(self)


def render_element(el):
    """Signed sum of t-powers, highest degree first; '0' for zero."""
    if not el.terms:
        return "0"
    out = []
    for n in sorted(el.terms, reverse=True):
        c = el.terms[n]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = "1" if n == 0 else "t^%d" % n
        if mag != 1:
            body = "%s*%s" % (mag, body) if n else str(mag)
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += " %s %s" % (sign, body)
    return text


def normal_form(poly, S):
    """Image in k[S] of a formal sum ``[(coefficient, Monomial), ...]``."""
    out = {}
    for c, mon in poly:
        n = s_degree(mon, S)
        out[n] = out.get(n, 0) + c
    return RingElement(out)


def toric_generators(S):
    """Binomials x_i x_j - y^{b_ij} x_{i+j} for 1 <= i <= j <= m-1 (x_0 = y).

    Returned as (lhs, rhs) Monomial pairs; both sides have equal S-degree.
    """
    m = S.multiplicity
    out = []
    for i in range(1, m):
        for j in range(i, m):
            lhs = Monomial.var(m, i) * Monomial.var(m, j)
            b = b_value(S, i, j)
            rhs = Monomial.var(m, 0, b) * Monomial.var(m, i + j)
            out.append((lhs, rhs))
    return out


def binomial_latex(pair):
    lhs, rhs = pair
    return "%s - %s" % (lhs.latex() or "1", rhs.latex() or "1")


@lru_cache(maxsize=None)
def monomials_of_degree(degrees, n):
    """All exponent vectors e with sum e_i * degrees[i] == n (degrees positive)."""
    k = len(degrees)
    out = []

    def rec(i, rest, acc):
        if i == k - 1:
            q, r = divmod(rest, degrees[i])
            if r == 0:
                out.append(tuple(acc) + (q,))
            return
        for e in range(rest // degrees[i] + 1):
            acc.append(e)
            rec(i + 1, rest - e * degrees[i], acc)
            acc.pop()

    if n < 0:
        return ()
    rec(0, n, [])
    return tuple(sorted(out))


def variable_degrees(kind, S):
    if kind == "Q":
        return S.apery_with_zero
    if kind == "Qmin":
        return S.minimal_generators
    raise ValueError("unknown polynomial ring kind %r" % kind)


def graded_basis(kind, S, n):
    """Basis of the degree-n piece of R, Q or Qmin.

    For R this is ``[n]`` (meaning t^n) or ``[]``; for Q and Qmin it is the
    list of exponent vectors of S-degree n.
    """
    if n < 0:
        return []
    if kind == "R":
        return [n] if contains(S, n) else []
    return list(monomials_of_degree(variable_degrees(kind, S), n))
