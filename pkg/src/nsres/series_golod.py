"""
Exact integer power series, Poincaré series of k over k[S], and the Golod
equality P(z) = (1+z)^n / (1 - z^2 P_I(z)) checked through a degree bound.
"""

from dataclasses import dataclass
from math import comb

from .apery_resolution import betti_via_tensor
from .errors import InternalInvariant, MissingPIQ
from .m4_special import CI_FACET, INTERIOR, NONCI_FACET, RAY, classify_face_m4
from .oracle import betti_ideal
from .semigroup import is_med


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_pow(p, k):
    out = [1]
    for _ in range(k):
        out = poly_mul(out, p)
    return out


def poly_sub(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)]


@dataclass(frozen=True)
class TruncatedSeries:
    coefficients: tuple
    bound: int

    def __post_init__(self):
        if len(self.coefficients) != self.bound + 1:
            raise ValueError("series needs bound + 1 coefficients")

    @classmethod
    def polynomial(cls, coeffs, bound=None):
        coeffs = poly_trim(coeffs) or [0]
        bound = len(coeffs) - 1 if bound is None else bound
        padded = (list(coeffs) + [0] * (bound + 1))[: bound + 1]
        return cls(tuple(padded), bound)

    def truncate(self, bound):
        return TruncatedSeries.polynomial(list(self.coefficients), bound)

    def __getitem__(self, i):
        return self.coefficients[i]


@dataclass(frozen=True)
class RationalSeries:
    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        if not self.denominator or self.denominator[0] not in (1, -1):
            raise ValueError("denominator must have constant term +-1")

    def expand(self, bound):
        """Coefficients c_0..c_bound of numerator / denominator."""
        num, den = self.numerator, self.denominator
        out = []
        for k in range(bound + 1):
            acc = num[k] if k < len(num) else 0
            for j in range(1, min(k, len(den) - 1) + 1):
                acc -= den[j] * out[k - j]
            out.append(acc * den[0])
        return TruncatedSeries(tuple(out), bound)


def med_poincare(m):
    """(1 + z) / (1 - (m-1) z)."""
    if m < 2:
        raise ValueError("m must be at least 2")
    return RationalSeries((1, 1), (1, -(m - 1)))


def med_PIQ(m):
    """sum_{i=0}^{m-2} (i+1) C(m, i+2) z^i."""
    if m < 2:
        raise ValueError("m must be at least 2")
    return TruncatedSeries.polynomial([(i + 1) * comb(m, i + 2) for i in range(m - 1)])


def med_identity(m):
    """Both sides of 1 - z^2 P_I(z) = (1+z)^(m-1) (1 - (m-1) z) as coefficient lists."""
    lhs = poly_sub([1], [0, 0] + list(med_PIQ(m).coefficients))
    rhs = poly_mul(poly_pow([1, 1], m - 1), [1, -(m - 1)])
    return poly_trim(lhs), poly_trim(rhs)


def m4_closed_form(tag, d):
    if d == 0:
        return 1
    return {
        INTERIOR: 4 * 3 ** (d - 1),
        RAY: 2,
        CI_FACET: 2 * d + 1,
        NONCI_FACET: 3 * 2 ** (d - 1),
    }[tag]


# rank of F_{d+1} above which closed forms are trusted beyond the cross-check
CROSS_CHECK_WORDS = 20000


def _closed_form(S, D):
    if S.multiplicity == 4:
        tag = classify_face_m4(S).tag
        return tuple(m4_closed_form(tag, d) for d in range(D + 1))
    if is_med(S):
        return med_poincare(S.multiplicity).expand(D).coefficients
    return None


def poincare_truncated(S, D):
    """beta_0..beta_D of k over k[S].

    Where a closed form is known (MED, multiplicity 4) it is used for all
    degrees and checked against the tensored Apéry resolution as far as
    the rank of F_{d+1} stays below CROSS_CHECK_WORDS; otherwise the
    tensored Apéry resolution is computed through D.
    """
    m = S.multiplicity
    closed = _closed_form(S, D)
    if closed is None:
        return TruncatedSeries(tuple(betti_via_tensor(S, D).values), D)
    depth = D
    while depth > 1 and m * (m - 1) ** depth > CROSS_CHECK_WORDS:
        depth -= 1
    values = betti_via_tensor(S, depth).values
    if values != closed[: depth + 1]:
        raise InternalInvariant("Betti numbers %s disagree with the closed form %s" % (values, closed))
    return TruncatedSeries(tuple(closed), D)


def builtin_PIQ(S):
    """Closed-form P_I^Q when one is known (MED, or the m = 4 facet a_2 = 2a_1), else None."""
    if is_med(S):
        return med_PIQ(S.multiplicity)
    if S.multiplicity == 4 and classify_face_m4(S).tag == NONCI_FACET:
        return TruncatedSeries.polynomial([3, 2])
    return None


def oracle_PIQ(S, N=None):
    """P_I^Q from the oracle's minimal resolution of I_S over the minimal-generator ring."""
    n = len(S.minimal_generators)
    top = max(n - 2, 0)
    return TruncatedSeries.polynomial(list(betti_ideal(S, top, N, ring="Qmin").values))


def resolve_PIQ(S, piq=None):
    """P_I^Q from ``piq``: a series, "builtin", "oracle", or None (builtin, falling back to the oracle)."""
    if isinstance(piq, TruncatedSeries):
        return piq, "given"
    if isinstance(piq, (list, tuple)):
        return TruncatedSeries.polynomial(list(piq)), "given"
    if piq in (None, "builtin"):
        got = builtin_PIQ(S)
        if got is not None:
            return got, "builtin"
        if piq == "builtin":
            raise MissingPIQ("no closed form for P_I^Q of %s; supply one or use the oracle" % S)
    if piq in (None, "oracle"):
        return oracle_PIQ(S), "oracle"
    raise MissingPIQ("unknown P_I^Q source %r" % (piq,))


def golod_rhs(n, piq, D):
    """Expansion of (1+z)^n / (1 - z^2 piq) through z^D."""
    den = poly_sub([1], [0, 0] + list(piq.coefficients))
    return RationalSeries(tuple(poly_pow([1, 1], n)), tuple(den)).expand(D)


@dataclass
class GolodReport:
    lhs: tuple
    rhs: tuple
    bound: int
    piq: tuple
    source: str

    @property
    def equal(self):
        return self.lhs == self.rhs

    @property
    def equal_through(self):
        """Largest d with agreement in all degrees <= d (-1 if z^0 differs)."""
        for d, (a, b) in enumerate(zip(self.lhs, self.rhs)):
            if a != b:
                return d - 1
        return self.bound

    def __bool__(self):
        return self.equal


def golod_check(S, D, piq=None):
    """Compare both sides of the Golod equality through z^D (a bounded check)."""
    P, source = resolve_PIQ(S, piq)
    lhs = poincare_truncated(S, D).coefficients
    rhs = golod_rhs(len(S.minimal_generators), P, D).coefficients
    return GolodReport(tuple(lhs), tuple(rhs), D, P.coefficients, source)
