"""
Graded differential matrices over k[S], their symbolic (face-level) form,
and the checks run on complexes built from them: d^2 = 0, Betti numbers
via tensoring with k, and degreewise homology.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import FaceMismatch, InternalInvariant
from .kunz import b_value, face_signature
from .linalg import QQ, Echelon, kernel
from .ring import Monomial, RingElement, normal_form
from .semigroup import contains


def label_degree(S, label):
    """S-degree of a basis element labeled by a sequence of residues."""
    return sum(S.a(letter) for letter in label)


def label_text(label, m=4):
    if not label:
        return "()"
    sep = "" if m <= 10 else "."
    return sep.join(str(x) for x in label)


@dataclass
class DifferentialMatrix:
    """Sparse matrix of homogeneous elements of k[S] between free modules.

    ``entries[(row, col)]`` maps source basis element ``col`` into target
    basis element ``row``.  Labels are tuples of residues mod m.
    """

    source: tuple
    target: tuple
    source_degrees: tuple
    target_degrees: tuple
    entries: dict
    kind: str = "word"
    _cols: dict = field(default=None, repr=False, compare=False)

    @property
    def shape(self):
        return len(self.target), len(self.source)

    def columns(self):
        if self._cols is None:
            cols = {}
            for (r, c), e in self.entries.items():
                cols.setdefault(c, []).append((r, e))
            for v in cols.values():
                v.sort(key=lambda t: t[0])
            self._cols = cols
        return self._cols

    def column(self, c):
        return self.columns().get(c, [])

    def scalar_columns(self):
        """Column c -> {row: coefficient}; valid because entries are homogeneous."""
        out = {}
        for (r, c), e in self.entries.items():
            out.setdefault(c, {})[r] = e.coefficient()
        return out

    def constant_entries(self):
        return {rc: e.coefficient(0) for rc, e in self.entries.items() if 0 in e.terms}

    def has_unit_entries(self):
        return any(e.is_unit() for e in self.entries.values())

    def check_homogeneous(self):
        for (r, c), e in self.entries.items():
            want = self.source_degrees[c] - self.target_degrees[r]
            if len(e.terms) != 1 or e.degree() != want:
                raise InternalInvariant(
                    "entry (%s, %s) = %s is not homogeneous of degree %d"
                    % (label_text(self.target[r]), label_text(self.source[c]), e, want)
                )
        return True

    def entry(self, row_label, col_label):
        r = self.target.index(tuple(row_label))
        c = self.source.index(tuple(col_label))
        return self.entries.get((r, c), RingElement())

    def relabeled(self, unit, m):
        f = lambda lab: tuple((unit * x) % m for x in lab)
        return DifferentialMatrix(
            tuple(f(l) for l in self.source),
            tuple(f(l) for l in self.target),
            self.source_degrees,
            self.target_degrees,
            dict(self.entries),
            self.kind,
        )


def build_matrix(S, source, target, columns, kind="word"):
    """Assemble a DifferentialMatrix from per-column dicts target label -> RingElement."""
    tindex = {lab: i for i, lab in enumerate(target)}
    entries = {}
    for c, col in enumerate(columns):
        for lab, el in col.items():
            if el:
                entries[(tindex[lab], c)] = el
    M = DifferentialMatrix(
        tuple(source),
        tuple(target),
        tuple(label_degree(S, l) for l in source),
        tuple(label_degree(S, l) for l in target),
        entries,
        kind,
    )
    M.check_homogeneous()
    return M


def compose(A, B):
    """The matrix of A o B (B is applied first); returns dict (row, col) -> RingElement."""
    if tuple(B.target) != tuple(A.source):
        raise ValueError("matrices are not composable")
    acols = A.columns()
    out = {}
    for c, col in B.columns().items():
        acc = {}
        for k, e1 in col:
            for r, e2 in acols.get(k, ()):
                prod = e1 * e2
                prev = acc.get(r)
                acc[r] = prod if prev is None else prev + prod
        for r, v in acc.items():
            if v:
                out[(r, c)] = v
    return out


def is_complex(matrices):
    """True iff consecutive products vanish: matrices[k-1] o matrices[k] == 0."""
    for A, B in zip(matrices, matrices[1:]):
        if compose(A, B):
            return False
    return True


def _restricted_rank(M, n, S, field, scal=None):
    """Rank of the degree-n strand of M (columns whose shift n - deg lies in S)."""
    if scal is None:
        scal = M.scalar_columns()
    ech = Echelon(field)
    for c, deg in enumerate(M.source_degrees):
        if contains(S, n - deg):
            col = scal.get(c)
            if col:
                ech.insert({r: field(x) for r, x in col.items()})
    return ech.rank


def homology_dims(matrices, S, d, N, field=QQ):
    """dim H_d in each S-degree n <= N of the complex with matrices[k-1] = d_k.

    Needs d_d and d_{d+1}; returns {n: dim} for every n in 0..N.
    """
    Md, Mup = matrices[d - 1], matrices[d]
    sd, su = Md.scalar_columns(), Mup.scalar_columns()
    out = {}
    for n in range(N + 1):
        cols = sum(1 for deg in Md.source_degrees if contains(S, n - deg))
        if cols == 0:
            out[n] = 0
            continue
        ker = cols - _restricted_rank(Md, n, S, field, sd)
        out[n] = ker - _restricted_rank(Mup, n, S, field, su)
    return out


def cokernel_dims(first, S, N, field=QQ):
    """dim of R/image(d_1) in each S-degree n <= N."""
    sc = first.scalar_columns()
    return {
        n: (1 if contains(S, n) else 0) - _restricted_rank(first, n, S, field, sc)
        for n in range(N + 1)
    }


def constant_rank(M, field=QQ):
    ech = Echelon(field)
    cols = {}
    for (r, c), x in M.constant_entries().items():
        cols.setdefault(c, {})[r] = field(x)
    for col in cols.values():
        ech.insert(col)
    return ech.rank


def betti_of_complex(matrices, field=QQ):
    """Betti numbers beta_0..beta_D of a resolution of k given d_1..d_{D+1}."""
    ranks = [len(matrices[0].target)] + [len(M.source) for M in matrices]
    cr = [0] + [constant_rank(M, field) for M in matrices] + [0]
    return tuple(ranks[d] - cr[d] - cr[d + 1] for d in range(len(matrices)))


# -- symbolic matrices ------------------------------------------------------


@dataclass(frozen=True)
class SymbolicTerm:
    """coeff * x^x * y^(sum of b symbols + const)."""

    coeff: object
    x: tuple
    b: tuple
    const: int

    def y_exponent(self, S):
        return sum(k * b_value(S, i, j) for (i, j), k in self.b) + self.const


def b_symbols(pairs):
    """Canonical tuple ((i, j), multiplicity) from an iterable of pairs."""
    counts = {}
    for i, j in pairs:
        key = (min(i, j), max(i, j))
        counts[key] = counts.get(key, 0) + 1
    return tuple(sorted(counts.items()))


@dataclass
class SymbolicMatrix:
    m: int
    source: tuple
    target: tuple
    entries: dict
    kind: str = "word"

    @property
    def shape(self):
        return len(self.target), len(self.source)

    def entry(self, row_label, col_label):
        r = self.target.index(tuple(row_label))
        c = self.source.index(tuple(col_label))
        return self.entries.get((r, c), ())


def substitute(M, S):
    """Specialize a symbolic matrix at the b values of S."""
    m = S.multiplicity
    if m != M.m:
        raise FaceMismatch("matrix is for multiplicity %d, semigroup has %d" % (M.m, m))
    sdeg = tuple(label_degree(S, l) for l in M.source)
    tdeg = tuple(label_degree(S, l) for l in M.target)
    entries = {}
    for (r, c), terms in M.entries.items():
        poly = []
        want = sdeg[c] - tdeg[r]
        for t in terms:
            e = t.y_exponent(S)
            if e < 0:
                raise FaceMismatch("negative y exponent at (%d, %d)" % (r, c))
            mon = Monomial((e,) + tuple(t.x))
            poly.append((t.coeff, mon))
        el = normal_form(poly, S)
        if el and (len(el.terms) != 1 or el.degree() != want):
            raise FaceMismatch(
                "entry (%s, %s) specializes to %s, expected degree %d"
                % (label_text(M.target[r], m), label_text(M.source[c], m), el, want)
            )
        if el:
            entries[(r, c)] = el
    return DifferentialMatrix(tuple(M.source), tuple(M.target), sdeg, tdeg, entries, M.kind)


class FaceCoordinates:
    """Affine forms in the Apéry coordinates, compared on the face of S.

    A form is a tuple (const, c_1, ..., c_{m-1}) meaning const + sum c_i a_i.
    Two forms agree on the face when their constants agree and their linear
    parts agree on the span cut out by the tight Kunz equalities.
    """

    def __init__(self, S):
        self.S = S
        m = self.m = S.multiplicity
        self.tight = sorted(face_signature(S).tight_pairs)
        cols = []
        for k in range(1, m):
            col = {}
            for e, (i, j) in enumerate(self.tight):
                v = (k == i) + (k == j) - (k == (i + j) % m)
                if v:
                    col[e] = v
            cols.append(col)
        self.basis = [
            tuple(Fraction(z.get(k, 0)) for k in range(m - 1))
            for z in (
                {k: QQ.to_python(v) for k, v in dep.items()} for dep in kernel(cols)
            )
        ]
        self.candidates = [
            (i, j)
            for i in range(1, m)
            for j in range(i, m)
            if (i, j) not in set(self.tight)
        ]

    def apery_form(self, r):
        v = [Fraction(0)] * self.m
        if r % self.m == 0:
            v[0] += self.m
        else:
            v[r % self.m] += 1
        return v

    def label_form(self, label):
        v = [Fraction(0)] * self.m
        for letter in label:
            for k, x in enumerate(self.apery_form(letter)):
                v[k] += x
        return v

    def b_form(self, i, j):
        a, b, c = self.apery_form(i), self.apery_form(j), self.apery_form(i + j)
        return [(a[k] + b[k] - c[k]) / self.m for k in range(self.m)]

    def restrict(self, v):
        lin = v[1:]
        return tuple(sum(l * z for l, z in zip(lin, bz)) for bz in self.basis)

    def express(self, form, max_symbols=4):
        """Write ``form`` as sum of b symbols plus a constant >= 0 on the face."""
        target = self.restrict(form)
        cands = [(p, self.b_form(*p)) for p in self.candidates]
        rest = {p: self.restrict(f) for p, f in cands}
        consts = {p: f[0] for p, f in cands}
        for size in range(max_symbols + 1):
            best = None
            for combo in combinations_with_replacement([p for p, _ in cands], size):
                lin = [Fraction(0)] * len(target)
                const = form[0]
                for p in combo:
                    for k, x in enumerate(rest[p]):
                        lin[k] += x
                    const -= consts[p]
                if tuple(lin) != target or const.denominator != 1 or const < 0:
                    continue
                key = (const, combo)
                if best is None or key < best:
                    best = key
            if best is not None:
                return b_symbols(best[1]), int(best[0])
        raise InternalInvariant("no b-expression found for exponent form %s" % (form,))


def residue_factorization(S, r):
    """Exponents of x_1..x_{m-1} of the face-canonical monomial of class r."""
    m = S.multiplicity
    tight = face_signature(S).tight_pairs
    exps = [0] * (m - 1)

    def rec(res):
        if res == 0:
            return
        for i in range(1, m):
            j = (res - i) % m
            if j and (min(i, j), max(i, j)) in tight:
                rec(i)
                rec(j)
                return
        exps[res - 1] += 1

    rec(r % m)
    return tuple(exps)


def symbolize(M, S, coords=None):
    """Face-level symbolic form of a concrete matrix built for S.

    Each entry c*t^k is written as c * (canonical x-monomial of class k mod m)
    * y^(b-expression), the exponent being fixed by homogeneity.
    """
    m = S.multiplicity
    coords = coords or FaceCoordinates(S)
    # relabeled views map a degree to the class of their own letters
    cls = getattr(S, "cls", None) or (lambda n: n % m)
    entries = {}
    for (r, c), el in M.entries.items():
        if len(el.terms) != 1:
            raise InternalInvariant("symbolize expects homogeneous entries")
        k = el.degree()
        x = residue_factorization(S, cls(k))
        form = [
            (a - b) for a, b in zip(coords.label_form(M.source[c]), coords.label_form(M.target[r]))
        ]
        for i, e in enumerate(x, start=1):
            form[i] -= e
        form = [v / m for v in form]
        b, const = coords.express(form)
        term = SymbolicTerm(el.coefficient(), x, b, const)
        if term.y_exponent(S) * m + sum(e * S.a(i) for i, e in enumerate(x, 1)) != k:
            raise InternalInvariant("symbolic entry does not reproduce degree %d" % k)
        entries[(r, c)] = (term,)
    return SymbolicMatrix(m, tuple(M.source), tuple(M.target), entries, M.kind)


@dataclass
class BettiTable:
    """Betti numbers beta_0..beta_D with the bounds they were computed under.

    ``graded`` optionally maps (i, degree) -> multiplicity; ``grading`` is
    "S" for the semigroup grading and "standard" for gr.
    """

    values: tuple
    steps: int
    degree_bound: object = None
    graded: dict = None
    grading: str = "S"

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)
