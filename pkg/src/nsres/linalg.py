"""
Sparse exact linear algebra over Q or a prime field F_p.

Vectors are dicts ``{column: value}`` with nonzero values and integer
columns.  Elimination keeps a semi-echelon basis where each stored row is
keyed by its largest column (its pivot) and normalized to pivot value 1.
"""

from fractions import Fraction

import gmpy2


class Field:
    """The coefficient field used for rank and kernel computations.

    ``Field()`` is the rationals (gmpy2 ``mpq`` elements); ``Field(p)`` is
    the prime field F_p with elements stored as ints in ``range(p)``.
    """

    def __init__(self, p=None):
        if p is not None:
            p = int(p)
            if p < 2 or not gmpy2.is_prime(p):
                raise ValueError("field characteristic must be prime, got %d" % p)
        self.p = p

    def __repr__(self):
        return "QQ" if self.p is None else "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    @property
    def spec(self):
        return "rat" if self.p is None else "fp:%d" % self.p

    @classmethod
    def parse(cls, text):
        if text in (None, "", "rat", "QQ"):
            return cls()
        if text.startswith("fp:"):
            return cls(int(text[3:]))
        raise ValueError("unknown field %r (expected 'rat' or 'fp:P')" % text)

    def __call__(self, x):
        p = self.p
        if p is None:
            if isinstance(x, Fraction):
                return gmpy2.mpq(x.numerator, x.denominator)
            return gmpy2.mpq(x)
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, p) % p
        if isinstance(x, type(gmpy2.mpq())):
            return int(x.numerator) * pow(int(x.denominator), -1, p) % p
        return int(x) % p

    def inv(self, x):
        if self.p is None:
            return 1 / x
        return pow(x, -1, self.p)

    def to_python(self, x):
        """Convert a field element back to int/Fraction for export."""
        if self.p is not None:
            return int(x)
        if x.denominator == 1:
            return int(x.numerator)
        return Fraction(int(x.numerator), int(x.denominator))


QQ = Field()


def axpy(v, f, row, p=None):
    """In place: v -= f * row."""
    for k, x in row.items():
        y = v.get(k, 0) - f * x
        if p is not None:
            y %= p
        if y:
            v[k] = y
        else:
            v.pop(k, None)


class Echelon:
    """Incrementally maintained semi-echelon basis of a subspace.

    With ``track=True`` every stored row remembers the combination of
    inserted vectors producing it, so that a vector reducing to zero yields
    a linear dependency (used for kernels).
    """

    def __init__(self, field=QQ, track=False):
        self.field = field
        self.track = track
        self.rows = {}
        self.combos = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec, combo=None):
        """Reduce ``vec`` (copied) against the basis; returns (rest, combo)."""
        p = self.field.p
        v = {k: x for k, x in vec.items() if x}
        c = dict(combo) if combo is not None else None
        rows = self.rows
        while v:
            lead = max(v)
            row = rows.get(lead)
            if row is None:
                break
            f = v[lead]
            axpy(v, f, row, p)
            if c is not None:
                axpy(c, f, self.combos[lead], p)
        return v, c

    def insert(self, vec, combo=None):
        """Add ``vec``; returns the dependency combo if it was dependent.

        Returns ``None`` when the vector enlarged the span.  When it was
        dependent, returns the (possibly empty) combination dict, which is
        only meaningful with tracking enabled.
        """
        v, c = self.reduce(vec, combo)
        if not v:
            return c if c is not None else {}
        lead = max(v)
        inv = self.field.inv(v[lead])
        p = self.field.p
        if p is None:
            v = {k: x * inv for k, x in v.items()}
            if c is not None:
                c = {k: x * inv for k, x in c.items()}
        else:
            v = {k: x * inv % p for k, x in v.items()}
            if c is not None:
                c = {k: x * inv % p for k, x in c.items()}
        self.rows[lead] = v
        if self.track:
            self.combos[lead] = c
        return None

    def contains(self, vec):
        v, _ = self.reduce(vec)
        return not v

    def rref(self):
        """Fully reduced rows as a dict pivot -> row (rows reduced in place)."""
        p = self.field.p
        for lead in sorted(self.rows):
            row = self.rows[lead]
            for other in sorted((k for k in row if k != lead and k in self.rows), reverse=True):
                f = row.get(other)
                if f:
                    axpy(row, f, self.rows[other], p)
                    if self.track:
                        axpy(self.combos[lead], f, self.combos[other], p)
        return self.rows


def rank(vectors, field=QQ):
    """Rank of a family of sparse vectors."""
    ech = Echelon(field)
    for v in vectors:
        ech.insert({k: field(x) for k, x in v.items()})
    return ech.rank


def kernel(columns, field=QQ):
    """Basis of the kernel of the matrix with the given sparse columns.

    ``columns`` is a sequence of dicts row -> value; the result is a list of
    dicts column-index -> value spanning all dependencies among them.
    """
    ech = Echelon(field, track=True)
    out = []
    for j, col in enumerate(columns):
        dep = ech.insert({k: field(x) for k, x in col.items()}, {j: field(1)})
        if dep is not None:
            out.append(dep)
    return out
