"""
Kunz cone coordinates: the b_ij matrix, face signatures (tight Kunz
inequalities), Kunz posets and the Z_m^* relabeling action.
"""

from dataclasses import dataclass

from .errors import InternalInvariant


def b_value(S, i, j):
    """b_ij = (a_i + a_j - a_{i+j}) / m with a_0 = m; any residues allowed."""
    m = S.multiplicity
    num = S.a(i) + S.a(j) - S.a(i + j)
    q, r = divmod(num, m)
    if r or q < 0:
        raise InternalInvariant("b_%d%d = %d/%d is not a nonnegative integer" % (i, j, num, m))
    return q


@dataclass(frozen=True)
class BMatrix:
    m: int
    entries: dict

    def __getitem__(self, ij):
        i, j = ij
        if i > j:
            i, j = j, i
        return self.entries[(i, j)]


@dataclass(frozen=True)
class FaceSignature:
    m: int
    tight_pairs: frozenset

    def relabel(self, u):
        return FaceSignature(self.m, relabel_pairs(self.tight_pairs, u, self.m))

    def __iter__(self):
        return iter(sorted(self.tight_pairs))


@dataclass(frozen=True)
class KunzPoset:
    """Strict order relation on Z_m; ``relation`` holds pairs (i, j) with i < j."""

    m: int
    relation: frozenset

    def leq(self, i, j):
        return i == j or (i, j) in self.relation

    def covers(self):
        rel = self.relation
        out = []
        for (i, j) in sorted(rel):
            if not any((i, k) in rel and (k, j) in rel for k in range(self.m)):
                out.append((i, j))
        return out

    def relabel(self, u):
        m = self.m
        return KunzPoset(m, frozenset(((u * i) % m, (u * j) % m) for i, j in self.relation))

    def atoms(self):
        """Residues covering 0 (the minimal generators other than m)."""
        return sorted(j for (i, j) in self.covers() if i == 0)


def relabel_pairs(pairs, u, m):
    out = set()
    for i, j in pairs:
        a, b = (u * i) % m, (u * j) % m
        out.add((min(a, b), max(a, b)))
    return frozenset(out)


def b_matrix(S):
    m = S.multiplicity
    return BMatrix(m, {(i, j): b_value(S, i, j) for i in range(1, m) for j in range(i, m)})


def face_signature(S):
    m = S.multiplicity
    B = b_matrix(S)
    tight = frozenset(
        (i, j) for (i, j), b in B.entries.items() if b == 0 and (i + j) % m != 0
    )
    for (i, j), b in B.entries.items():
        if (i + j) % m == 0 and b < 1:
            raise InternalInvariant("b_%d%d must be positive" % (i, j))
    return FaceSignature(m, tight)


def kunz_poset(S):
    m = S.multiplicity
    rel = {(0, i) for i in range(1, m)}
    for i in range(1, m):
        for j in range(1, m):
            if i != j and S.a(j) - S.a(i) in set(S.apery):
                rel.add((i, j))
    return KunzPoset(m, frozenset(rel))


def same_face(S, T):
    return S.multiplicity == T.multiplicity and face_signature(S) == face_signature(T)


def in_cone(point):
    """Whether ``point`` = (x_1, ..., x_{m-1}) is the Apéry tuple of a semigroup."""
    point = tuple(int(x) for x in point)
    m = len(point) + 1
    if m < 2:
        return False
    x = (m,) + point
    for i in range(1, m):
        if x[i] % m != i or x[i] < m:
            return False
    for i in range(1, m):
        for j in range(i, m):
            if (i + j) % m and x[i] + x[j] < x[(i + j) % m]:
                return False
    return True


def to_dot(poset, labels=None):
    """Graphviz source for the Hasse diagram of a Kunz poset."""
    lines = ["digraph kunz {", "  rankdir=BT;"]
    for i in range(poset.m):
        text = labels[i] if labels else str(i)
        lines.append('  n%d [label="%s"];' % (i, text))
    for i, j in poset.covers():
        lines.append("  n%d -> n%d;" % (i, j))
    lines.append("}")
    return "\n".join(lines) + "\n"
