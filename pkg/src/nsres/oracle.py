"""
Brute-force minimal graded free resolutions by degreewise linear algebra.

A ring handle exposes a graded basis, algebra generators and a product of
basis elements; a module Q/J is given by an evaluation map whose kernel in
each degree is J.  Each step computes the kernel of the last map degree by
degree and keeps the kernel vectors that are independent modulo
(generators) * (kernel of lower degrees).
"""

from dataclasses import dataclass, field

from .errors import DegreeBoundTooLow, InternalInvariant
from .linalg import QQ, Echelon, kernel
from .matrices import BettiTable
from .ring import monomials_of_degree
from .semigroup import contains, factorization_lengths


class RingHandle:
    tag = None
    grading = "S"

    def basis(self, n):
        raise NotImplementedError

    def generators(self):
        """[(key, degree)] generating the maximal ideal as an algebra."""
        raise NotImplementedError

    def mul(self, k1, k2):
        """Product of two basis elements as {key: coefficient}."""
        raise NotImplementedError


class SemigroupRing(RingHandle):
    """R = k[S] with basis t^n, keyed by n."""

    tag = "R"

    def __init__(self, S):
        self.S = S

    def basis(self, n):
        return [n] if contains(self.S, n) else []

    def generators(self):
        return [(g, g) for g in self.S.minimal_generators]

    def mul(self, k1, k2):
        return {k1 + k2: 1}

    def evaluate(self, key):
        return {key: 1}


class PolynomialRing(RingHandle):
    """Polynomial ring with positive variable degrees; keys are exponent tuples."""

    def __init__(self, S, degrees, tag, grading="S"):
        self.S = S
        self.degrees = tuple(degrees)
        self.tag = tag
        self.grading = grading
        self.nvars = len(self.degrees)

    def basis(self, n):
        if n < 0:
            return []
        return list(monomials_of_degree(self.degrees, n))

    def generators(self):
        out = []
        for i, d in enumerate(self.degrees):
            e = [0] * self.nvars
            e[i] = 1
            out.append((tuple(e), d))
        return out

    def mul(self, k1, k2):
        return {tuple(a + b for a, b in zip(k1, k2)): 1}

    def s_degree(self, key):
        return sum(e * g for e, g in zip(key, self.S_degrees))


def ring_Q(S):
    """k[y, x_1, ..., x_{m-1}], S-graded by deg x_i = a_i."""
    R = PolynomialRing(S, S.apery_with_zero, "Q")
    R.S_degrees = R.degrees
    return R


def ring_Qmin(S, standard=False):
    """One variable per minimal generator; S-graded or standard graded."""
    gens = S.minimal_generators
    R = PolynomialRing(S, (1,) * len(gens) if standard else gens, "Qstd" if standard else "Qmin",
                       "standard" if standard else "S")
    R.S_degrees = gens
    return R


class AssociatedGradedRing(RingHandle):
    """gr_m(k[S]) realized on the classes of t^n, keyed by n.

    The class of t^n lives in degree L_max(n), and t^a * t^b is t^(a+b) when
    L_max(a+b) = L_max(a) + L_max(b), and 0 otherwise.
    """

    tag = "Gr"
    grading = "standard"

    def __init__(self, S, D):
        self.S = S
        self.D = D
        top = (D + 2) * max(S.minimal_generators)
        self.L = factorization_lengths(S, top)
        self._basis = {}
        for n, l in enumerate(self.L):
            if l is not None and l <= D + 1:
                self._basis.setdefault(l, []).append(n)

    def length(self, n):
        if n >= len(self.L):
            self.L = factorization_lengths(self.S, 2 * n)
        return self.L[n]

    def basis(self, d):
        if d > self.D + 1:
            raise InternalInvariant("gr basis requested beyond degree %d" % (self.D + 1))
        return self._basis.get(d, [])

    def generators(self):
        return [(g, 1) for g in self.S.minimal_generators]

    def mul(self, k1, k2):
        if self.length(k1 + k2) == self.length(k1) + self.length(k2):
            return {k1 + k2: 1}
        return {}


# -- modules Q/J given by evaluation maps ------------------------------------


def residue_field_eval(ring):
    """Augmentation: only the degree-0 unit survives."""
    return lambda key, n: {0: 1} if n == 0 else {}


def semigroup_eval(ring):
    """Q -> k[S], monomial -> t^(S-degree); the kernel is I_S."""
    return lambda key, n: {ring.s_degree(key): 1}


def gr_eval(ring, S):
    """Qstd -> gr, monomial -> class of t^n (0 when L_max(n) exceeds the degree)."""
    cache = {}

    def ev(key, d):
        n = ring.s_degree(key)
        if n not in cache:
            cache[n] = max_len(S, n)
        return {n: 1} if cache[n] == d else {}

    return ev


def max_len(S, n):
    return factorization_lengths(S, n)[n]


@dataclass
class OracleResult:
    betti: BettiTable
    generator_degrees: list
    images: list = field(repr=False, default_factory=list)
    complete: bool = True


def _kernel_at(ring, gens, images, n, field):
    """Basis of ker(F_n -> previous) as vectors over F_n's basis keys."""
    keys = [(j, key) for j, dj in enumerate(gens) for key in ring.basis(n - dj)]
    cols = []
    for j, key in keys:
        col = {}
        for (j2, key2), c in images[j].items():
            for prod, c2 in ring.mul(key, key2).items():
                idx = (j2, prod)
                col[idx] = col.get(idx, 0) + c * c2
        cols.append({k: v for k, v in col.items() if v})
    deps = kernel(cols, field)
    return keys, [{keys[i]: c for i, c in dep.items()} for dep in deps]


def module_eval(ring, module):
    """Evaluation map for a module name: "k", or "quotient"/"ideal" (Q/J and J).

    For polynomial rings J is I_S under the S-grading and I* under the
    standard grading.
    """
    if callable(module):
        return module
    if module == "k":
        return residue_field_eval(ring)
    if module in ("quotient", "ideal"):
        if ring.tag == "Qstd":
            return gr_eval(ring, ring.S)
        if ring.tag in ("Q", "Qmin"):
            return semigroup_eval(ring)
    raise ValueError("module %r is not available over %s" % (module, ring.tag))


def minimal_graded_resolution(ring, module, i_max, N, field=QQ, strict=True):
    """Minimal resolution of a module through step i_max, in degrees <= N.

    ``module`` is "k", "quotient" (Q/J), "ideal" (J itself, Betti numbers
    shifted down by one) or an evaluation callable whose kernel is J.
    Returns Betti numbers beta_0..beta_{i_max}, graded by degree.
    """
    if i_max < 0:
        raise ValueError("i_max must be nonnegative")
    if module == "ideal":
        res = minimal_graded_resolution(ring, "quotient", i_max + 1, N, field, strict)
        t = res.betti
        graded = {(i - 1, n): c for (i, n), c in t.graded.items() if i >= 1}
        table = BettiTable(t.values[1:], i_max, N, graded, t.grading)
        return OracleResult(table, res.generator_degrees[1:], res.images, res.complete)
    evaluate = module_eval(ring, module)
    gens = [0]
    images = []
    all_degrees = [list(gens)]
    all_images = []
    graded = {(0, 0): 1}
    complete = True

    for i in range(1, i_max + 1):
        kernels = {}
        new_gens, new_images = [], []
        ring_gens = ring.generators()
        for n in range(N + 1):
            if i == 1:
                # the first kernel is J itself
                keys = [(0, key) for key in ring.basis(n)]
                deps = kernel([evaluate(key, n) for _, key in keys], field)
                K = [{keys[a]: c for a, c in dep.items()} for dep in deps]
            else:
                _, K = _kernel_at(ring, gens, images, n, field)
            kernels[n] = K
            if not K:
                continue
            ech = Echelon(field)
            index = {}

            def vec(v):
                out = {}
                for key, c in v.items():
                    idx = index.setdefault(key, len(index))
                    out[idx] = out.get(idx, 0) + c
                return {k: x for k, x in out.items() if x}

            for g, dg in ring_gens:
                if ech.rank == len(K):
                    break
                for v in kernels.get(n - dg, ()):
                    prod = {}
                    for (j, key), c in v.items():
                        for pk, pc in ring.mul(g, key).items():
                            prod[(j, pk)] = prod.get((j, pk), 0) + c * pc
                    ech.insert(vec(prod))
                    if ech.rank == len(K):
                        break
            for v in K:
                if ech.rank == len(K):
                    break
                if ech.insert(vec(v)) is None:
                    new_gens.append(n)
                    new_images.append({k: field.to_python(c) for k, c in v.items()})
                    graded[(i, n)] = graded.get((i, n), 0) + 1
                    if n >= N:
                        complete = False
                        if strict:
                            raise DegreeBoundTooLow(
                                "a step-%d generator lies in degree %d = bound; raise the bound" % (i, n)
                            )
        for img, dg in zip(new_images, new_gens):
            for (j, key), c in img.items():
                if gens[j] == dg:
                    raise InternalInvariant("non-minimal syzygy: unit entry")
        gens, images = new_gens, new_images
        all_degrees.append(list(gens))
        all_images.append(images)
        if not gens:
            for k in range(i + 1, i_max + 1):
                all_degrees.append([])
            break
    values = tuple(len(d) for d in all_degrees[: i_max + 1])
    table = BettiTable(values, i_max, N, graded, ring.grading)
    return OracleResult(table, all_degrees, all_images, complete)


def betti_table(ring, module, i_max, N, field=QQ, strict=True):
    return minimal_graded_resolution(ring, module, i_max, N, field, strict).betti


# -- convenience front ends ----------------------------------------------------


def default_bound_k(S, i_max):
    return i_max * max(S.apery) + 1


def default_bound_ideal(S, i_max, ring="Q"):
    """Heuristic: syzygies of I_S observed well below (i + 3) * max(Ap(S))."""
    return (i_max + 3) * max(S.apery)


def betti_k_over_R(S, i_max, N=None, field=QQ):
    """beta_0..beta_{i_max} of k over k[S]."""
    return betti_table(SemigroupRing(S), "k", i_max, N or default_bound_k(S, i_max), field)


def betti_ideal(S, i_max, N=None, ring="Q", field=QQ):
    """beta_0..beta_{i_max} of I_S over Q (full Apéry variables) or Qmin."""
    Q = ring_Qmin(S) if ring == "Qmin" else ring_Q(S)
    return betti_table(Q, "ideal", i_max, N or default_bound_ideal(S, i_max, ring), field)


def betti_k_over_gr(S, i_max, D, field=QQ, strict=True):
    return minimal_graded_resolution(AssociatedGradedRing(S, D), "k", i_max, D, field, strict)


def betti_quotient_gr(S, i_max, D, field=QQ):
    """beta_i of Q/I* over the standard graded polynomial ring on minimal generators."""
    return minimal_graded_resolution(ring_Qmin(S, standard=True), "quotient", i_max, D, field, strict=False)
