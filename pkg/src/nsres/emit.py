"""
Serialization: versioned JSON (round-trippable), LaTeX arrays and plain text.
"""

import json
from fractions import Fraction

from .assoc_graded import GrPresentation, render_poly
from .matrices import BettiTable, DifferentialMatrix, SymbolicMatrix, SymbolicTerm
from .ring import RingElement
from .semigroup import NumericalSemigroup, from_generators, is_med
from .series_golod import GolodReport

SCHEMA = "nsres/1"


# -- scalars and labels ---------------------------------------------------------


def scalar_out(c):
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)
    return int(c)


def scalar_in(x):
    if isinstance(x, str):
        f = Fraction(x)
        return int(f) if f.denominator == 1 else f
    return x


def word_text(label, m=4):
    if not label:
        return "()"
    return ("" if m <= 10 else ".").join(str(x) for x in label)


def word_latex(label, m=4):
    return r"\emptyset" if not label else word_text(label, m)


# -- JSON -----------------------------------------------------------------------


def _element(el):
    return [[n, scalar_out(c)] for n, c in sorted(el.terms.items())]


def _term(t):
    return {
        "coeff": scalar_out(t.coeff),
        "x": list(t.x),
        "b": [[i, j, k] for (i, j), k in t.b],
        "const": t.const,
    }


def to_data(obj):
    """JSON-ready dict for a library object (without the schema key)."""
    if isinstance(obj, NumericalSemigroup):
        return {
            "type": "semigroup",
            "generators": list(obj.generators),
            "m": obj.multiplicity,
            "apery": list(obj.apery),
            "frobenius": obj.frobenius,
            "minimal_generators": list(obj.minimal_generators),
            "med": is_med(obj),
        }
    if isinstance(obj, DifferentialMatrix):
        return {
            "type": "differential_matrix",
            "kind": obj.kind,
            "source": [list(l) for l in obj.source],
            "target": [list(l) for l in obj.target],
            "source_degrees": list(obj.source_degrees),
            "target_degrees": list(obj.target_degrees),
            "entries": [[r, c, _element(e)] for (r, c), e in sorted(obj.entries.items())],
        }
    if isinstance(obj, SymbolicMatrix):
        return {
            "type": "symbolic_matrix",
            "m": obj.m,
            "kind": obj.kind,
            "source": [list(l) for l in obj.source],
            "target": [list(l) for l in obj.target],
            "entries": [[r, c, [_term(t) for t in ts]] for (r, c), ts in sorted(obj.entries.items())],
        }
    if isinstance(obj, BettiTable):
        return {
            "type": "betti_table",
            "values": list(obj.values),
            "steps": obj.steps,
            "degree_bound": obj.degree_bound,
            "grading": obj.grading,
            "graded": None
            if obj.graded is None
            else [[i, n, c] for (i, n), c in sorted(obj.graded.items())],
        }
    if isinstance(obj, GolodReport):
        return {
            "type": "golod",
            "lhs": list(obj.lhs),
            "rhs": list(obj.rhs),
            "equal_through": obj.equal_through,
            "bound": obj.bound,
            "piq": list(obj.piq),
            "source": obj.source,
        }
    if isinstance(obj, GrPresentation):
        return {
            "type": "gr_presentation",
            "generators": list(obj.S.generators),
            "names": list(obj.names),
            "degree_bound": obj.degree_bound,
            "hilbert": [1] + obj.hilbert(),
            "ideal_generators": [
                {
                    "degree": d,
                    "terms": [[list(e), scalar_out(c)] for e, c in sorted(g.items(), reverse=True)],
                    "text": render_poly(obj.S, g),
                }
                for d in sorted(obj.generators)
                for g in obj.generators[d]
            ],
        }
    raise TypeError("cannot serialize %r" % type(obj).__name__)


def from_data(data):
    kind = data.get("type")
    if kind == "semigroup":
        return from_generators(data["generators"])
    if kind == "differential_matrix":
        return DifferentialMatrix(
            tuple(tuple(l) for l in data["source"]),
            tuple(tuple(l) for l in data["target"]),
            tuple(data["source_degrees"]),
            tuple(data["target_degrees"]),
            {
                (r, c): RingElement({n: scalar_in(x) for n, x in terms})
                for r, c, terms in data["entries"]
            },
            data["kind"],
        )
    if kind == "symbolic_matrix":
        return SymbolicMatrix(
            data["m"],
            tuple(tuple(l) for l in data["source"]),
            tuple(tuple(l) for l in data["target"]),
            {
                (r, c): tuple(
                    SymbolicTerm(
                        scalar_in(t["coeff"]),
                        tuple(t["x"]),
                        tuple(((i, j), k) for i, j, k in t["b"]),
                        t["const"],
                    )
                    for t in ts
                )
                for r, c, ts in data["entries"]
            },
            data["kind"],
        )
    if kind == "betti_table":
        graded = data.get("graded")
        return BettiTable(
            tuple(data["values"]),
            data["steps"],
            data.get("degree_bound"),
            None if graded is None else {(i, n): c for i, n, c in graded},
            data.get("grading", "S"),
        )
    if kind == "golod":
        return GolodReport(
            tuple(data["lhs"]), tuple(data["rhs"]), data["bound"], tuple(data["piq"]), data["source"]
        )
    if kind == "gr_presentation":
        from .assoc_graded import initial_ideal_truncated

        return initial_ideal_truncated(from_generators(data["generators"]), data["degree_bound"])
    raise ValueError("unknown document type %r" % kind)


def dumps(obj, **extra):
    """Compact deterministic JSON with the schema key first."""
    doc = {"schema": SCHEMA}
    doc.update(obj if isinstance(obj, dict) else to_data(obj))
    doc.update(extra)
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=False)


def loads(text):
    data = json.loads(text)
    if data.get("schema") != SCHEMA:
        raise ValueError("unsupported schema %r" % data.get("schema"))
    if isinstance(data.get("items"), list):
        return [from_data(x) for x in data["items"]]
    return from_data(data)


def dumps_list(objs, **extra):
    return dumps({"items": [to_data(o) for o in objs]}, **extra)


# -- LaTeX ------------------------------------------------------------------------


def _coeff_prefix(c, body):
    """Signed coefficient in front of a (possibly empty) monomial body."""
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    if mag == 1:
        text = body or "1"
    elif isinstance(mag, Fraction) and mag.denominator != 1:
        text = r"\tfrac{%d}{%d}%s" % (mag.numerator, mag.denominator, body)
    else:
        text = "%s%s" % (mag, body)
    return sign, text


def _join(parts):
    if not parts:
        return "0"
    sign, text = parts[0]
    out = ("-" if sign == "-" else "") + text
    for sign, text in parts[1:]:
        out += " %s %s" % (sign, text)
    return out


def element_latex(el):
    parts = []
    for n in sorted(el.terms, reverse=True):
        body = "" if n == 0 else "t^{%d}" % n
        parts.append(_coeff_prefix(el.terms[n], body))
    return _join(parts)


def b_latex(i, j, m):
    return "b_{%d%d}" % (i, j) if m <= 10 else "b_{%d,%d}" % (i, j)


def y_exponent_latex(term, m):
    pieces = []
    for (i, j), k in term.b:
        pieces.append(("%d" % k if k > 1 else "") + b_latex(i, j, m))
    if term.const:
        pieces.append(str(term.const))
    if not pieces:
        return ""
    if len(pieces) == 1 and not term.b and term.const == 1:
        return "y"
    if len(pieces) == 1 and not term.b and term.const < 10:
        return "y^%d" % term.const
    return "y^{%s}" % "+".join(pieces)


def x_latex(x):
    out = ""
    for i, e in enumerate(x, start=1):
        if e == 1:
            out += "x_%d" % i
        elif e > 1:
            out += "x_%d^%s" % (i, e if e < 10 else "{%d}" % e)
    return out


def symbolic_entry_latex(terms, m):
    return _join([_coeff_prefix(t.coeff, x_latex(t.x) + y_exponent_latex(t, m)) for t in terms])


def matrix_latex(M):
    """Array with column labels on top and row labels on the left."""
    symbolic = isinstance(M, SymbolicMatrix)
    m = M.m if symbolic else 1 + max([x for l in M.source + M.target for x in l] + [1])
    rows, cols = len(M.target), len(M.source)
    if rows == 0 or cols == 0:
        return r"\begin{array}{}\end{array}"
    lines = [r"\begin{array}{c|%s}" % ("c" * cols)]
    lines.append(" & " + " & ".join(word_latex(l, m) for l in M.source) + r" \\ \hline")
    for r in range(rows):
        cells = []
        for c in range(cols):
            if symbolic:
                ts = M.entries.get((r, c))
                cells.append(symbolic_entry_latex(ts, m) if ts else "0")
            else:
                el = M.entries.get((r, c))
                cells.append(element_latex(el) if el else "0")
        lines.append(word_latex(M.target[r], m) + " & " + " & ".join(cells) + r" \\")
    lines.append(r"\end{array}")
    return "\n".join(lines)


# -- text ---------------------------------------------------------------------------


def matrix_text(M):
    """One line per nonzero entry: 'row <- col: entry'."""
    symbolic = isinstance(M, SymbolicMatrix)
    m = M.m if symbolic else 1 + max([x for l in M.source + M.target for x in l] + [1])
    out = ["%d x %d" % M.shape]
    for (r, c), e in sorted(M.entries.items()):
        text = symbolic_entry_latex(e, m) if symbolic else str(e)
        out.append("  %s <- %s: %s" % (word_text(M.target[r], m), word_text(M.source[c], m), text))
    return "\n".join(out)
