"""Command-line front end: ``nsres <command> GENERATORS... [options]``."""

import argparse
import os
import sys

from . import apery_resolution as ar
from . import assoc_graded as ag
from . import emit
from . import kunz
from . import m4_special as m4
from . import oracle
from . import series_golod as sg
from .errors import NsresError
from .linalg import Field
from .ring import binomial_latex, toric_generators
from .semigroup import from_generators, is_med

FORMATS = ("text", "json", "latex", "dot")


def _threads():
    """NSRES_THREADS caps parallelism; computations here run in one thread."""
    raw = os.environ.get("NSRES_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise NsresError("NSRES_THREADS must be a positive integer, got %r" % raw)
    if n < 1:
        raise NsresError("NSRES_THREADS must be a positive integer, got %r" % raw)
    return 1


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected an integer >= 1, got %d" % v)
    return v


def _field(text):
    try:
        return Field.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("generators", nargs="+", type=_positive, help="semigroup generators")
    common.add_argument("--steps", type=_positive, help="homological degree bound D")
    common.add_argument("--degree-bound", type=_positive, help="degree bound N")
    common.add_argument("--field", type=_field, default=Field(), help="rat (default) or fp:P")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--symbolic", action="store_true", help="print b_ij symbols in exponents")

    p = argparse.ArgumentParser(
        prog="nsres",
        description="Apéry resolutions, Betti numbers and related computations over k[S].",
    )
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("apery", parents=[common], help="Apéry set, Frobenius number, MED")
    sub.add_parser("ideal", parents=[common], help="binomial generators of I_S")
    sub.add_parser("kunz", parents=[common], help="b_ij, face signature, Kunz poset")
    sf = sub.add_parser("same-face", parents=[common], help="compare faces of two semigroups")
    sf.add_argument("--other", nargs="+", type=_positive, required=True)
    sub.add_parser("resolve", parents=[common], help="Apéry resolution matrices d_1..d_D (default D=3)")
    b = sub.add_parser("betti", parents=[common], help="Betti numbers of k (default D=5)")
    b.add_argument("--method", choices=("tensor", "oracle"), default="tensor")
    h = sub.add_parser("homology", parents=[common], help="truncated homology at step --steps (default 2)")
    h.add_argument("--construction", choices=("apery", "m4"), default="apery")
    mm = sub.add_parser("m4", parents=[common], help="minimal resolution for multiplicity 4 (default D=3)")
    mm.add_argument("--construction", choices=("auto", "ray", "ci", "nonci"), default="auto")
    g = sub.add_parser("golod", parents=[common], help="Golod equality through z^D (default D=6)")
    g.add_argument("--piq", default=None, help="'builtin', 'oracle' or coefficients like 3,2")
    sub.add_parser("grm", parents=[common], help="I* generators and Hilbert function (default N=6)")
    sub.add_parser("koszul", parents=[common], help="bounded Koszul test (default i=3, N=6)")
    return p


def _semigroup(gens):
    try:
        return from_generators(gens)
    except ValueError as e:
        raise NsresError(str(e))


def _matrices_out(mats, args, symbolic=None):
    fmt = args.format
    if fmt == "json":
        return emit.dumps_list(symbolic or mats)
    if fmt == "latex":
        return "\n\n".join(emit.matrix_latex(M) for M in (symbolic or mats))
    if fmt == "dot":
        raise NsresError("dot output is only available for kunz")
    blocks = []
    for d, M in enumerate(symbolic or mats, start=1):
        blocks.append("d_%d: %s" % (d, emit.matrix_text(M)))
    return "\n".join(blocks)


def cmd_apery(S, args):
    if args.format == "json":
        return emit.dumps(
            {
                "m": S.multiplicity,
                "apery": list(S.apery),
                "med": is_med(S),
                "frobenius": S.frobenius,
                "minimal_generators": list(S.minimal_generators),
            }
        )
    return "\n".join(
        [
            "multiplicity: %d" % S.multiplicity,
            "apery: %s" % " ".join(map(str, S.apery)),
            "frobenius: %d" % S.frobenius,
            "minimal generators: %s" % " ".join(map(str, S.minimal_generators)),
            "med: %s" % str(is_med(S)).lower(),
        ]
    )


def cmd_ideal(S, args):
    pairs = toric_generators(S)
    if args.format == "json":
        return emit.dumps(
            {
                "binomials": [
                    {"lhs": list(l.exponents), "rhs": list(r.exponents), "latex": binomial_latex((l, r))}
                    for l, r in pairs
                ]
            }
        )
    return "\n".join(binomial_latex(p) for p in pairs)


def cmd_kunz(S, args):
    poset = kunz.kunz_poset(S)
    if args.format == "dot":
        return kunz.to_dot(poset)
    B = kunz.b_matrix(S)
    sig = sorted(kunz.face_signature(S).tight_pairs)
    if args.format == "json":
        return emit.dumps(
            {
                "m": S.multiplicity,
                "b": [[i, j, v] for (i, j), v in sorted(B.entries.items())],
                "tight_pairs": [list(p) for p in sig],
                "covers": [list(c) for c in poset.covers()],
            }
        )
    lines = ["b_%d%d = %d" % (i, j, v) for (i, j), v in sorted(B.entries.items())]
    lines.append("tight pairs: %s" % (" ".join("(%d,%d)" % p for p in sig) or "none"))
    lines.append("covers: %s" % " ".join("%d<%d" % c for c in poset.covers()))
    return "\n".join(lines)


def cmd_same_face(S, args):
    T = _semigroup(args.other)
    same = kunz.same_face(S, T)
    if args.format == "json":
        return emit.dumps({"same_face": same})
    return str(same).lower()


def cmd_resolve(S, args):
    D = args.steps or 3
    mats = ar.resolution(S, D)
    sym = [ar.symbolic_differential(S.multiplicity, d) for d in range(1, D + 1)] if args.symbolic else None
    return _matrices_out(mats, args, sym)


def cmd_betti(S, args):
    D = args.steps or 5
    if args.method == "oracle":
        table = oracle.betti_k_over_R(S, D, args.degree_bound, args.field)
    else:
        table = ar.betti_via_tensor(S, D, args.field)
    if args.format == "json":
        return emit.dumps(table)
    return " ".join(map(str, table.values))


def cmd_homology(S, args):
    d = args.steps or 2
    N = args.degree_bound or ar.default_bound(S, d)
    if args.construction == "m4":
        mats = m4.m4_resolution(S, d + 1)
        rep = ar.complex_homology(mats, S, d, N, args.field)
    else:
        rep = ar.truncated_homology(S, d, N, args.field)
    if args.format == "json":
        doc = {
            "step": d,
            "degree_bound": N,
            "exact": rep.exact,
            "nonzero": [[n, v] for n, v in sorted(rep.nonzero().items())],
        }
        if rep.cokernel is not None:
            doc["cokernel"] = [[n, v] for n, v in sorted(rep.cokernel.items()) if v]
        return emit.dumps(doc)
    lines = ["H_%d through degree %d: %s" % (d, N, "zero" if not rep.nonzero() else rep.nonzero())]
    if rep.cokernel is not None:
        lines.append("coker d_1: %s" % {n: v for n, v in rep.cokernel.items() if v})
    lines.append("exact: %s" % str(rep.exact).lower())
    return "\n".join(lines)


def cmd_m4(S, args):
    D = args.steps or 3
    fc = m4.classify_face_m4(S)
    builders = {"ray": m4.ray_resolution, "ci": m4.ci_resolution, "nonci": m4.nonci_resolution}
    if args.construction == "auto":
        mats = m4.m4_resolution(S, D)
        construction = None
    else:
        mats = builders[args.construction](S, D)
        construction = args.construction
    sym = m4.symbolic_resolution(S, D, construction) if args.symbolic else None
    header = "face: %s (unit %d)" % (fc.tag, fc.unit)
    body = _matrices_out(mats, args, sym)
    if args.format == "text":
        return header + "\n" + body
    return body


def _parse_piq(text):
    if text is None or text in ("builtin", "oracle"):
        return text
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise NsresError("--piq expects 'builtin', 'oracle' or integers like 3,2")


def cmd_golod(S, args):
    D = args.steps or 6
    rep = sg.golod_check(S, D, _parse_piq(args.piq))
    if args.format == "json":
        return emit.dumps(rep)
    return "\n".join(
        [
            "Golod through degree %d: %s" % (D, str(rep.equal).lower()),
            "lhs: %s" % " ".join(map(str, rep.lhs)),
            "rhs: %s" % " ".join(map(str, rep.rhs)),
            "P_I^Q (%s): %s" % (rep.source, " ".join(map(str, rep.piq))),
        ]
    )


def cmd_grm(S, args):
    D = args.degree_bound or ag.default_degree_bound(S)
    pres = ag.initial_ideal_truncated(S, D, args.field)
    if args.format == "json":
        return emit.dumps(pres)
    return "\n".join(
        [
            "I* generators through degree %d: %s" % (D, ", ".join(pres.rendered_generators())),
            "Hilbert function: %s" % " ".join(map(str, ag.gr_hilbert(S, D))),
            "quadratic through degree %d: %s" % (D, str(not any(d >= 3 for d in pres.generators)).lower()),
        ]
    )


def cmd_koszul(S, args):
    i_max = args.steps or 3
    D = args.degree_bound or max(6, i_max)
    table = ag.gr_betti_k(S, i_max, D, args.field, strict=False)
    ok = not ag.nonlinear_entries(table)
    if args.format == "json":
        return emit.dumps(table, koszul=ok)
    lines = ["Koszul through step %d and degree %d: %s" % (i_max, D, str(ok).lower())]
    for (i, j), c in sorted(table.graded.items()):
        lines.append("beta_{%d,%d} = %d" % (i, j, c))
    return "\n".join(lines)


COMMANDS = {
    "apery": cmd_apery,
    "ideal": cmd_ideal,
    "kunz": cmd_kunz,
    "same-face": cmd_same_face,
    "resolve": cmd_resolve,
    "betti": cmd_betti,
    "homology": cmd_homology,
    "m4": cmd_m4,
    "golod": cmd_golod,
    "grm": cmd_grm,
    "koszul": cmd_koszul,
}


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    if args.format == "dot" and args.command != "kunz":
        print("nsres: error: --format dot is only available for kunz", file=err)
        return 2
    try:
        _threads()
        S = _semigroup(args.generators)
        text = COMMANDS[args.command](S, args)
    except NsresError as e:
        print("nsres: %s: %s" % (type(e).__name__, e), file=err)
        return 1
    out.write(text if text.endswith("\n") else text + "\n")
    return 0


def main(argv=None):
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
