"""Command-line front end.

Exit codes: 0 success (or tamed / in the cone), 10 not tamed (or not in
the cone), 11 bad input, 12 orientation mismatch, 13 not unimodular,
14 acceptance failure.
"""

import argparse
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import formats, linalg
from .catalog import CatalogError, catalog_get, catalog_list
from .exterior import ExteriorError
from .hodge import NotUnimodularError, Orientation
from .lie import LieAlgebraError, betti_numbers, check_jacobi, is_unimodular
from .tameness import OrientationMismatchError, classify, cone_membership

EXIT_OK = 0
EXIT_NOT_TAMED = 10
EXIT_INPUT = 11
EXIT_ORIENTATION = 12
EXIT_UNIMODULAR = 13
EXIT_SELFTEST = 14


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    zeta_sign: int = 1
    fmt: str = "table"
    seed: int = 0


class UsageError(ValueError):
    pass


def _emit(data, fmt, table_rows, out):
    if fmt == "json":
        out.write(formats.to_json(data))
    else:
        width = max((len(k) for k, _ in table_rows), default=0)
        for key, value in table_rows:
            out.write(f"{key.ljust(width)}  {value}\n")


def _names(elements):
    return ", ".join(repr(e) for e in elements) or "-"


def _load(alg_path, j_path=None, check=True):
    g = formats.read_lie(alg_path, check=check)
    J = formats.read_j(j_path) if j_path else None
    return g, J


def cmd_validate(args, out):
    g = formats.read_lie(args.algebra, check=False)
    jac = check_jacobi(g)
    data = {"dim": g.n, "jacobi": jac.ok}
    rows = [("dim", g.n), ("jacobi", "ok" if jac.ok else f"fails at {jac.triple}")]
    if not jac.ok:
        data["jacobi_triple"] = list(jac.triple)
        data["jacobi_residual"] = formats.element_json(jac.residual)
        _emit(data, args.format, rows, out)
        return EXIT_INPUT
    uni = is_unimodular(g)
    betti = list(betti_numbers(g))
    data.update(unimodular=uni, betti=betti)
    rows += [("unimodular", str(uni).lower()), ("betti", " ".join(map(str, betti)))]
    _emit(data, args.format, rows, out)
    return EXIT_OK


def cmd_classify(args, out):
    g, J = _load(args.algebra, args.j)
    orient = Orientation.standard(g.n, args.zeta)
    cl = classify(g, orient, J)
    data = formats.classification_json(g, orient, J, cl)
    rep = cl.report
    rows = [("tamed", str(cl.tamed).lower()),
            ("almost_kahler", str(cl.almost_kahler).lower()),
            ("integrable", str(cl.integrable).lower()),
            ("h+ h- b2 b+", f"{rep.h_plus} {rep.h_minus} {rep.b2} {rep.b_plus}"),
            ("H+ basis", _names(rep.plus_representatives)),
            ("H- basis", _names(rep.minus_representatives)),
            (cl.witness_kind, repr(cl.witness))]
    _emit(data, args.format, rows, out)
    return EXIT_OK if cl.tamed else EXIT_NOT_TAMED


def parse_class(text):
    """``"a,b,c[;d,...]"`` -> (H+ coordinates, H- coordinates or None)."""
    parts = text.split(";")
    if len(parts) > 2:
        raise UsageError(f"malformed class {text!r}: at most one ';'")
    try:
        plus = [Fraction(x.strip()) for x in parts[0].split(",")]
        minus = [Fraction(x.strip()) for x in parts[1].split(",")] if len(parts) == 2 else None
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed class {text!r}: expected rationals p/q") from None
    if any("." in x for x in text.replace(";", ",").split(",")):
        raise UsageError(f"malformed class {text!r}: decimals are not exact, use p/q")
    return plus, minus


def cmd_cone(args, out):
    plus, minus = parse_class(args.cls)
    g, J = _load(args.algebra, args.j)
    orient = Orientation.standard(g.n, args.zeta)
    cl = classify(g, orient, J)
    if not cl.tamed:
        out.write("error: J is not tamed, both cones are empty\n")
        return EXIT_NOT_TAMED
    try:
        v = cone_membership(g, orient, J, plus, minus, classification=cl)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [("compatible", str(v.in_compatible_cone).lower()),
            ("tamed", str(v.in_tamed_cone).lower()),
            ("H+ part", repr(v.plus_part)), ("H- part", repr(v.minus_part)),
            ("H+ basis", _names(v.basis))]
    _emit(formats.cone_json(v), args.format, rows, out)
    return EXIT_OK if v.in_tamed_cone else EXIT_NOT_TAMED


def cmd_catalog(args, out):
    if args.list:
        for name in catalog_list():
            out.write(name + "\n")
        return EXIT_OK
    if args.show:
        e = catalog_get(args.show)
        out.write(formats.format_lie(e.algebra))
        out.write(f"# expected b+ = {e.expected.b_plus}, b2 = {e.expected.b2}"
                  f"{' (derived)' if e.expected.derived else ''}\n")
        if e.families:
            out.write(f"# J families: {', '.join(e.families)}\n")
        return EXIT_OK
    if args.export:
        name, path = args.export
        formats.write_lie(catalog_get(name).algebra, path)
        out.write(f"wrote {path}\n")
        return EXIT_OK
    raise UsageError("catalog needs --list, --show NAME or --export NAME PATH")


def cmd_selftest(args, out):
    from .acceptance import run_all
    out.write(f"kernel: {linalg.KERNEL}, seed {args.seed}\n")
    results = run_all(args.seed)
    for r in results:
        out.write(r.line() + f" {r.seconds:.1f}s\n")
    ok = all(r.passed for r in results)
    out.write(f"{sum(r.passed for r in results)}/{len(results)} criteria passed\n")
    return EXIT_OK if ok else EXIT_SELFTEST


def build_parser():
    from .acceptance import DEFAULT_SEED
    p = argparse.ArgumentParser(prog="liecone",
                                description="Tamed and almost Kähler structures on 4-dimensional Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_j=True):
        sp.add_argument("algebra", help=".lie algebra file")
        if with_j:
            sp.add_argument("j", help="J matrix file")
            sp.add_argument("--zeta", type=int, choices=(1, -1), default=1,
                            help="orientation zeta = +-f_1...f_n (default +1)")
        sp.add_argument("--format", choices=("table", "json"), default="table")

    common(sub.add_parser("validate", help="Jacobi, unimodularity and Betti numbers"), False)
    common(sub.add_parser("classify", help="tamed / almost Kähler verdict with witness"))
    cone = sub.add_parser("cone", help="membership of a class in the tamed and compatible cones")
    common(cone)
    cone.add_argument("--class", dest="cls", required=True, metavar="a,b,c[;d]",
                      help="H+ coordinates, optionally ';' and H- coordinates")
    cat = sub.add_parser("catalog", help="built-in algebras")
    g = cat.add_mutually_exclusive_group(required=True)
    g.add_argument("--list", action="store_true")
    g.add_argument("--show", metavar="NAME")
    g.add_argument("--export", nargs=2, metavar=("NAME", "PATH"))
    st = sub.add_parser("selftest", help="run the acceptance suite")
    st.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return p


COMMANDS = {"validate": cmd_validate, "classify": cmd_classify, "cone": cmd_cone,
            "catalog": cmd_catalog, "selftest": cmd_selftest}


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except OrientationMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ORIENTATION
    except NotUnimodularError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNIMODULAR
    except (formats.ParseError, LieAlgebraError, UsageError, CatalogError,
            ExteriorError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
