"""Text formats: ``.lie`` algebra files, J matrix files and JSON reports.

A ``.lie`` file starts with ``dim n`` and then lists ``i j k p/q``, the
coefficient of f_k in [f_i, f_j] with i < j. ``#`` starts a comment.
A J file lists n rows of n rationals; row h holds the f_h components of
J f_1, ..., J f_n.
"""

import json
from fractions import Fraction

from .exterior import KForm, KVector
from .lie import LieAlgebra, LieAlgebraError


class ParseError(ValueError):
    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = f"{path or '<input>'}:{line}: " if line is not None else ""
        super().__init__(where + message)


def _strip(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _rational(tok, lineno, path):
    try:
        if "." in tok or "e" in tok.lower():
            raise ValueError
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact rational: {tok!r}", lineno, path) from None


def _integer(tok, lineno, path):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"not an integer index: {tok!r}", lineno, path) from None


def parse_lie(text, path=None, *, check=True, name=None):
    lines = list(_strip(text))
    if not lines:
        raise ParseError("empty algebra file", 1, path)
    lineno, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "dim":
        raise ParseError("first line must be 'dim n'", lineno, path)
    n = _integer(parts[1], lineno, path)
    if n < 1:
        raise ParseError("dimension must be positive", lineno, path)
    structure = {}
    seen = set()
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 4:
            raise ParseError("expected 'i j k p/q'", lineno, path)
        i, j, k = (_integer(t, lineno, path) for t in parts[:3])
        c = _rational(parts[3], lineno, path)
        if not all(1 <= x <= n for x in (i, j, k)):
            raise ParseError(f"index out of range 1..{n}", lineno, path)
        if i >= j:
            raise ParseError(f"need i < j, got {i} {j}", lineno, path)
        if (i, j, k) in seen:
            raise ParseError(f"duplicate entry for [f{i}, f{j}] component f{k}", lineno, path)
        seen.add((i, j, k))
        structure.setdefault((i, j), {})[k] = c
    try:
        return LieAlgebra(n, structure, name=name, check=check)
    except LieAlgebraError as exc:
        raise ParseError(str(exc), None, path) from exc


def format_lie(g, comment=None):
    out = []
    if comment or g.name:
        out.append(f"# {comment or g.name}")
    out.append(f"dim {g.n}")
    for (i, j), image in sorted(g.structure.items()):
        for k, c in sorted(image.items()):
            out.append(f"{i} {j} {k} {c}")
    return "\n".join(out) + "\n"


def read_lie(path, **kw):
    with open(path, encoding="utf-8") as fh:
        return parse_lie(fh.read(), path=str(path), **kw)


def write_lie(g, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_lie(g))


def parse_j(text, path=None):
    from .acs import AlmostComplexStructure, NotAlmostComplexError
    rows = []
    for lineno, line in _strip(text):
        rows.append([_rational(t, lineno, path) for t in line.replace(",", " ").split()])
    if not rows:
        raise ParseError("empty J file", 1, path)
    try:
        return AlmostComplexStructure(rows)
    except NotAlmostComplexError as exc:
        raise ParseError(str(exc), None, path) from exc


def format_j(J):
    return "".join(" ".join(str(x) for x in row) + "\n" for row in J.matrix)


def read_j(path):
    with open(path, encoding="utf-8") as fh:
        return parse_j(fh.read(), path=str(path))


def write_j(J, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_j(J))


# JSON: rationals are "p/q" strings, forms and vectors are {"12": "p/q"} maps.

def rat(x):
    return str(Fraction(x))


def element_json(e):
    return {"kind": "form" if isinstance(e, KForm) else "vector", "grade": e.k,
            "coeffs": {"".join(map(str, idx)): rat(c) for idx, c in sorted(e.items())}}


def element_from_json(obj, n=4):
    cls = KForm if obj["kind"] == "form" else KVector
    return cls(n, obj["grade"], {key: Fraction(v) for key, v in obj["coeffs"].items()})


def to_json(obj):
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def classification_json(g, orient, J, cl):
    rep = cl.report
    return {
        "algebra": g.name or "", "dim": g.n,
        "zeta": element_json(orient.zeta),
        "J": [[rat(x) for x in row] for row in J.matrix],
        "tamed": cl.tamed, "almost_kahler": cl.almost_kahler,
        "integrable": cl.integrable,
        "h_plus": rep.h_plus, "h_minus": rep.h_minus, "b2": rep.b2, "b_plus": rep.b_plus,
        "plus_representatives": [element_json(e) for e in rep.plus_representatives],
        "minus_representatives": [element_json(e) for e in rep.minus_representatives],
        "witness_kind": cl.witness_kind,
        "witness": element_json(cl.witness),
    }


def cone_json(verdict):
    return {
        "in_compatible_cone": verdict.in_compatible_cone,
        "in_tamed_cone": verdict.in_tamed_cone,
        "plus_part": element_json(verdict.plus_part),
        "minus_part": element_json(verdict.minus_part),
        "basis": [element_json(e) for e in verdict.basis],
        "note": verdict.note,
    }
