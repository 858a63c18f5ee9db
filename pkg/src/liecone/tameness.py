"""J-cohomology, the tamed / almost-Kähler classifier, witnesses and cones.

Everything here assumes a 4-dimensional unimodular Lie algebra and an
almost complex structure inducing the chosen orientation.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .acs import (act_on_2forms, is_compatible_with, is_integrable, is_tamed_by,
                  lambda_minus, lambda_plus, lambda_plus_vectors, orientation_sign,
                  taming_gram)
from .exterior import (ExteriorError, KForm, KVector, Subspace, evaluate,
                       factor_simple, is_simple, wedge)
from .hodge import NotUnimodularError, pairing_matrix, phi_zeta, signature, b_plus
from .lie import betti, boundaries, coboundaries, cocycles, is_unimodular


class OrientationMismatchError(ValueError):
    """J induces the opposite of the fixed orientation."""

    def __init__(self, message=None):
        super().__init__(message or
                         "J induces the opposite orientation; negate zeta "
                         "(or one basis vector) to match it")


class NotTamedError(ValueError):
    pass


class TamedError(ValueError):
    """An obstruction was requested for a tamed J."""


def _require(g, orient, J):
    if g.n != 4 or J.n != 4 or orient.n != 4:
        raise ExteriorError("tameness computations need dimension 4")
    if not is_unimodular(g):
        raise NotUnimodularError("the Lie algebra is not unimodular")
    if orientation_sign(orient, J) != 1:
        raise OrientationMismatchError()


def _canonical_order(space):
    """RREF basis sorted by support size, then by pivot position."""
    rows = space.canonical
    return sorted(rows, key=lambda e: (len(e.coeffs), space._pivots[rows.index(e)]))


def _reps_mod(space, sub):
    """Elements of ``space`` completing a basis of ``sub`` to one of ``space``."""
    acc = list(sub.basis)
    reps = []
    for e in _canonical_order(space):
        if Subspace.span(acc + [e], like=e).dim > len(acc):
            acc.append(e)
            reps.append(e)
    return reps


@dataclass(frozen=True)
class JCohomologyReport:
    h_plus: int
    h_minus: int
    b2: int
    b_plus: int
    plus_representatives: tuple
    minus_representatives: tuple
    z_plus: Subspace = field(repr=False)
    z_minus: Subspace = field(repr=False)
    b_cap_plus: Subspace = field(repr=False)


def j_cohomology(g, orient, J):
    """Dimensions and representatives of the J-invariant / anti-invariant classes."""
    _require(g, orient, J)
    z = cocycles(g, 2)
    b = coboundaries(g, 2)
    lp, lm = lambda_plus(J), lambda_minus(J)
    zp, zm = z & lp, z & lm
    bp_cap, bm_cap = b & lp, b & lm
    assert bm_cap.dim == 0, "B meets the anti-invariant forms"
    assert bp_cap.dim <= 1, "dim(B cap Λ+) > 1"
    plus = _reps_mod(zp, bp_cap)
    minus = _reps_mod(zm, bm_cap)
    report = JCohomologyReport(
        h_plus=zp.dim - bp_cap.dim, h_minus=zm.dim, b2=betti(g, 2),
        b_plus=b_plus(g, orient), plus_representatives=tuple(plus),
        minus_representatives=tuple(minus), z_plus=zp, z_minus=zm, b_cap_plus=bp_cap)
    assert report.h_plus + report.h_minus == report.b2, "H2 != H+ (+) H-"
    assert jointly_independent(g, report), "H+ and H- overlap modulo B"
    assert report.h_minus in (report.b_plus - 1, report.b_plus), "h- out of range"
    return report


def jointly_independent(g, report):
    """H+ and H- representatives together with B form a basis of Z."""
    z = cocycles(g, 2)
    b = coboundaries(g, 2)
    elems = list(report.plus_representatives) + list(report.minus_representatives) + list(b.basis)
    if not elems:
        return z.dim == 0
    span = Subspace.span(elems)
    return span.dim == len(elems) and span == z


def class_coordinates(g, report, omega):
    """Split a closed 2-form's class into (H+ coords, H- coords)."""
    z = cocycles(g, 2)
    if omega not in z:
        raise ValueError("form is not closed")
    b = coboundaries(g, 2)
    reps = list(report.plus_representatives) + list(report.minus_representatives)
    basis = reps + list(b.basis)
    coords = Subspace(KForm, 4, 2, basis).coordinates(omega)
    hp = len(report.plus_representatives)
    return coords[:hp], coords[hp:len(reps)]


@dataclass(frozen=True)
class Classification:
    tamed: bool
    almost_kahler: bool
    integrable: bool
    report: JCohomologyReport
    witness: object

    @property
    def witness_kind(self):
        return "compatible_form" if self.tamed else "obstruction_vector"


def _tamed_verdicts(g, orient, J, report):
    cohomological = report.h_minus == report.b_plus - 1
    linear = report.b_cap_plus.dim == 0
    if cohomological != linear:
        raise AssertionError("tameness criteria disagree")
    return cohomological


def classify(g, orient, J):
    report = j_cohomology(g, orient, J)
    tamed = _tamed_verdicts(g, orient, J, report)
    integrable = is_integrable(g, J)
    if report.b_plus == 3:
        assert tamed, "b+ = 3 but J is not tamed"
    if report.b_plus == 2:
        assert tamed or integrable, "b+ = 2 but J is neither tamed nor integrable"
    if tamed:
        sig = signature(orient, Subspace.span(report.plus_representatives))
        assert (sig.positive, sig.negative, sig.null) == (1, report.b_plus, 0), \
            "H+ signature is not (1, b+)"
        witness = construct_compatible_form(g, orient, J, report)
    else:
        witness = obstruction_vector(g, orient, J, report)
    return Classification(tamed=tamed, almost_kahler=tamed, integrable=integrable,
                          report=report, witness=witness)


def _positive_axis(orient, space):
    """A vector of ``space`` on which the wedge pairing is positive, if any."""
    basis = list(space.basis)
    if not basis:
        return None
    diag, p = linalg.congruence_diagonalize(pairing_matrix(orient, basis))
    for col, d in enumerate(diag):
        if d > 0:
            vec = KForm.zero(4, 2)
            for i, b in enumerate(basis):
                if p[i][col]:
                    vec = vec + p[i][col] * b
            return vec
    return None


def construct_compatible_form(g, orient, J, report=None):
    """A closed J-invariant form positive on every v ^ Jv."""
    report = report or j_cohomology(g, orient, J)
    if report.h_minus != report.b_plus - 1:
        raise NotTamedError("J is not tamed: h- = b+")
    e = _positive_axis(orient, report.z_plus)
    assert e is not None
    passing = [s * e for s in (1, -1) if is_compatible_with(g, J, s * e)]
    assert len(passing) == 1, "expected exactly one of +-e to be compatible"
    return passing[0]


def construct_taming_form(g, orient, J, beta, report=None):
    """Compatible form plus a closed anti-invariant beta; tames J."""
    if not isinstance(beta, KForm) or beta.k != 2:
        raise ExteriorError("beta must be a 2-form")
    if beta not in cocycles(g, 2):
        raise ValueError("beta is not closed")
    if act_on_2forms(J, beta) != -beta:
        raise ValueError("beta is not J-anti-invariant")
    omega = construct_compatible_form(g, orient, J, report) + beta
    assert is_tamed_by(g, J, omega)
    return omega


def obstruction_vector(g, orient, J, report=None):
    """v != 0 with v ^ Jv a boundary 2-vector; no closed form can tame J.

    A nonzero boundary w in Λ+_J(g) is simple, hence spans a J-invariant
    2-plane; its first factor x gives x ^ Jx, a nonzero multiple of w.
    """
    if report is None:
        _require(g, orient, J)
    bvec = boundaries(g, 2)
    cap = bvec & lambda_plus_vectors(J)
    if cap.dim == 0:
        raise TamedError("B cap Λ+_J(g) = 0: J is tamed, there is no obstruction")
    w = cap.canonical[0]
    assert is_simple(w), "boundary 2-vector is not simple"
    x, _ = factor_simple(w)
    u = wedge(x, J(x))
    assert Subspace.span([w, u]).dim == 1, "x ^ Jx is not proportional to w"
    assert u in bvec
    for z in cocycles(g, 2).basis:
        assert evaluate(u, z) == 0
    return x


def certify_obstruction(g, J, v):
    """Check v != 0, v ^ Jv is a 2-boundary and pairs to zero with all cocycles."""
    if v.k != 1 or not v:
        return False
    u = wedge(v, J(v))
    if not u or u not in boundaries(g, 2):
        return False
    return all(evaluate(u, z) == 0 for z in cocycles(g, 2).basis)


@dataclass(frozen=True)
class ConeVerdict:
    in_compatible_cone: bool
    in_tamed_cone: bool
    plus_part: KForm
    minus_part: KForm
    basis: tuple
    note: str = ""


def cone_membership(g, orient, J, plus_coords, minus_coords=None, classification=None):
    """Decide membership of a class in the compatible and tamed cones.

    ``plus_coords`` are taken on ``report.plus_representatives`` and
    ``minus_coords`` on ``report.minus_representatives``.
    """
    cl = classification or classify(g, orient, J)
    rep = cl.report
    plus_coords = [Fraction(x) for x in plus_coords]
    minus_coords = [Fraction(x) for x in (minus_coords or [0] * rep.h_minus)]
    if len(plus_coords) != rep.h_plus:
        raise ValueError(f"expected {rep.h_plus} H+ coordinates, got {len(plus_coords)}")
    if len(minus_coords) != rep.h_minus:
        raise ValueError(f"expected {rep.h_minus} H- coordinates, got {len(minus_coords)}")
    plus = sum((c * e for c, e in zip(plus_coords, rep.plus_representatives)),
               KForm.zero(4, 2))
    minus = sum((c * e for c, e in zip(minus_coords, rep.minus_representatives)),
                KForm.zero(4, 2))
    basis = tuple(rep.plus_representatives)
    if not cl.tamed:
        return ConeVerdict(False, False, plus, minus, basis, note="NotTamed: cones are empty")
    compatible = linalg.is_positive_definite(taming_gram(J, plus))
    if compatible:
        assert phi_zeta(orient, plus, plus) > 0
        assert phi_zeta(orient, plus, cl.witness) > 0
    return ConeVerdict(compatible, compatible, plus, minus, basis)


def feasibility_oracle(g, orient, J, trials=200, seed=0):
    """Search closed forms for one taming J; negatives need an obstruction certificate.

    Candidates are random rational combinations of a basis of closed
    2-forms, plus +-e for a positive axis e of the closed invariant forms.
    """
    _require(g, orient, J)
    z = list(cocycles(g, 2).basis)
    zp = cocycles(g, 2) & lambda_plus(J)
    candidates = []
    e = _positive_axis(orient, zp)
    if e is not None:
        candidates += [e, -e]
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in z]
        cand = sum((c * b for c, b in zip(coeffs, z)), KForm.zero(4, 2))
        candidates.append(cand)
        if e is not None:
            small = Fraction(1, rng.randint(2, 20))
            candidates.append(e + small * cand)
            candidates.append(-e + small * cand)
    for c in candidates:
        if c and is_tamed_by(g, J, c):
            return True
    try:
        v = obstruction_vector(g, orient, J)
    except TamedError:
        raise RuntimeError("search found no taming form and no obstruction exists; "
                           "increase trials") from None
    if not certify_obstruction(g, J, v):
        raise AssertionError("obstruction certificate failed verification")
    return False
