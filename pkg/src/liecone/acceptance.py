"""Acceptance suite: eleven exact checks, each returning a CriterionResult.

Random cases are drawn from ``random.Random(seed)``; the same seed always
produces the same cases and verdicts.
"""

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg
from .acs import (act_on_2forms, chart_is_valid, integrable_sufficient, is_integrable,
                  lambda_minus, lambda_minus_plucker, lambda_plus, matched_orientation,
                  orientation_sign, random_acs)
from .catalog import catalog_get, catalog_list, family_j
from .exterior import (KForm, KVector, Subspace, basis_indices, evaluate,
                       factor_simple, is_simple, wedge)
from .hodge import (InnerProduct, NotUnimodularError, Orientation, b_plus, codifferential,
                    g_eta, g_zeta, harmonic_space, hodge_decompose, hodge_star,
                    pairing_matrix, phi_eta, phi_zeta, sd_asd_split, signature)
from .lie import (JacobiError, LieAlgebra, betti, boundaries, boundary, ce_d,
                  coboundaries, cocycles, is_unimodular)
from .tameness import (OrientationMismatchError, certify_obstruction, classify,
                       cone_membership, feasibility_oracle, j_cohomology)

DEFAULT_SEED = 20240917
SWEEP_SIZE = 100
STRUCTURAL_CASES = 500

STANDARD = Orientation.standard(4, 1)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ""
    cases: int = 0
    seconds: float = 0.0

    def line(self):
        mark = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{mark}] criterion {self.number:2d}: {self.title} [{self.cases} cases]{extra}"


class Failure(AssertionError):
    pass


def check(cond, message):
    if not cond:
        raise Failure(message)


# random data

def rand_q(rng, num=4, dens=(1, 1, 2, 3)):
    return Fraction(rng.randint(-num, num), rng.choice(dens))


def random_form(rng, n, k, cls=KForm):
    return cls.from_coords(n, k, [rand_q(rng) for _ in basis_indices(n, k)])


def random_metric(rng, n=4):
    """P^T P for a random invertible P; det is a square, so the volume is rational."""
    while True:
        p = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if linalg.det(p):
            return InnerProduct(linalg.matmul(linalg.transpose(p), p))


def random_simple(rng, n=4):
    x = random_form(rng, n, 1, KVector)
    y = random_form(rng, n, 1, KVector)
    return wedge(x, y)


def heisenberg5():
    return LieAlgebra(5, {(1, 2): {5: 1}, (3, 4): {5: 1}}, name="h5")


def filiform6():
    return LieAlgebra.from_brackets(
        6, [((1, 2), {3: 1}), ((1, 3), {4: 1}), ((1, 4), {5: 1}), ((1, 5), {6: 1})],
        name="L6")


def structural_algebras():
    return [catalog_get(n).algebra for n in catalog_list()] + [heisenberg5(), filiform6()]


# shared sweep

class Sweep:
    """Random J on every catalog algebra, classified once and reused."""

    def __init__(self, seed, size=SWEEP_SIZE):
        self.seed = seed
        self.size = size
        self.items = {}
        for name in catalog_list():
            g = catalog_get(name).algebra
            rows = []
            for s in range(size):
                # alternate dense and sparse conjugators; sparse ones reach non-tamed J
                J = random_acs(STANDARD, seed * 1000 + s, sparse=bool(s % 2))
                rows.append((J, classify(g, STANDARD, J)))
            self.items[name] = (g, rows)

    def __iter__(self):
        for name, (g, rows) in self.items.items():
            for J, cl in rows:
                yield name, g, J, cl


_SWEEPS = {}


def sweep(seed):
    if seed not in _SWEEPS:
        _SWEEPS[seed] = Sweep(seed)
    return _SWEEPS[seed]


def _span_mod_b(elements, g):
    return Subspace.span(list(elements) + list(coboundaries(g, 2).basis), like=KForm.zero(4, 2))


def F(key, c=1):
    return KForm(4, 2, {key: c})


# criteria

def criterion_1(seed):
    g = catalog_get("nil3xR").algebra
    J = family_j("nil3xR", "standard")
    cl = classify(g, STANDARD, J)
    rep = cl.report
    check(cl.tamed and cl.almost_kahler, "fixture not tamed")
    check((rep.h_plus, rep.h_minus, rep.b_plus, rep.b2) == (3, 1, 2, 4),
          f"dims {(rep.h_plus, rep.h_minus, rep.b_plus, rep.b2)}")
    plus = [F("12"), F("34"), F("14") - F("23")]
    minus = [F("14") + F("23")]
    check(_span_mod_b(rep.plus_representatives, g) == _span_mod_b(plus, g), "H+ span differs")
    check(_span_mod_b(rep.minus_representatives, g) == _span_mod_b(minus, g), "H- span differs")
    check(tuple(rep.plus_representatives) == tuple(plus), "representative order changed")
    return 1, "h+=3 h-=1 b+=2 b2=4"


def criterion_2(seed):
    g = catalog_get("nil3xR").algebra
    J = family_j("nil3xR", "standard")
    cl = classify(g, STANDARD, J)
    values = sorted({Fraction(p, q) for p in range(-4, 5) for q in (1, 2)})
    count = 0
    for a, b, c in product(values, repeat=3):
        v = cone_membership(g, STANDARD, J, [a, b, c], classification=cl)
        expected = a > 0 and b > 0 and a * b - c * c > 0
        check(v.in_compatible_cone == expected, f"mismatch at {(a, b, c)}")
        check(v.in_tamed_cone == expected, f"tamed cone mismatch at {(a, b, c)}")
        count += 1
    return count, f"{len(values)}^3 grid"


J_AB_PARAMS = [(1, 0), (0, 1), (1, 1), (2, -3), (Fraction(1, 2), Fraction(1, 3))]


def j_ab_lambda_minus(a, b):
    a, b = Fraction(a), Fraction(b)
    first = a * (F("34") - F("12")) - b * (F("23") - F("14")) + (a * a + b * b) * F("13")
    second = a * (F("23") - F("14")) + b * (F("34") - F("12"))
    return Subspace.span([first, second])


def criterion_3(seed):
    g = catalog_get("nil3xR").algebra
    for a, b in J_AB_PARAMS:
        J = family_j("nil3xR", "J_ab", a, b)
        orient = matched_orientation(J)
        lm = lambda_minus(J)
        check(lm == j_ab_lambda_minus(a, b), f"Λ- differs at {(a, b)}")
        check(lm == lambda_minus_plucker(J), f"Plücker formula differs at {(a, b)}")
        check(cocycles(g, 2).contains(lm), f"Λ- not closed at {(a, b)}")
        cl = classify(g, orient, J)
        check(not cl.tamed and cl.integrable, f"verdict wrong at {(a, b)}")
        check(certify_obstruction(g, J, cl.witness), f"bad obstruction at {(a, b)}")
    return len(J_AB_PARAMS), "orientation matched to J"


def criterion_4(seed):
    g = catalog_get("nil4").algebra
    ts = [0, Fraction(1, 2), Fraction(-1, 2), Fraction(3, 4), Fraction(-3, 4)]
    beta = F("14") + F("23")
    check(b_plus(g, STANDARD) == 1, "b+ of nil4 is not 1")
    for t in ts:
        J = family_j("nil4", "J_t", t)
        check(beta in (lambda_minus(J) & cocycles(g, 2)), f"f^14+f^23 not in Λ- ∩ Z at t={t}")
        cl = classify(g, STANDARD, J)
        check(not cl.tamed, f"tamed at t={t}")
        check(certify_obstruction(g, J, cl.witness), f"bad obstruction at t={t}")
    return len(ts), ""


def criterion_5(seed):
    n = 0
    from .tameness import jointly_independent
    for name, g, J, cl in sweep(seed):
        r = cl.report
        check(r.h_plus + r.h_minus == r.b2, f"{name}: h+ + h- != b2")
        check(jointly_independent(g, r), f"{name}: representatives dependent")
        check(r.h_minus in (r.b_plus - 1, r.b_plus), f"{name}: h- out of range")
        n += 1
    return n, f"{SWEEP_SIZE} J per algebra"


def criterion_6(seed):
    n = not_tamed = 0
    for name, g, J, cl in sweep(seed):
        r = cl.report
        cohom = r.h_minus == r.b_plus - 1
        lin = (boundaries(g, 2) & _lambda_plus_vectors(J)).dim == 0
        oracle = feasibility_oracle(g, STANDARD, J, trials=20, seed=seed + n)
        check(cohom == lin == oracle == cl.tamed, f"{name}: verdicts disagree")
        if not cl.tamed:
            not_tamed += 1
            v = cl.witness
            u = wedge(v, J(v))
            check(u in boundaries(g, 2), f"{name}: v^Jv not a boundary")
            check(all(evaluate(u, z) == 0 for z in cocycles(g, 2).basis),
                  f"{name}: v^Jv pairs with a cocycle")
        n += 1
    return n, f"{not_tamed} not tamed"


def _lambda_plus_vectors(J):
    from .acs import lambda_plus_vectors
    return lambda_plus_vectors(J)


def criterion_7(seed):
    n = 0
    counts = {}
    for name, g, J, cl in sweep(seed):
        bp = cl.report.b_plus
        lm_closed = cocycles(g, 2) & lambda_minus(J)
        if bp == 3:
            check(cl.tamed, f"{name}: untamed J with b+ = 3")
        elif bp == 2:
            check(cl.tamed != (lm_closed.dim == 2), f"{name}: tamed XOR Λ- ⊂ Z fails")
            check(cl.tamed or integrable_sufficient(g, J), f"{name}: untamed, Λ- not closed")
            check(cl.tamed or is_integrable(g, J), f"{name}: untamed and not integrable")
        elif bp == 1 and not cl.tamed:
            check(lm_closed.dim > 0, f"{name}: untamed with Λ- ∩ Z = 0")
        counts[bp] = counts.get(bp, 0) + 1
        n += 1
    return n, ", ".join(f"b+={k}: {v}" for k, v in sorted(counts.items(), reverse=True))


def criterion_8(seed):
    n = 0
    for name, g, J, cl in sweep(seed):
        bp = cl.report.b_plus
        z, b = cocycles(g, 2), coboundaries(g, 2)
        check(z.dim == bp + 3, f"{name}: dim Z")
        check(b.dim == 3 - bp, f"{name}: dim B")
        bb = list(b.basis)
        check(all(x == 0 for row in pairing_matrix(STANDARD, bb) for x in row) if bb else True,
              f"{name}: B not isotropic")
        lp = lambda_plus(J)
        check((lp & z).dim == bp + 1, f"{name}: dim(Λ+ ∩ Z)")
        check((lp & b).dim <= 1, f"{name}: dim(Λ+ ∩ B) > 1")
        check((lambda_minus(J) & b).dim == 0, f"{name}: B ∩ Λ- != 0")
        n += 1
    return n, ""


def criterion_9(seed):
    rng = random.Random(seed)
    m = STRUCTURAL_CASES
    algs = structural_algebras()
    # d^2 = 0, boundary^2 = 0, adjointness
    for _ in range(m):
        g = rng.choice(algs)
        k = rng.randint(0, g.n - 2)
        a = random_form(rng, g.n, k)
        check(not ce_d(g, ce_d(g, a)), f"d^2 != 0 on {g.name}")
        w = random_form(rng, g.n, k + 2, KVector)
        check(not boundary(g, boundary(g, w)), f"boundary^2 != 0 on {g.name}")
        w1 = random_form(rng, g.n, k + 1, KVector)
        lhs = evaluate(boundary(g, w1), a)
        rhs = (-1) ** (k + 2) * evaluate(w1, ce_d(g, a))
        check(lhs == rhs, f"adjointness fails on {g.name}")
    # pairings and the G maps
    for _ in range(m):
        n = rng.choice((2, 3, 4, 5))
        o = Orientation.standard(n, rng.choice((1, -1)))
        k = rng.randint(0, n)
        a, b = random_form(rng, n, k), random_form(rng, n, n - k)
        u = random_form(rng, n, k, KVector)
        check(g_zeta(o, g_eta(o, u)) == u and g_eta(o, g_zeta(o, a)) == a, "G maps not inverse")
        lhs = phi_eta(o, g_zeta(o, a), g_zeta(o, b))
        check(lhs == phi_zeta(o, a, b), "G maps preserve the pairing")
        if k * (n - k) % 2 == 0:
            check(lhs == phi_zeta(o, b, a), "G maps preserve the pairing, swapped order")
        beta = random_form(rng, n, n - k)
        check(evaluate(g_zeta(o, a), beta) == evaluate(o.zeta, wedge(beta, a)), "G_zeta pairing identity")
    # star preserves the wedge pairing
    for _ in range(m):
        h = random_metric(rng)
        o = h.adapted_orientation(rng.choice((1, -1)))
        a, b = random_form(rng, 4, 2), random_form(rng, 4, 2)
        check(phi_zeta(o, a, b) == phi_zeta(o, hodge_star(h, o, a), hodge_star(h, o, b)),
              "star does not preserve the pairing")
    # inertia of Λ2 under random changes of basis
    for _ in range(m // 5):
        o = Orientation.standard(4, rng.choice((1, -1)))
        while True:
            basis = [random_form(rng, 4, 2) for _ in range(6)]
            if Subspace.span(basis).dim == 6:
                break
        sig = linalg.signature(pairing_matrix(o, basis))
        check(sig == (3, 3, 0), f"signature of Λ2 is {sig}")
    # Λ± signatures, anti-invariant forms vanish on v ^ Jv
    for s in range(m):
        J = random_acs(STANDARD, rng.randrange(1 << 30), sparse=bool(s % 2))
        sp = signature(STANDARD, lambda_plus(J))
        sm = signature(STANDARD, lambda_minus(J))
        check(tuple(sp) == (1, 3, 0), f"Λ+ signature {tuple(sp)}")
        check(tuple(sm) == (2, 0, 0), f"Λ- not positive definite: {tuple(sm)}")
        v = random_form(rng, 4, 1, KVector)
        vj = wedge(v, J(v))
        check(all(evaluate(vj, x) == 0 for x in lambda_minus(J).basis), "Λ- on v^Jv")
        for chart in ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)):
            if chart_is_valid(J, chart):
                check(lambda_minus_plucker(J, chart) == lambda_minus(J),
                      f"Plücker formula on chart {chart}")
    # simplicity
    for s in range(m):
        u = random_simple(rng) if s % 2 else random_form(rng, 4, 2, KVector)
        simple = is_simple(u)
        check(simple == (not wedge(u, u)), "is_simple disagrees with u^u")
        if simple and u:
            x, y = factor_simple(u)
            check(wedge(x, y) == u, "factorization does not reproduce u")
    return 6 * m + m // 5, "d, boundary, G, star, inertia, J, simplicity"


def criterion_10(seed):
    rng = random.Random(seed + 10)
    h = InnerProduct.euclidean(4)
    o = h.adapted_orientation(1)
    n = 0
    for name in catalog_list():
        g = catalog_get(name).algebra
        if not is_unimodular(g):
            continue
        for p in range(5):
            check(harmonic_space(h, o, g, p).dim == betti(g, p), f"{name}: harmonic dim p={p}")
        for _ in range(40):
            p = rng.randint(0, 3)
            a, b = random_form(rng, 4, p), random_form(rng, 4, p + 1)
            check(h.inner(ce_d(g, a), b) == h.inner(a, codifferential(h, o, g, b)),
                  f"{name}: <da,b> != <a,δb>")
            n += 1
        for _ in range(20):
            alpha, _ = sd_asd_split(h, o, random_form(rng, 4, 2))
            dec = hodge_decompose(h, o, g, alpha)
            check(dec.harmonic + dec.exact + dec.coexact == alpha, f"{name}: parts do not sum")
            ep, em = sd_asd_split(h, o, dec.exact)
            cp, cm = sd_asd_split(h, o, dec.coexact)
            check(ep == cp and em == -cm, f"{name}: exact and coexact halves do not match")
            check(alpha - 2 * ep == dec.harmonic, f"{name}: self-dual part of the exact term does not give the harmonic part")
            check(alpha + 2 * em == dec.harmonic + 2 * dec.exact, f"{name}: anti-self-dual part of the exact term is off")
            n += 1
    return n, ""


def criterion_11(seed):
    bad = LieAlgebra(4, {(1, 2): {2: 1}}, name="aff(R) x R2")
    try:
        classify(bad, STANDARD, family_j("nil3xR", "standard"))
    except NotUnimodularError:
        pass
    else:
        raise Failure("non-unimodular algebra accepted")
    try:
        LieAlgebra(3, {(1, 2): {3: 1}, (1, 3): {1: 1}})
    except JacobiError:
        pass
    else:
        raise Failure("Jacobi violation accepted")
    g = catalog_get("nil3xR").algebra
    J = family_j("nil3xR", "J_ab", 1, 0)
    check(orientation_sign(STANDARD, J) == -1, "fixture orientation changed")
    for fn in (j_cohomology, classify):
        try:
            fn(g, STANDARD, J)
        except OrientationMismatchError:
            pass
        else:
            raise Failure("orientation mismatch accepted")
    return 4, ""


CRITERIA = [
    (1, "nil3xR with the standard J: tamed, h+=3, h-=1, representatives", criterion_1),
    (2, "cone region a>0, b>0, ab-c^2>0 on a rational grid", criterion_2),
    (3, "J_ab family: Λ- span, closedness, integrable, obstruction", criterion_3),
    (4, "J_t family on nil4: not tamed", criterion_4),
    (5, "H2 = H+ (+) H- and h- dichotomy on random J", criterion_5),
    (6, "tameness criteria and feasibility oracle agree", criterion_6),
    (7, "b+ branches on random J", criterion_7),
    (8, "dimension counts for Z, B and their J-parts", criterion_8),
    (9, "structural identities", criterion_9),
    (10, "Hodge theory on unimodular catalog algebras", criterion_10),
    (11, "negative controls", criterion_11),
]


def run_criterion(number, seed=DEFAULT_SEED):
    num, title, fn = CRITERIA[number - 1]
    t0 = time.perf_counter()
    try:
        cases, detail = fn(seed)
        res = CriterionResult(num, title, True, detail, cases)
    except Exception as exc:  # a criterion never aborts the suite
        res = CriterionResult(num, title, False, f"{type(exc).__name__}: {exc}")
    res.seconds = time.perf_counter() - t0
    return res


def run_all(seed=DEFAULT_SEED):
    return [run_criterion(n, seed) for n, _, _ in CRITERIA]
