"""Verification suites: named checks, run in a fixed order.

Each check returns a :class:`Outcome`.  ``PASS``/``FAIL`` lines decide the
exit status; ``NOTE`` lines report statements that are known to be false as
literally stated, together with the numbers that show it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from typing import Callable, Dict, Iterable, List, Tuple

from . import catalan as cat
from . import coinvariant as co
from . import filtration as fl
from .dunkl import (
    CherednikParam,
    cartan_pairing,
    dunkl_apply,
    pairing,
    pairing_recursion,
)
from .irrep import (
    IrrepModel,
    arc_identity_check,
    build_irrep,
    harmonics,
    kernel_degree,
    top_degree_vanishing,
)
from .poly import Poly
from .symgroup import all_permutations, act

SUITES = ("dunkl", "irrep", "filtration", "coinvariant", "catalan")


@dataclass
class Outcome:
    status: str  # PASS, FAIL or NOTE
    detail: str = ""

    @classmethod
    def of(cls, ok: bool, detail: str = "") -> "Outcome":
        return cls("PASS" if ok else "FAIL", detail)


@dataclass
class Check:
    suite: str
    name: str
    run: Callable[[], Outcome]


@dataclass
class Result:
    suite: str
    name: str
    status: str
    detail: str
    seconds: float

    def line(self, timing: bool = False) -> str:
        out = f"{self.name}: {self.status}"
        if self.detail:
            out += f" ({self.detail})"
        if timing:
            out += f" [{self.seconds:.2f}s]"
        return out


# ---------------------------------------------------------------------------
# dunkl

def _random_poly(rng: random.Random, n: int, degree: int, terms: int = 4) -> Poly:
    out = {}
    for _ in range(terms):
        e = [0] * n
        for _ in range(degree):
            e[rng.randrange(n)] += 1
        out[tuple(e)] = Fraction(rng.randint(-5, 5))
    return Poly(n, out)


def _commute(m: int, n: int) -> Outcome:
    p = CherednikParam(m, n)
    rng = random.Random(1)
    for _ in range(3):
        f = _random_poly(rng, n, 4)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                if dunkl_apply(p, i, dunkl_apply(p, j, f)) != dunkl_apply(p, j, dunkl_apply(p, i, f)):
                    return Outcome.of(False, f"y_{i} y_{j} differ")
    return Outcome.of(True)


def _adjoint(m: int, n: int) -> Outcome:
    p = CherednikParam(m, n)
    rng = random.Random(2)
    for _ in range(3):
        f = _random_poly(rng, n, 2)
        g = _random_poly(rng, n, 3)
        for i in range(n):
            if pairing(p, Poly.var(i, n) * f, g) != pairing(p, f, dunkl_apply(p, i + 1, g)):
                return Outcome.of(False)
        if pairing(p, f * Poly.var(0, n), g) != pairing(p, g, f * Poly.var(0, n)):
            return Outcome.of(False, "not symmetric")
    return Outcome.of(True)


def _w_invariant(m: int, n: int) -> Outcome:
    p = CherednikParam(m, n)
    rng = random.Random(3)
    f = _random_poly(rng, n, 3)
    g = _random_poly(rng, n, 3)
    base = pairing(p, f, g)
    return Outcome.of(all(pairing(p, act(w, f), act(w, g)) == base for w in all_permutations(n)))


def _three_halves() -> Outcome:
    # n = 2, c = 3/2: (z, z) = -4, (z^2, z^2) = -16, (z^3, z^3) = 0
    p = CherednikParam(3, 2)
    z = Poly.var(0, 1)
    got = [cartan_pairing(p, z ** k, z ** k) for k in (1, 2, 3)]
    return Outcome.of(got == [-4, -16, 0], f"values {', '.join(map(str, got))}")


def _two_methods(m: int, n: int) -> Outcome:
    p = CherednikParam(m, n)
    model = build_irrep(p)
    for d in range(0, model.top + 2):
        if kernel_degree(p, d, "gram") != kernel_degree(p, d, "generators"):
            return Outcome.of(False, f"degree {d}")
    return Outcome.of(True, f"degrees 0..{model.top + 1}")


def _arc(m: int, n: int) -> Outcome:
    p = CherednikParam(m, n)
    bad = [l for l in range(n + 1) if not arc_identity_check(p, l)]
    return Outcome.of(not bad, f"failing l: {bad}" if bad else f"l = 0..{n}")


def _recursion(m: int, n: int) -> Outcome:
    p = CherednikParam(m, n)
    return Outcome.of(all(pairing_recursion(p, d) for d in range(5)), "degrees 0..4")


def dunkl_checks() -> List[Check]:
    out = [Check("dunkl", "I_{3/2} = (z^3) from pairings", _three_halves)]
    for m, n in ((4, 3), (2, 3), (5, 4)):
        out.append(Check("dunkl", f"commutativity ({m},{n})", lambda m=m, n=n: _commute(m, n)))
    for m, n in ((4, 3), (3, 4)):
        out.append(Check("dunkl", f"adjointness and symmetry ({m},{n})", lambda m=m, n=n: _adjoint(m, n)))
        out.append(Check("dunkl", f"W-invariance ({m},{n})", lambda m=m, n=n: _w_invariant(m, n)))
    for m, n in ((3, 2), (4, 3), (5, 3)):
        out.append(Check("dunkl", f"kernel two methods ({m},{n})", lambda m=m, n=n: _two_methods(m, n)))
        out.append(Check("dunkl", f"arc identity ({m},{n})", lambda m=m, n=n: _arc(m, n)))
    for m, n in ((4, 3), (5, 3)):
        out.append(Check("dunkl", f"pairing recursion ({m},{n})", lambda m=m, n=n: _recursion(m, n)))
    return out


# ---------------------------------------------------------------------------
# irrep

DIMENSION_CASES = ((3, 2), (5, 2), (7, 2), (4, 3), (5, 3), (7, 3), (2, 3), (3, 4), (5, 4))


def _dimension(m: int, n: int) -> Outcome:
    model = build_irrep((m, n))
    return Outcome.of(model.dim == m ** (n - 1), f"dim {model.dim}")


def weight_multiplicities(model: IrrepModel) -> List[int]:
    prof = model.weight_profile()
    return [prof[k] for k in sorted(prof)]


def _profile(m: int, n: int, expected: List[int]) -> Outcome:
    got = weight_multiplicities(build_irrep((m, n)))
    return Outcome.of(got == expected, ",".join(map(str, got)))


def _harmonic_split(m: int, n: int) -> Outcome:
    model = build_irrep((m, n))
    H = harmonics(model)
    a = fl.a_power(model, 1)
    ok = H.dim == factorial(n) and a.intersect(H).dim == 0 and (a + H).dim == model.dim
    return Outcome.of(ok, f"dim H = {H.dim}")


def _vanishing(m: int, n: int) -> Outcome:
    vals = top_degree_vanishing(build_irrep((m, n)))
    stair = tuple(range(1, n))
    bad = [b for b, v in vals.items() if v and tuple(sorted(b)) != stair]
    alive = [b for b, v in vals.items() if v]
    return Outcome.of(not bad and bool(alive), f"{len(alive)} nonzero")


def _round_trip(m: int, n: int) -> Outcome:
    model = build_irrep((m, n))
    return Outcome.of(IrrepModel.from_json(model.to_json()).same_as(model))


def irrep_checks() -> List[Check]:
    out = [Check("irrep", f"dim L ({m},{n}) = {m ** (n - 1)}", lambda m=m, n=n: _dimension(m, n))
           for m, n in DIMENSION_CASES]
    out.append(Check("irrep", "weights (4,3)", lambda: _profile(4, 3, [1, 2, 3, 4, 3, 2, 1])))
    out.append(Check("irrep", "weights (5,3)", lambda: _profile(5, 3, [1, 2, 3, 4, 5, 4, 3, 2, 1])))
    for m, n in ((3, 2), (4, 3), (5, 3), (5, 4)):
        out.append(Check("irrep", f"L = a + H_c, dim H_c = n! ({m},{n})", lambda m=m, n=n: _harmonic_split(m, n)))
    for m, n in ((4, 3), (5, 4)):
        out.append(Check("irrep", f"top-degree vanishing ({m},{n})", lambda m=m, n=n: _vanishing(m, n)))
    out.append(Check("irrep", "JSON round trip (4,3)", lambda: _round_trip(4, 3)))
    return out


# ---------------------------------------------------------------------------
# filtration

MAIN_CASES = ((4, 3), (5, 3), (5, 2), (7, 2))


def _equal(m: int, n: int, first: str, second: str) -> Outcome:
    model = build_irrep((m, n))
    rep = fl.compare(fl.filtration(model, first), fl.filtration(model, second))
    return Outcome.of(rep["equal"], "" if rep["equal"] else f"first discrepancy {rep['first_discrepancy']}")


def late_highest_weight_check() -> Outcome:
    model = build_irrep((4, 3))
    late = fl.late_highest_weight_vectors(model)
    levels = fl.invariant_alg_levels(model)
    dims = [fl.filtration_a(model).level(i).dim for i in range(4)]
    ok = (
        late["outside"] == {3: 1}
        and late["power_sums"][3] == (3, 1, True, True)
        and levels == {0: [3], 2: [3], 3: [2], 4: [3], 6: [3]}
        and dims == [6, 12, 15, 16]
    )
    return Outcome.of(ok, f"F^a dims {dims}; Phi(p3) at level {late['power_sums'][3][1]}")


def _ef(m: int, n: int) -> Outcome:
    model = build_irrep((m, n))
    res = fl.ef_shift_check(model)
    res["highest weights"] = fl.highest_weight_tracking(model)
    res["Y lowers invariant levels"] = fl.dunkl_lowers_invariant_levels(model)
    bad = [k for k, v in res.items() if not v]
    return Outcome.of(not bad, f"failing: {bad}" if bad else f"{len(res)} properties")


def _delta_shifted(m: int, n: int) -> Outcome:
    rep = fl.delta_stability(build_irrep((m, n)))
    return Outcome.of(rep["shifted_parameter"] == [], f"failing i: {rep['shifted_parameter']}")


def _delta_literal(m: int, n: int) -> Outcome:
    rep = fl.delta_stability(build_irrep((m, n)))
    if rep["same_parameter"]:
        return Outcome("NOTE", f"same-parameter reading fails at i = {rep['same_parameter']}")
    return Outcome.of(True)


def _below_one(m: int, n: int) -> Outcome:
    rep = fl.c_less_one_levels(build_irrep((m, n)))
    return Outcome.of(rep["holds"], f"levels {rep['levels']}")


def _below_one_literal(m: int, n: int) -> Outcome:
    rep = fl.c_less_one_levels(build_irrep((m, n)))
    if rep["holds"]:
        return Outcome.of(True)
    bad = [l for l, ok in rep["levels"].items() if not ok]
    return Outcome("NOTE", f"fails at levels {bad}")


def _below_one_reduced(m: int, n: int) -> Outcome:
    rep = fl.c_less_one_levels(build_irrep((m, n)))
    ok = rep["criterion_holds"] and all(rep["invariant_levels"].values())
    return Outcome.of(ok, f"criterion dims {rep['criterion']}")


def _catalan_match(m: int, n: int) -> Outcome:
    model = build_irrep((m, n))
    target = cat.qt_catalan(m, n)
    hits = [c for c in fl.CATALAN_CONVENTIONS if fl.catalan_character(model, c) == target]
    return Outcome.of(bool(hits), f"matching conventions: {hits}")


def filtration_checks() -> List[Check]:
    out = []
    for m, n in MAIN_CASES:
        out.append(Check("filtration", f"F^ind = F^a ({m},{n})", lambda m=m, n=n: _equal(m, n, "ind", "a")))
        out.append(Check("filtration", f"F^alg = F^alg' ({m},{n})", lambda m=m, n=n: _equal(m, n, "alg", "alg-prime")))
    out.append(Check("filtration", "highest weights outside F^a_0 (4,3)", late_highest_weight_check))
    for m, n in ((4, 3), (5, 3), (7, 2)):
        out.append(Check("filtration", f"sl2 compatibilities ({m},{n})", lambda m=m, n=n: _ef(m, n)))
    for m, n in ((4, 3), (5, 3), (7, 3)):
        out.append(Check("filtration", f"delta stability, shifted parameter ({m},{n})",
                         lambda m=m, n=n: _delta_shifted(m, n)))
        out.append(Check("filtration", f"delta stability, same parameter ({m},{n})",
                         lambda m=m, n=n: _delta_literal(m, n)))
    out.append(Check("filtration", "c < 1 level lowering (2,3)", lambda: _below_one(2, 3)))
    out.append(Check("filtration", "c < 1 level lowering on all of L_c (3,4)", lambda: _below_one_literal(3, 4)))
    out.append(Check("filtration", "c < 1 level lowering on invariants, reduced criterion (3,4)",
                     lambda: _below_one_reduced(3, 4)))
    for m, n in ((4, 3), (5, 3), (5, 2)):
        out.append(Check("filtration", f"Catalan character ({m},{n})", lambda m=m, n=n: _catalan_match(m, n)))
    return out


# ---------------------------------------------------------------------------
# coinvariant

def coinvariant_cases(sizes: Iterable[int] = (3, 4)) -> List[Tuple[int, int]]:
    return [(m, n) for n in sizes for m in range(n + 1, 2 * n) if gcd(m, n) == 1]


def _ab(m: int, n: int, key: str) -> Outcome:
    rep = co.ab_report(m, n)
    if key == "rank":
        ok = rep["rank A"] == rep["rank B"] == rep["expected"]
        return Outcome.of(ok, f"rank A = {rep['rank A']}, rank B = {rep['rank B']}")
    return Outcome.of(rep[key])


def _dims(m: int, n: int) -> Outcome:
    rep = co.lattice_check(m, n)
    bad = [e for e in rep.counterexamples if e["identity"].startswith("dim")]
    return Outcome.of(not bad, f"{len([e for e in rep.identities if e['identity'].startswith('dim')])} identities")


def _distributive(m: int, n: int) -> Outcome:
    rep = co.lattice_check(m, n)
    if rep.distributive:
        return Outcome.of(True)
    first = next(e for e in rep.counterexamples if not e["identity"].startswith("dim"))
    return Outcome("NOTE", f"not distributive: {first['identity']} has dims {first['lhs']} vs {first['rhs']}")


def _isotropy(m: int, n: int) -> Outcome:
    rep = co.isotropy_report(m, n)
    diag = co.isotropy_report(m, n, pairing="diagonal")
    return Outcome.of(rep["lagrangian"], f"dim {rep['dimension']} of {2 * rep['half']}; diagonal pairing "
                      f"{'isotropic' if diag['isotropic'] else 'not isotropic'}")


def coinvariant_checks() -> List[Check]:
    out = []
    for n in (3, 4, 5):
        out.append(Check("coinvariant", f"power identity n={n}", lambda n=n: Outcome.of(co.power_identity(n))))
        out.append(Check("coinvariant", f"pair identity n={n}", lambda n=n: Outcome.of(co.pair_identity(n))))
    for m, n in coinvariant_cases():
        out.append(Check("coinvariant", f"AB=0 (n={n},m={m})", lambda m=m, n=n: _ab(m, n, "AB = 0")))
        out.append(Check("coinvariant", f"rank A = rank B = (2n-m)n!/2 (n={n},m={m})", lambda m=m, n=n: _ab(m, n, "rank")))
        out.append(Check("coinvariant", f"Im A = Ker B (n={n},m={m})", lambda m=m, n=n: _ab(m, n, "Im A = Ker B")))
        out.append(Check("coinvariant", f"V_i dimension formulas (n={n},m={m})", lambda m=m, n=n: _dims(m, n)))
        out.append(Check("coinvariant", f"V_i distributivity (n={n},m={m})", lambda m=m, n=n: _distributive(m, n)))
        out.append(Check("coinvariant", f"Im A Lagrangian (n={n},m={m})", lambda m=m, n=n: _isotropy(m, n)))
    for n in (2, 3, 4, 5):
        out.append(Check("coinvariant", f"Springer dimension n={n} is {factorial(n) // 2 or 1}",
                         lambda n=n: Outcome.of(co.springer_min_dim(n) == max(factorial(n) // 2, 1))))
    for n in (3, 4):
        def ker(n=n):
            x = Poly.gens(n)
            K = co.multiplication_kernel(n, x[0] - x[1])
            return Outcome.of(K == co.ker_difference(n) and K.rank == factorial(n - 1), f"dim {K.rank}")
        out.append(Check("coinvariant", f"Ker(x1-x2) = psi span (n={n})", ker))
    for m, n in ((5, 3), (7, 4)):
        out.append(Check("coinvariant", f"Dunkl side matches Ker B ({m},{n})",
                         lambda m=m, n=n: Outcome.of(co.dunkl_bridge(m, n)["equal"])))
    return out


# ---------------------------------------------------------------------------
# catalan

def catalan_checks() -> List[Check]:
    out = []
    for m, n in ((3, 2), (4, 3), (5, 3), (5, 4), (7, 3), (7, 5)):
        count = cat.rational_catalan(m, n)
        out.append(Check("catalan", f"count ({m},{n}) = {count}",
                         lambda m=m, n=n, count=count: Outcome.of(len(cat.enumerate_paths(m, n)) == count)))
    for m, n in ((4, 3), (5, 3), (7, 4)):
        def sym(m=m, n=n):
            C = cat.qt_catalan(m, n)
            return Outcome.of(C == C.swap_qt() and C == cat.qt_catalan(n, m))
        out.append(Check("catalan", f"q,t symmetry ({m},{n})", sym))
    for m, n in ((3, 2), (4, 3), (5, 3)):
        def law(m=m, n=n):
            return Outcome.of(cat.rational_catalan(m, n) == build_irrep((m, n)).invariants().dim)
        out.append(Check("catalan", f"count = dim eL ({m},{n})", law))
    return out


REGISTRY: Dict[str, Callable[[], List[Check]]] = {
    "dunkl": dunkl_checks,
    "irrep": irrep_checks,
    "filtration": filtration_checks,
    "coinvariant": coinvariant_checks,
    "catalan": catalan_checks,
}


def checks(suite: str = "all") -> List[Check]:
    if suite == "all":
        return [c for s in SUITES for c in REGISTRY[s]()]
    if suite not in REGISTRY:
        raise KeyError(f"unknown suite {suite!r}; expected all or one of {', '.join(SUITES)}")
    return REGISTRY[suite]()


def run_check(check: Check) -> Result:
    t0 = time.perf_counter()
    try:
        out = check.run()
    except Exception as exc:  # a crash is a failure, reported with its type
        out = Outcome("FAIL", f"{type(exc).__name__}: {exc}")
    return Result(check.suite, check.name, out.status, out.detail, time.perf_counter() - t0)


def run(suite: str = "all") -> List[Result]:
    return [run_check(c) for c in checks(suite)]


def summary(results: List[Result]) -> Dict[str, int]:
    out = {"PASS": 0, "FAIL": 0, "NOTE": 0}
    for r in results:
        out[r.status] += 1
    return out
