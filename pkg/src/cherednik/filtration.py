"""Filtrations on L_c: power, Kazhdan, algebraic and inductive.

All subspaces are graded by polynomial degree d; the weight of degree d is
d - mu.  Levels are stored until they exhaust L_c, after which every higher
level is the whole module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .dunkl import CherednikParam, monomials, project, vandermonde
from .irrep import GradedSubspace, IrrepModel, build_irrep
from .linalg import Subspace, ZERO, matvec, nullspace, solve_left
from .poly import Poly, power_sum
from .qt import QtPolynomial
from .symgroup import Partition, partitions


class ChainInvalid(ValueError):
    pass


class ModelMismatch(ValueError):
    pass


class NotInvariant(ValueError):
    pass


class DimensionMismatch(ArithmeticError):
    pass


class FiltrationUndefined(ValueError):
    pass


KINDS = ("a", "alg", "alg-prime", "ind", "ind-prime")


@dataclass
class Filtration:
    model: IrrepModel
    kind: str
    start: int
    levels: List[GradedSubspace]

    def level(self, i: int) -> GradedSubspace:
        if i < self.start:
            return GradedSubspace.zero(self.model.dims)
        if i - self.start >= len(self.levels):
            return GradedSubspace.full(self.model.dims)
        return self.levels[i - self.start]

    @property
    def stop(self) -> int:
        """First index at which the filtration is exhausted."""
        return self.start + len(self.levels) - 1

    def indices(self) -> range:
        return range(self.start, self.stop + 1)

    def table(self) -> Dict[int, Dict[int, int]]:
        """level -> weight -> dimension."""
        out = {}
        for i in self.indices():
            lev = self.level(i)
            out[i] = {self.model.weight(d): lev[d].rank for d in self.model.degrees}
        return out

    def is_ascending(self) -> bool:
        return all(self.level(i + 1).contains(self.level(i)) for i in range(self.start - 1, self.stop + 1))

    def is_exhaustive(self) -> bool:
        return self.level(self.stop).dim == self.model.dim

    def level_of(self, d: int, v: Sequence[Fraction]) -> Optional[int]:
        if not any(v):
            return None
        for i in self.indices():
            if self.level(i)[d].contains(v):
                return i
        raise AssertionError("filtration is not exhaustive")

    def restrict(self, S: GradedSubspace, kind: Optional[str] = None) -> "Filtration":
        return Filtration(self.model, kind or self.kind, self.start, [lev.intersect(S) for lev in self.levels])

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "m": self.model.m,
            "n": self.model.n,
            "levels": [
                {"level": i, "weight": w, "dimension": dim}
                for i, row in self.table().items()
                for w, dim in sorted(row.items())
            ],
        }


def _trim(model: IrrepModel, kind: str, start: int, levels: List[GradedSubspace]) -> Filtration:
    """Drop zero levels at the start and repeated full levels at the end."""
    while levels and not levels[0].dim and len(levels) > 1:
        levels = levels[1:]
        start += 1
    out = []
    for lev in levels:
        out.append(lev)
        if lev.dim == model.dim:
            break
    return Filtration(model, kind, start, out)


# ---------------------------------------------------------------------------
# powers of the augmentation ideal

def invariant_generators(model: IrrepModel) -> List[Poly]:
    return [project(power_sum(k, model.n)) for k in range(2, model.n + 1)]


def a_power(model: IrrepModel, j: int) -> GradedSubspace:
    if j < 0:
        raise ValueError("j must be non-negative")
    key = ("a_power", j)
    if key in model._cache:
        return model._cache[key]
    if j == 0:
        res = GradedSubspace.full(model.dims)
    else:
        prev = a_power(model, j - 1)
        rows: Dict[int, list] = {d: [] for d in model.degrees}
        for g in invariant_generators(model):
            e = g.homogeneous_degree()
            for d in model.degrees:
                if d + e > model.top or not prev[d].rows:
                    continue
                mat = model.mult_matrix(g, d)
                rows[d + e].extend(matvec(mat, v) for v in prev[d].rows)
        res = GradedSubspace(model.dims, {d: Subspace(model.dim_at(d), rs) for d, rs in rows.items()})
    model._cache[key] = res
    return res


def nilpotence_index(model: IrrepModel) -> int:
    """Least j with a^j = 0 in L_c."""
    j = 0
    while a_power(model, j).dim:
        j += 1
    return j


def ortho_complement(model: IrrepModel, S: GradedSubspace) -> GradedSubspace:
    return model.orthogonal(S)


def a_perp(model: IrrepModel, j: int) -> GradedSubspace:
    key = ("a_perp", j)
    if key not in model._cache:
        model._cache[key] = ortho_complement(model, a_power(model, j))
    return model._cache[key]


def annihilator_space(model: IrrepModel, j: int) -> GradedSubspace:
    """Vectors killed by every product of j positive-degree invariants evaluated at Y."""
    if j < 0:
        raise ValueError("j must be non-negative")
    key = ("ann", j)
    if key in model._cache:
        return model._cache[key]
    if j == 0:
        res = GradedSubspace.zero(model.dims)
    else:
        prev = annihilator_space(model, j - 1)
        pieces = {}
        for d in model.degrees:
            S = Subspace.full(model.dim_at(d))
            for g in invariant_generators(model):
                e = g.homogeneous_degree()
                if d - e < 0:
                    continue
                S = S.intersect(prev[d - e].preimage(model.operator_matrix(g, d)))
            pieces[d] = S
        res = GradedSubspace(model.dims, pieces)
    model._cache[key] = res
    return res


# ---------------------------------------------------------------------------
# the power filtration and its Kazhdan regradings

def filtration_a(model: IrrepModel) -> Filtration:
    key = ("F", "a")
    if key not in model._cache:
        levels = []
        i = 0
        while True:
            levels.append(model.fourier(a_perp(model, i + 1)))
            if levels[-1].dim == model.dim:
                break
            i += 1
        model._cache[key] = Filtration(model, "a", 0, levels)
    return model._cache[key]


def kazhdan(filt: Filtration, kind: Optional[str] = None) -> Filtration:
    """K_i = sum over 2j + k <= i of the weight-k part of F_j."""
    model = filt.model
    if kind is None:
        kind = {"a": "alg", "ind": "ind-prime"}.get(filt.kind, filt.kind + "-kazhdan")
    weights = [model.weight(d) for d in model.degrees]
    lo = min(2 * filt.start + k for k in weights)
    hi = max(2 * filt.stop + k for k in weights)
    levels = []
    for i in range(lo, hi + 1):
        pieces = {}
        for d in model.degrees:
            k = model.weight(d)
            j = (i - k) // 2
            pieces[d] = filt.level(j)[d]
        levels.append(GradedSubspace(model.dims, pieces))
    return _trim(model, kind, lo, levels)


def filtration_alg(model: IrrepModel) -> Filtration:
    return kazhdan(filtration_a(model), "alg")


def filtration_alg_prime(model: IrrepModel) -> Filtration:
    """Weight-k part of level i is the orthocomplement of a^{J}(k), J = floor((i + k)/2) + 1."""
    weights = [model.weight(d) for d in model.degrees]
    top_j = nilpotence_index(model)
    lo = min(-k - 2 for k in weights)
    hi = max(2 * top_j - k for k in weights)
    levels = []
    for i in range(lo, hi + 1):
        pieces = {}
        for d in model.degrees:
            k = model.weight(d)
            J = max((i + k) // 2 + 1, 0)
            pieces[d] = a_perp(model, J)[d]
        levels.append(GradedSubspace(model.dims, pieces))
    return _trim(model, "alg-prime", lo, levels)


# ---------------------------------------------------------------------------
# inductive filtration

def fraction_chain(p: CherednikParam | Tuple[int, int]) -> List[CherednikParam]:
    """c, then c - 1 while c > 1, flip m/n -> n/m while c < 1, down to numerator 1."""
    if not isinstance(p, CherednikParam):
        m, n = p
        from math import gcd

        if m < 1 or n < 1 or gcd(m, n) != 1:
            raise ChainInvalid(f"{m}/{n} is not a reduced positive fraction")
        p = _Param(m, n)
    chain = [p]
    m, n = p.m, p.n
    while m != 1:
        if m > n:
            m -= n
        else:
            m, n = n, m
        chain.append(_Param(m, n))
    return chain


def _Param(m: int, n: int):
    if n >= 2:
        return CherednikParam(m, n)
    return _TrivialParam(m, n)


@dataclass(frozen=True)
class _TrivialParam:
    # n = 1 never appears in a chain that starts from n >= 2 coprime; kept for completeness
    m: int
    n: int

    @property
    def c(self) -> Fraction:
        return Fraction(self.m, self.n)


def delta_h(n: int) -> Poly:
    return project(vandermonde(n))


def symmetric_representative(model: IrrepModel, d: int, v: Sequence[Fraction]) -> Poly:
    """A W-invariant Cartan element of degree d whose class is the invariant vector v."""
    lams, vecs = invariant_power_sum_classes(model, d)
    coeffs = solve_left(vecs, v, model.dim_at(d)) if vecs else None
    if coeffs is None:
        raise NotInvariant("vector is not in the invariant part")
    rep = Poly.zero(model.r)
    for lam, a in zip(lams, coeffs):
        if a:
            q = Poly.const(a, model.n)
            for k in lam.parts:
                q = q * power_sum(k, model.n).scale(Fraction(1, model.n))
            rep = rep + project(q)
    return rep


def shift_lift(model_prev: IrrepModel, model: IrrepModel, d: int, v: Sequence[Fraction]) -> Tuple[int, List[Fraction]]:
    """Class of delta times an invariant representative of the vector v of L_{c-1}.

    delta I_{c-1}^W lies in I_c, so the class does not depend on the
    representative as long as it is symmetric.
    """
    if model.n != model_prev.n or model.m != model_prev.m + model.n:
        raise ModelMismatch("expected models for c - 1 and c with the same n")
    if not model_prev.invariants()[d].contains(v):
        raise NotInvariant("shift is defined on invariant vectors")
    rep = symmetric_representative(model_prev, d, v)
    top = model.n * (model.n - 1) // 2 + d
    return top, model.reduce(delta_h(model.n) * rep, top)


def _closure(model: IrrepModel, S: GradedSubspace, matrices) -> GradedSubspace:
    """Smallest subspace containing S and stable under the given degree maps."""
    pieces = dict(S.pieces)
    frontier = {d: list(S[d].rows) for d in model.degrees}
    while any(frontier.values()):
        new_frontier = {d: [] for d in model.degrees}
        for d, vecs in frontier.items():
            for shift, mat_of in matrices:
                t = d + shift
                if not vecs or not 0 <= t <= model.top:
                    continue
                mat = mat_of(d)
                if not mat:
                    continue
                for v in vecs:
                    w = matvec(mat, v)
                    if any(w) and not pieces[t].contains(w):
                        pieces[t] = pieces[t] + Subspace(model.dim_at(t), [w])
                        new_frontier[t].append(w)
        frontier = new_frontier
    return GradedSubspace(model.dims, pieces)


def x_closure(model: IrrepModel, S: GradedSubspace) -> GradedSubspace:
    return _closure(model, S, [(1, lambda d, k=k: model.x_matrix(d, k)) for k in range(1, model.n)])


def w_closure(model: IrrepModel, S: GradedSubspace) -> GradedSubspace:
    return _closure(model, S, [(0, lambda d, k=k: model.w_matrix(d, k)) for k in range(1, model.n)])


def y_steps(model: IrrepModel, S: GradedSubspace, count: int) -> List[GradedSubspace]:
    """[S, S + Y S, S + Y S + Y^2 S, ...] up to ``count`` applications."""
    out = [S]
    cur = S
    for _ in range(count):
        rows: Dict[int, list] = {d: list(cur[d].rows) for d in model.degrees}
        for d in model.degrees:
            if d == 0 or not cur[d].rows:
                continue
            for k in range(1, model.n):
                mat = model.y_matrix(d, k)
                rows[d - 1].extend(matvec(mat, v) for v in cur[d].rows)
        cur = GradedSubspace(model.dims, {d: Subspace(model.dim_at(d), rs) for d, rs in rows.items()})
        out.append(cur)
    return out


def invariant_power_sum_classes(
    model: IrrepModel, d: int, max_part: Optional[int] = None
) -> Tuple[List[Partition], List[List[Fraction]]]:
    """Classes in L_d of the products of normalized power sums p_k / n over partitions of d.

    Parts range over 2..max_part (default n).
    """
    if max_part is None:
        max_part = model.n
    if d == 0:
        lams = [Partition(())]
    else:
        lams = [lam for lam in partitions(d, max_part) if min(lam.parts) >= 2]
    vecs = []
    for lam in lams:
        q = Poly.const(1, model.n)
        for k in lam.parts:
            q = q * power_sum(k, model.n).scale(Fraction(1, model.n))
        vecs.append(model.reduce(project(q), d))
    return lams, vecs


@dataclass
class FlipMap:
    """p_lambda -> p_lambda between the invariant parts of two models with swapped m, n."""

    source: IrrepModel
    target: IrrepModel
    # degree -> (source basis vectors, their images)
    pieces: Dict[int, Tuple[List[List[Fraction]], List[List[Fraction]]]]
    consistent: bool

    def apply(self, d: int, v: Sequence[Fraction]) -> List[Fraction]:
        src, img = self.pieces[d]
        coeffs = solve_left(src, v, self.source.dim_at(d))
        if coeffs is None:
            raise NotInvariant("vector is not in the span of the power-sum classes")
        out = [ZERO] * self.target.dim_at(d)
        for a, w in zip(coeffs, img):
            if a:
                out = [x + a * y for x, y in zip(out, w)]
        return out

    def transport(self, S: GradedSubspace) -> GradedSubspace:
        return GradedSubspace(
            self.target.dims,
            {d: Subspace(self.target.dim_at(d), [self.apply(d, v) for v in S[d].rows]) for d in self.target.degrees},
        )


def flip(source: IrrepModel, target: IrrepModel) -> FlipMap:
    """Degree-wise map between invariant parts matching normalized power-sum products.

    The class of prod_i p_{k_i}(x_1..x_n)/n goes to the class of
    prod_i p_{k_i}(x_1..x_m)/m, for parts 2 <= k_i <= min(m, n).  With these
    normalizations the map is a ring isomorphism; plain p_lambda -> p_lambda
    is not compatible with the relations.  ``consistent`` records that the
    linear relations among the products coincide on both sides and that the
    products span both invariant parts, which makes the map well defined and
    bijective.
    """
    if (source.m, source.n) != (target.n, target.m):
        raise ModelMismatch("flip needs the models for m/n and n/m")
    pieces = {}
    consistent = source.top == target.top
    inv_src = source.invariants()
    inv_tgt = target.invariants()
    for d in source.degrees:
        if inv_src[d].rank != inv_tgt[d].rank:
            raise DimensionMismatch(f"invariant parts differ in degree {d}")
        k = min(source.n, target.n)
        _, src = invariant_power_sum_classes(source, d, k)
        _, tgt = invariant_power_sum_classes(target, d, k)
        if _relations(src, source.dim_at(d)) != _relations(tgt, target.dim_at(d)):
            consistent = False
        if Subspace(source.dim_at(d), src) != inv_src[d] or Subspace(target.dim_at(d), tgt) != inv_tgt[d]:
            consistent = False
        chosen: List[int] = []
        for idx, v in enumerate(src):
            if Subspace(source.dim_at(d), [src[i] for i in chosen] + [v]).rank > len(chosen):
                chosen.append(idx)
        pieces[d] = ([src[i] for i in chosen], [tgt[i] for i in chosen])
    return FlipMap(source, target, pieces, consistent)


def _relations(vecs: List[List[Fraction]], dim: int) -> Subspace:
    """Linear relations among the given vectors, as a subspace of Q^len(vecs)."""
    cols = [[v[i] for v in vecs] for i in range(dim)]
    return Subspace(len(vecs), nullspace(cols, len(vecs)))


def _invariant_filtration_levels(p: CherednikParam, upto: int) -> List[GradedSubspace]:
    """[e F^ind_0, ..., e F^ind_upto] on the invariant part of L_p."""
    model = build_irrep(p)
    inv = model.invariants()
    if p.m == 1:
        return [inv] * (upto + 1)
    if p.m > p.n:
        filt = filtration_ind(model)
        return [filt.level(j).intersect(inv) for j in range(upto + 1)]
    # c < 1: transport from n/m through the power-sum correspondence
    other = CherednikParam(p.n, p.m)
    fmap = flip(build_irrep(other), model)
    if not fmap.consistent:
        raise ChainInvalid(f"power-sum correspondence between {other} and {p} is not well defined")
    return [fmap.transport(S) for S in _invariant_filtration_levels(other, upto)]


def filtration_ind(model: IrrepModel) -> Filtration:
    """F_j = sum_{a + b = j} C[x] W C[y]_{<= a} delta e F_b(L_{c-1}), for c > 1."""
    p = model.param
    if p.m < p.n:
        raise FiltrationUndefined(
            f"the inductive filtration is defined on all of L_c only for m > n; "
            f"for {p} only the invariant part carries it"
        )
    key = ("F", "ind")
    if key in model._cache:
        return model._cache[key]
    if p.m == 1:
        filt = Filtration(model, "ind", 0, [GradedSubspace.full(model.dims)])
        model._cache[key] = filt
        return filt
    prev_p = CherednikParam(p.m - p.n, p.n)
    prev = build_irrep(prev_p)
    # enough levels: the inductive levels of L_c never exceed the dimension
    bound = model.dim
    inv_levels = _invariant_filtration_levels(prev_p, bound)
    lifted = []
    for S in inv_levels:
        rows: Dict[int, list] = {d: [] for d in model.degrees}
        for d in prev.degrees:
            for v in S[d].rows:
                t, w = shift_lift(prev, model, d, v)
                if t <= model.top:
                    rows[t].append(w)
        lifted.append(GradedSubspace(model.dims, {d: Subspace(model.dim_at(d), rs) for d, rs in rows.items()}))
    levels: List[GradedSubspace] = []
    j = 0
    while True:
        acc = GradedSubspace.zero(model.dims)
        for b in range(j + 1):
            ys = y_steps(model, lifted[b], j - b)[-1]
            acc = acc + x_closure(model, w_closure(model, ys))
        levels.append(acc)
        if acc.dim == model.dim:
            break
        if j > bound:
            raise AssertionError("inductive filtration failed to exhaust L_c")
        j += 1
    filt = Filtration(model, "ind", 0, levels)
    model._cache[key] = filt
    return filt


def filtration(model: IrrepModel, kind: str) -> Filtration:
    if kind == "a":
        return filtration_a(model)
    if kind == "alg":
        return filtration_alg(model)
    if kind == "alg-prime":
        return filtration_alg_prime(model)
    if kind == "ind":
        return filtration_ind(model)
    if kind == "ind-prime":
        return kazhdan(filtration_ind(model), "ind-prime")
    raise ValueError(f"unknown filtration kind {kind!r}; expected one of {', '.join(KINDS)}")


# ---------------------------------------------------------------------------
# comparison and characters

def shifted(filt: Filtration, by: int = 1) -> Filtration:
    """The same levels re-indexed so that level i becomes level i + by."""
    return Filtration(filt.model, filt.kind, filt.start + by, list(filt.levels))


def compare(first: Filtration, second: Filtration) -> dict:
    """Level-by-level, weight-by-weight comparison of two filtrations on one model."""
    if first.model is not second.model and not first.model.same_as(second.model):
        raise ModelMismatch("filtrations live on different models")
    model = first.model
    lo = min(first.start, second.start)
    hi = max(first.stop, second.stop)
    rows = []
    first_diff = None
    for i in range(lo, hi + 1):
        A, B = first.level(i), second.level(i)
        for d in model.degrees:
            equal = A[d] == B[d]
            rows.append({
                "level": i,
                "weight": model.weight(d),
                "dim_first": A[d].rank,
                "dim_second": B[d].rank,
                "equal": equal,
            })
            if not equal and first_diff is None:
                first_diff = (i, model.weight(d))
    return {
        "m": model.m,
        "n": model.n,
        "kinds": [first.kind, second.kind],
        "equal": first_diff is None,
        "first_discrepancy": first_diff,
        "rows": rows,
    }


def _component(model: IrrepModel, component) -> Tuple[Optional[GradedSubspace], int]:
    """(isotypic subspace or None for everything, dimension of the irreducible)."""
    if component is None or component == "all":
        return None, 1
    if isinstance(component, int):
        sigma = Partition.hook(model.n, component)
    elif isinstance(component, Partition):
        sigma = component
    else:
        sigma = Partition(tuple(component))
    if sigma.size != model.n:
        raise ValueError(f"{sigma} is not a partition of {model.n}")
    if sigma.parts == (model.n,):
        return model.invariants(), 1
    return model.isotypic(sigma), sigma.dimension()


def gr_character(model: IrrepModel, filt: Filtration, component=None) -> QtPolynomial:
    """sum of q^weight t^level over the associated graded, counted with multiplicity.

    ``component`` is None/"all", a hook index i (the partition (n-i, 1^i)) or a
    partition of n.
    """
    if filt.model is not model:
        raise ModelMismatch("filtration belongs to another model")
    iso, size = _component(model, component)
    terms: Dict[Tuple[int, int, int], int] = {}
    for d in model.degrees:
        prev = 0
        for i in filt.indices():
            piece = filt.level(i)[d]
            if iso is not None:
                piece = piece.intersect(iso[d])
            dim = piece.rank
            if dim > prev:
                if (dim - prev) % size:
                    raise ArithmeticError("level is not stable under the symmetric group")
                key = (model.weight(d), i, 0)
                terms[key] = terms.get(key, 0) + (dim - prev) // size
            prev = dim
    return QtPolynomial(terms)


def superpolynomial(model: IrrepModel, filt: Filtration, convention: Optional[str] = None) -> QtPolynomial:
    """a^{(m-1)(n-1)} sum_i a^{2i} (graded character of the hook (n-i, 1^i)).

    With a ``convention`` from CATALAN_CONVENTIONS the (weight, level)
    exponents are rewritten as for the Catalan comparison.
    """
    out = QtPolynomial()
    base = (model.m - 1) * (model.n - 1)
    for i in range(model.n):
        out = out + gr_character(model, filt, i) * QtPolynomial.monomial(a=base + 2 * i)
    if convention is not None:
        fn = CATALAN_CONVENTIONS[convention]
        out = out.map_exponents(lambda w, l, a: (*fn(w, l), a))
    return out


# Conventions relating (weight w, level l) of gr F^a on the invariants to
# monomials q^x t^y.  The Kazhdan pairings use K = 2l + w and send (w, K) to
# ((K + w)/2, (K - w)/2) = (w + l, l), or to its swap.
CATALAN_CONVENTIONS = {
    "weight-level": lambda w, l: (w, l),
    "level-weight": lambda w, l: (l, w),
    "kazhdan": lambda w, l: (w + l, l),
    "kazhdan-swapped": lambda w, l: (l, w + l),
}


def catalan_character(model: IrrepModel, convention: str) -> QtPolynomial:
    """Invariant graded character of F^a rewritten under a named convention."""
    fn = CATALAN_CONVENTIONS[convention]
    ch = gr_character(model, filtration_a(model), None if model.n == 1 else Partition((model.n,)))
    return ch.map_exponents(lambda w, l, a: (*fn(w, l), a))


# ---------------------------------------------------------------------------
# structural checks

def highest_weight_space(model: IrrepModel) -> GradedSubspace:
    """Kernel of e in every degree."""
    pieces = {}
    for d in model.degrees:
        if d + 2 > model.top:
            pieces[d] = Subspace.full(model.dim_at(d))
        else:
            E = model.e_matrix(d)
            pieces[d] = Subspace(model.dim_at(d), nullspace(E, model.dim_at(d)))
    return GradedSubspace(model.dims, pieces)


def _maps_into(model: IrrepModel, S: GradedSubspace, T: GradedSubspace, shift: int, mat_of) -> bool:
    for d in model.degrees:
        t = d + shift
        if not S[d].rows or not 0 <= t <= model.top:
            continue
        mat = mat_of(d)
        if not all(T[t].contains(matvec(mat, v)) for v in S[d].rows):
            return False
    return True


def ef_shift_check(model: IrrepModel) -> Dict[str, bool]:
    """e lowers, f raises the power filtration by one; both preserve F^alg; Fourier fixes F^alg."""
    Fa = filtration_a(model)
    Falg = filtration_alg(model)
    e_of, f_of = model.e_matrix, model.f_matrix
    res = {
        "e lowers F^a": all(_maps_into(model, Fa.level(i), Fa.level(i - 1), 2, e_of) for i in Fa.indices()),
        "f raises F^a": all(_maps_into(model, Fa.level(i), Fa.level(i + 1), -2, f_of) for i in Fa.indices()),
        "e preserves F^alg": all(_maps_into(model, Falg.level(i), Falg.level(i), 2, e_of) for i in Falg.indices()),
        "f preserves F^alg": all(_maps_into(model, Falg.level(i), Falg.level(i), -2, f_of) for i in Falg.indices()),
        "Fourier fixes F^alg": all(model.fourier(Falg.level(i)) == Falg.level(i) for i in Falg.indices()),
    }
    return res


def highest_weight_tracking(model: IrrepModel) -> bool:
    """A highest-weight vector entering F^a at level j has f^i v entering at j + i, and
    f^i v stays at the Kazhdan level of v."""
    Fa = filtration_a(model)
    Falg = filtration_alg(model)
    hw = highest_weight_space(model)
    for d in model.degrees:
        for v in hw[d].rows:
            j = Fa.level_of(d, v)
            K = Falg.level_of(d, v)
            cur, deg, i = v, d, 0
            while any(cur):
                if Fa.level_of(deg, cur) != j + i or Falg.level_of(deg, cur) != K:
                    return False
                if deg - 2 < 0:
                    break
                cur = matvec(model.f_matrix(deg), cur)
                deg -= 2
                i += 1
    return True


def dunkl_lowers_invariant_levels(model: IrrepModel) -> bool:
    """Y_k maps the invariant part of (a^{i+1})^perp into (a^i)^perp for every i >= 1."""
    inv = model.invariants()
    top = nilpotence_index(model)
    for i in range(1, top + 1):
        S = a_perp(model, i + 1).intersect(inv)
        T = a_perp(model, i)
        for k in range(1, model.n):
            if not _maps_into(model, S, T, -1, lambda d, k=k: model.y_matrix(d, k)):
                return False
    return True


def delta_stability(model: IrrepModel) -> dict:
    """Multiplication by delta on invariant orthocomplements of powers of a.

    ``same_parameter`` lists the i for which delta ((a^i)^perp_c)^W is not
    contained in (a^i)^perp_c.  ``shifted_parameter`` lists the i for which
    delta ((a^i)^perp_{c-1})^W, carried into L_c, is not contained in
    (a^i)^perp_c.  The second needs c > 1.
    """
    dl = delta_h(model.n)
    shift = dl.homogeneous_degree()
    inv = model.invariants()
    top = nilpotence_index(model)
    same = []
    for i in range(1, top + 1):
        P = a_perp(model, i)
        if not _maps_into(model, P.intersect(inv), P, shift, lambda d: model.mult_matrix(dl, d)):
            same.append(i)
    out = {"m": model.m, "n": model.n, "same_parameter": same, "shifted_parameter": None}
    p = model.param
    if p.m > p.n:
        prev = build_irrep(CherednikParam(p.m - p.n, p.n))
        shifted_bad = []
        for i in range(1, top + 1):
            S = a_perp(prev, i).intersect(prev.invariants())
            P = a_perp(model, i)
            ok = True
            for d in prev.degrees:
                for v in S[d].rows:
                    t, w = shift_lift(prev, model, d, v)
                    if t <= model.top and not P[t].contains(w):
                        ok = False
            if not ok:
                shifted_bad.append(i)
        out["shifted_parameter"] = shifted_bad
    return out


def c_less_one_levels(model: IrrepModel) -> dict:
    """Level behaviour of the Dunkl differences on the power filtration for c < 1.

    ``levels[l]`` records whether every Y_k sends (a^{l+1})^perp into
    (a^l)^perp, i.e. lowers the power-filtration level of the Fourier image
    by one.  ``invariant_levels`` restricts the source to invariants.
    ``criterion[l]`` is the dimension of the space of phi in
    (a^{l+1})^perp cap a^l with every Y_k phi in a^l; the argument for the
    level bound reduces to this space being zero.
    """
    p = model.param
    if p.m > p.n:
        raise ValueError("this check concerns c < 1")
    top = nilpotence_index(model)
    inv = model.invariants()

    def lowers(S, T):
        return all(_maps_into(model, S, T, -1, lambda d, k=k: model.y_matrix(d, k)) for k in range(1, model.n))

    levels, invariant_levels, criterion = {}, {}, {}
    for ell in range(1, top + 1):
        S, T = a_perp(model, ell + 1), a_perp(model, ell)
        levels[ell] = lowers(S, T)
        invariant_levels[ell] = lowers(S.intersect(inv), T)
        A = graded_piece(model, ell)
        dim = 0
        for d in model.degrees:
            if d == 0 or not A[d].rows:
                continue
            K = A[d]
            for k in range(1, model.n):
                K = K.intersect(a_power(model, ell)[d - 1].preimage(model.y_matrix(d, k)))
            dim += K.rank
        criterion[ell] = dim
    return {
        "m": p.m,
        "n": p.n,
        "dimension": model.dim,
        "levels": levels,
        "holds": all(levels.values()),
        "invariant_levels": invariant_levels,
        "criterion": criterion,
        "criterion_holds": not any(criterion.values()),
    }


# ---------------------------------------------------------------------------
# the spaces S_j and S_{j, perp}

def _ideal_image(prev: IrrepModel, model: IrrepModel) -> GradedSubspace:
    """Image in L_c of the kernel ideal I_{c-1}, degree by degree."""
    pieces = {}
    for d in model.degrees:
        if d > prev.top:
            pieces[d] = Subspace.full(model.dim_at(d))
            continue
        monos = monomials(model.r, d)
        rows = []
        for coeffs in prev.kernels[d].rows:
            q = Poly(model.r, {a: c for a, c in zip(monos, coeffs) if c})
            rows.append(model.reduce(q, d))
        pieces[d] = Subspace(model.dim_at(d), rows)
    return GradedSubspace(model.dims, pieces)


def _lift(model: IrrepModel, j: int, d: int, v: Sequence[Fraction]) -> List[Fraction]:
    """Component of v in (a^{j+1})^perp along a^{j+1}."""
    A = a_power(model, j + 1)[d]
    P = a_perp(model, j + 1)[d]
    basis = list(P.rows) + list(A.rows)
    coeffs = solve_left(basis, v, model.dim_at(d))
    if coeffs is None:
        raise ArithmeticError("a^{j+1} and its orthocomplement do not span")
    out = [ZERO] * model.dim_at(d)
    for a, w in zip(coeffs[: len(P.rows)], P.rows):
        if a:
            out = [x + a * y for x, y in zip(out, w)]
    return out


def _products_lifted(model: IrrepModel, j: int, psis: GradedSubspace) -> GradedSubspace:
    from .irrep import harmonics

    H = harmonics(model)
    rows: Dict[int, list] = {d: [] for d in model.degrees}
    for e in model.degrees:
        for vec in psis[e].rows:
            psi = model.representative(e, vec)
            for d in model.degrees:
                if d + e > model.top or not H[d].rows:
                    continue
                mat = model.mult_matrix(psi, d)
                for h in H[d].rows:
                    w = matvec(mat, h)
                    if any(w):
                        rows[d + e].append(_lift(model, j, d + e, w))
    return GradedSubspace(model.dims, {d: Subspace(model.dim_at(d), rs) for d, rs in rows.items()})


def graded_piece(model: IrrepModel, j: int) -> GradedSubspace:
    """(a^{j+1})^perp intersected with a^j."""
    return a_perp(model, j + 1).intersect(a_power(model, j))


def _ideal_invariants(prev: IrrepModel, model: IrrepModel, j: int) -> GradedSubspace:
    """Classes in L_c of invariant polynomials in I_{c-1} that are sums of products of at least j invariants."""
    rows: Dict[int, list] = {d: [] for d in model.degrees}
    for e in model.degrees:
        lams = [lam for lam in partitions(e, model.n) if min(lam.parts) >= 2 and len(lam) >= j] if e else (
            [Partition(())] if j == 0 else []
        )
        if not lams:
            continue
        polys = []
        for lam in lams:
            q = Poly.const(1, model.n)
            for k in lam.parts:
                q = q * power_sum(k, model.n)
            polys.append(project(q))
        if e <= prev.top:
            vals = [prev.reduce(q, e) for q in polys]
            cols = [[v[i] for v in vals] for i in range(prev.dim_at(e))]
            combos = nullspace(cols, len(polys)) if cols else [
                [Fraction(int(a == b)) for b in range(len(polys))] for a in range(len(polys))
            ]
        else:
            combos = [[Fraction(int(a == b)) for b in range(len(polys))] for a in range(len(polys))]
        images = [model.reduce(q, e) for q in polys]
        for coeffs in combos:
            w = [ZERO] * model.dim_at(e)
            for a, img in zip(coeffs, images):
                if a:
                    w = [x + a * y for x, y in zip(w, img)]
            rows[e].append(w)
    return GradedSubspace(model.dims, {d: Subspace(model.dim_at(d), rs) for d, rs in rows.items()})


def s_spaces(model: IrrepModel, j: int) -> Tuple[GradedSubspace, GradedSubspace, dict]:
    """S_j, S_{j,perp} and a report on how they sit inside (a^{j+1})^perp cap a^j.

    S_j is spanned by the lifts of h psi with h harmonic and psi an invariant
    polynomial of I_{c-1} built from products of at least j invariants.
    S_{j,perp} uses the invariant classes of (a^{j+1})^perp cap a^j that are
    orthogonal to the image of I_{c-1}.
    """
    p = model.param
    if p.m < p.n:
        raise ValueError("S_j is defined for c > 1")
    if j < 0:
        raise ValueError("j must be non-negative")
    prev = build_irrep(CherednikParam(p.m - p.n, p.n))
    piece = graded_piece(model, j)
    psi_in = _ideal_invariants(prev, model, j)
    psi_perp = model.orthogonal(_ideal_image(prev, model)).intersect(model.invariants()).intersect(piece)
    S = _products_lifted(model, j, psi_in)
    S_perp = _products_lifted(model, j, psi_perp)
    report = {
        "j": j,
        "piece": piece.dim,
        "S": S.dim,
        "S_perp": S_perp.dim,
        "inside": piece.contains(S) and piece.contains(S_perp),
        "span": (S + S_perp) == piece,
        "perp_formula": S_perp == model.orthogonal(S).intersect(piece),
    }
    return S, S_perp, report


def late_highest_weight_vectors(model: IrrepModel) -> dict:
    """Highest-weight vectors that miss level 0 of F^a, compared with Fourier images of p_k.

    ``outside`` maps a degree to the dimension of ker(e) modulo ker(e) cap F^a_0.
    ``power_sums`` maps k to (degree, F^a level, lies in ker e, spans the
    complement in that degree) for the Fourier image of p_k.
    """
    Fa = filtration_a(model)
    hw = highest_weight_space(model)
    L0 = Fa.level(0)
    outside = {}
    for d in model.degrees:
        gap = hw[d].rank - hw[d].intersect(L0[d]).rank
        if gap:
            outside[d] = gap
    power_sums = {}
    for k in range(2, model.n + 1):
        if k > model.top:
            continue
        v = model.reduce(project(power_sum(k, model.n)), k)
        if not any(v):
            continue
        d = 2 * model.mu - k
        w = matvec(model.fourier_matrix(k), v)
        if not any(w):
            continue
        spans = hw[d].contains(w) and (hw[d].intersect(L0[d]) + Subspace(model.dim_at(d), [w])) == hw[d]
        power_sums[k] = (d, Fa.level_of(d, w), hw[d].contains(w), spans)
    return {"m": model.m, "n": model.n, "outside": outside, "power_sums": power_sums}


def invariant_alg_levels(model: IrrepModel) -> Dict[int, List[int]]:
    """Degree -> F^alg levels of a basis of the invariant classes in that degree."""
    Falg = filtration_alg(model)
    inv = model.invariants()
    return {d: sorted(Falg.level_of(d, v) for v in inv[d].rows) for d in model.degrees if inv[d].rows}
